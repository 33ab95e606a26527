//! Scalar numerics shared by the physics modules: adaptive Gauss–Legendre
//! quadrature, finite differences on uniform grids, peak detection, and dense
//! determinants of shifted Toeplitz matrices.

use crate::{Error, Result};

/// Nodes and weights of the 10-point Gauss–Legendre rule on [-1, 1].
const GL10_NODES: [f64; 5] = [
    0.148_874_338_981_631_21,
    0.433_395_394_129_247_2,
    0.679_409_568_299_024_4,
    0.865_063_366_688_984_5,
    0.973_906_528_517_171_7,
];
const GL10_WEIGHTS: [f64; 5] = [
    0.295_524_224_714_752_87,
    0.269_266_719_309_996_36,
    0.219_086_362_515_982_04,
    0.149_451_349_150_580_59,
    0.066_671_344_308_688_14,
];

const MAX_DEPTH: u32 = 30;

/// A uniform, strictly increasing 1D grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
    pub values: Vec<f64>,
}

impl Grid1D {
    /// Builds the grid start, start+step, ... with the last value ≤ stop.
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) {
            return Err(Error::Argument(format!("grid step must be > 0, got {step}")));
        }
        if stop < start {
            return Err(Error::Argument(format!(
                "grid stop {stop} is below start {start}"
            )));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        let values: Vec<f64> = (0..count).map(|i| start + i as f64 * step).collect();
        Ok(Grid1D {
            start,
            stop,
            step,
            values,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Kind of feature reported by [`find_peaks`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeakKind {
    Maximum,
    /// Single-point spike much taller than both neighbours, the grid
    /// signature of a divergence rather than a smooth maximum.
    DiscontinuityCandidate,
}

/// An interior local maximum of |series|.
#[derive(Debug, Clone, PartialEq)]
pub struct PeakReport {
    pub index: usize,
    pub location: f64,
    pub height: f64,
    pub kind: PeakKind,
}

/// Adaptive bisection over 10-point Gauss–Legendre panels.
///
/// A panel is accepted when the two-half refinement agrees with the single
/// panel to within the panel's share of `abs_tol`. If the maximum subdivision
/// depth is reached the leftover error estimates are accumulated; when they
/// exceed `abs_tol` the best estimate is reported through
/// [`Error::QuadratureBudget`].
pub fn integrate_adaptive<F>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a < b) {
        return Err(Error::Argument(format!(
            "integration bounds must satisfy a < b, got [{a}, {b}]"
        )));
    }
    if !(abs_tol > 0.0) {
        return Err(Error::Argument(format!(
            "quadrature tolerance must be > 0, got {abs_tol}"
        )));
    }
    let mut leftover = 0.0;
    let whole = gl10_panel(&f, a, b);
    let value = adapt(&f, a, b, whole, abs_tol, 0, &mut leftover);
    if leftover > abs_tol {
        return Err(Error::QuadratureBudget {
            best: value,
            error_bound: leftover,
            tolerance: abs_tol,
        });
    }
    Ok(value)
}

fn gl10_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (&x, &w) in GL10_NODES.iter().zip(&GL10_WEIGHTS) {
        sum += w * (f(mid - half * x) + f(mid + half * x));
    }
    sum * half
}

fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    leftover: &mut f64,
) -> f64 {
    let mid = 0.5 * (a + b);
    let left = gl10_panel(f, a, mid);
    let right = gl10_panel(f, mid, b);
    let refined = left + right;
    let err = (refined - whole).abs();
    if err <= tol {
        return refined;
    }
    if depth >= MAX_DEPTH {
        *leftover += err;
        return refined;
    }
    adapt(f, a, mid, left, 0.5 * tol, depth + 1, leftover)
        + adapt(f, mid, b, right, 0.5 * tol, depth + 1, leftover)
}

/// Symmetric two-point differences at interior points, one-sided at the ends.
pub fn central_derivative(xs: &Grid1D, ys: &[f64]) -> Result<Vec<f64>> {
    let n = xs.len();
    if ys.len() != n {
        return Err(Error::Argument(format!(
            "length mismatch: grid has {n} points, series has {}",
            ys.len()
        )));
    }
    if n < 3 {
        return Err(Error::Argument(format!(
            "derivative needs at least 3 points, got {n}"
        )));
    }
    let h = xs.step;
    let mut out = Vec::with_capacity(n);
    out.push((ys[1] - ys[0]) / h);
    for i in 1..n - 1 {
        out.push((ys[i + 1] - ys[i - 1]) / (2.0 * h));
    }
    out.push((ys[n - 1] - ys[n - 2]) / h);
    Ok(out)
}

/// Prominence default used across the crate: 5× the median of |series|.
pub fn default_prominence(ys: &[f64]) -> f64 {
    if ys.is_empty() {
        return 0.0;
    }
    let mut abs: Vec<f64> = ys.iter().map(|y| y.abs()).collect();
    abs.sort_by(|a, b| a.total_cmp(b));
    5.0 * abs[abs.len() / 2]
}

/// Interior local maxima of |ys| with at least the requested prominence,
/// sorted by location.
///
/// Prominence of a peak is its height above the higher of the two minima
/// separating it from the nearest taller point (or grid edge) on each side.
pub fn find_peaks(xs: &Grid1D, ys: &[f64], prominence: f64) -> Result<Vec<PeakReport>> {
    if ys.len() != xs.len() {
        return Err(Error::Argument(format!(
            "length mismatch: grid has {} points, series has {}",
            xs.len(),
            ys.len()
        )));
    }
    if prominence < 0.0 {
        return Err(Error::Argument(format!(
            "prominence must be ≥ 0, got {prominence}"
        )));
    }
    let abs: Vec<f64> = ys.iter().map(|y| y.abs()).collect();
    let n = abs.len();
    let mut peaks = Vec::new();
    for i in 1..n.saturating_sub(1) {
        if !(abs[i] > abs[i - 1] && abs[i] > abs[i + 1]) {
            continue;
        }
        let mut left_min = abs[i - 1];
        let mut j = i;
        while j > 0 && abs[j - 1] <= abs[i] {
            j -= 1;
            left_min = left_min.min(abs[j]);
        }
        let mut right_min = abs[i + 1];
        let mut j = i;
        while j + 1 < n && abs[j + 1] <= abs[i] {
            j += 1;
            right_min = right_min.min(abs[j]);
        }
        let prom = abs[i] - left_min.max(right_min);
        if prom < prominence {
            continue;
        }
        let kind = if abs[i] >= 1.5 * abs[i - 1].max(abs[i + 1]) {
            PeakKind::DiscontinuityCandidate
        } else {
            PeakKind::Maximum
        };
        peaks.push(PeakReport {
            index: i,
            location: xs.values[i],
            height: ys[i],
            kind,
        });
    }
    Ok(peaks)
}

/// det(A) with A[i][j] = gen(i − j + shift) for 1-based i, j, by dense LU
/// with partial pivoting. The xx and yy spin correlators are determinants of
/// this form with shift = −1 and +1 over the G/g kernels.
pub fn shifted_toeplitz_det<F>(gen: F, n: usize, shift: i64) -> Result<f64>
where
    F: Fn(i64) -> f64,
{
    if n == 0 {
        return Err(Error::Argument("Toeplitz determinant needs n ≥ 1".into()));
    }
    let mut a: Vec<f64> = (0..n * n)
        .map(|idx| {
            let (i, j) = ((idx / n) as i64, (idx % n) as i64);
            gen(i - j + shift)
        })
        .collect();
    let mut det = 1.0;
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if a[row * n + col].abs() > a[pivot * n + col].abs() {
                pivot = row;
            }
        }
        if a[pivot * n + col] == 0.0 {
            return Ok(0.0);
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
            }
            det = -det;
        }
        let d = a[col * n + col];
        det *= d;
        for row in col + 1..n {
            let factor = a[row * n + col] / d;
            for k in col..n {
                a[row * n + k] -= factor * a[col * n + k];
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn integrates_sine_over_half_period() {
        let v = integrate_adaptive(f64::sin, 0.0, PI, 1e-10).unwrap();
        assert!((v - 2.0).abs() <= 1e-10);
    }

    #[test]
    fn integrates_orthogonal_cosine_to_zero() {
        let v = integrate_adaptive(|x| (2.0 * x).cos(), 0.0, PI, 1e-10).unwrap();
        assert!(v.abs() <= 1e-10);
    }

    #[test]
    fn integrates_flat_magnetization_integrand() {
        // λ=0, T=0 magnetization integrand of the XY chain up to sign.
        let v = integrate_adaptive(|_| 1.0 / (2.0 * PI * 0.5), 0.0, PI, 1e-10).unwrap();
        assert!((v - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn rejects_bad_bounds_and_tolerance() {
        assert!(integrate_adaptive(f64::sin, 1.0, 0.0, 1e-10).is_err());
        assert!(integrate_adaptive(f64::sin, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn derivative_of_quadratic_is_exact_inside() {
        let xs = Grid1D::new(0.0, 2.0, 0.1).unwrap();
        let ys: Vec<f64> = xs.values.iter().map(|x| x * x).collect();
        let d = central_derivative(&xs, &ys).unwrap();
        assert_eq!(d.len(), xs.len());
        for i in 1..xs.len() - 1 {
            assert!((d[i] - 2.0 * xs.values[i]).abs() <= 1e-10);
        }
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let xs = Grid1D::new(0.0, 1.0, 0.1).unwrap();
        let d = central_derivative(&xs, &vec![3.5; xs.len()]).unwrap();
        assert!(d.iter().all(|v| v.abs() <= 1e-12));
    }

    #[test]
    fn derivative_of_kink_straddles_the_corner() {
        let xs = Grid1D::new(0.0, 2.0, 0.01).unwrap();
        let ys: Vec<f64> = xs.values.iter().map(|x| (x - 1.0).abs()).collect();
        let d = central_derivative(&xs, &ys).unwrap();
        for (i, &x) in xs.values.iter().enumerate().skip(1).take(xs.len() - 2) {
            if (x - 1.0).abs() < 1e-12 {
                assert!(d[i].abs() <= 1e-10);
            } else if x < 1.0 - 1e-12 {
                assert!((d[i] + 1.0).abs() <= 1e-10);
            } else if x > 1.0 + 1e-12 {
                assert!((d[i] - 1.0).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn derivative_rejects_length_mismatch() {
        let xs = Grid1D::new(0.0, 1.0, 0.1).unwrap();
        assert!(central_derivative(&xs, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn finds_single_gaussian_bump() {
        let xs = Grid1D::new(0.0, 2.0, 0.01).unwrap();
        let ys: Vec<f64> = xs
            .values
            .iter()
            .map(|x| (-(x - 1.0) * (x - 1.0) / 0.02).exp())
            .collect();
        let peaks = find_peaks(&xs, &ys, 0.1).unwrap();
        assert_eq!(peaks.len(), 1);
        assert!((peaks[0].location - 1.0).abs() <= 0.011);
        assert_eq!(peaks[0].height, ys[peaks[0].index]);
    }

    #[test]
    fn constant_series_has_no_peaks() {
        let xs = Grid1D::new(0.0, 1.0, 0.05).unwrap();
        let peaks = find_peaks(&xs, &vec![0.7; xs.len()], 0.01).unwrap();
        assert!(peaks.is_empty());
    }

    #[test]
    fn two_bumps_come_out_in_location_order() {
        let xs = Grid1D::new(0.0, 2.0, 0.01).unwrap();
        let ys: Vec<f64> = xs
            .values
            .iter()
            .map(|x| {
                (-(x - 0.5) * (x - 0.5) / 0.01).exp() + (-(x - 1.5) * (x - 1.5) / 0.01).exp()
            })
            .collect();
        let peaks = find_peaks(&xs, &ys, 0.1).unwrap();
        assert_eq!(peaks.len(), 2);
        assert!(peaks[0].location < peaks[1].location);
        assert!((peaks[0].location - 0.5).abs() <= 0.011);
        assert!((peaks[1].location - 1.5).abs() <= 0.011);
    }

    #[test]
    fn toeplitz_det_1x1_is_the_generator_value() {
        let v = shifted_toeplitz_det(|k| k as f64 + 10.0, 1, -1).unwrap();
        assert_eq!(v, 9.0);
    }

    #[test]
    fn toeplitz_det_identity_kernel() {
        for n in 1..=6 {
            let v = shifted_toeplitz_det(|k| if k == 0 { 1.0 } else { 0.0 }, n, 0).unwrap();
            assert!((v - 1.0).abs() <= 1e-14);
        }
    }

    #[test]
    fn toeplitz_det_2x2_shift_plus_one() {
        let (a, b, c) = (0.3, -0.7, 1.1);
        let gen = |k: i64| match k {
            1 => a,
            0 => b,
            2 => c,
            _ => 0.0,
        };
        let v = shifted_toeplitz_det(gen, 2, 1).unwrap();
        assert!((v - (a * a - b * c)).abs() <= 1e-14);
    }

    /// Cofactor-expansion determinant, the independent check for the LU path.
    fn naive_det(m: &[Vec<f64>]) -> f64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        let mut det = 0.0;
        for j in 0..n {
            let minor: Vec<Vec<f64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            det += sign * m[0][j] * naive_det(&minor);
        }
        det
    }

    #[test]
    fn toeplitz_det_matches_cofactor_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let n = rng.gen_range(1..=5usize);
            let shift = rng.gen_range(-2..=2i64);
            let kernel: Vec<f64> = (0..16).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let gen = |k: i64| kernel[(k + 8) as usize];
            let lu = shifted_toeplitz_det(gen, n, shift).unwrap();
            let full: Vec<Vec<f64>> = (0..n)
                .map(|i| (0..n).map(|j| gen(i as i64 - j as i64 + shift)).collect())
                .collect();
            let reference = naive_det(&full);
            assert!(
                (lu - reference).abs() <= 1e-10 * reference.abs().max(1.0),
                "n={n} shift={shift}: {lu} vs {reference}"
            );
        }
    }

    #[test]
    fn quadrature_is_linear_in_the_integrand() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let c: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let d: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let (s, t) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let f = |x: f64| c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x;
            let g = |x: f64| d[0] + d[1] * x + d[2] * x * x + d[3] * x * x * x;
            let tol = 1e-10;
            let lhs = integrate_adaptive(|x| s * f(x) + t * g(x), 0.0, 2.0, tol).unwrap();
            let rhs = s * integrate_adaptive(f, 0.0, 2.0, tol).unwrap()
                + t * integrate_adaptive(g, 0.0, 2.0, tol).unwrap();
            assert!((lhs - rhs).abs() <= 2.0 * tol * (1.0 + s.abs() + t.abs()));
        }
    }

    #[test]
    fn peaks_are_sign_symmetric() {
        let xs = Grid1D::new(0.0, 2.0, 0.01).unwrap();
        let ys: Vec<f64> = xs
            .values
            .iter()
            .map(|x| (-(x - 1.0) * (x - 1.0) / 0.02).exp() + 0.1 * x)
            .collect();
        let neg: Vec<f64> = ys.iter().map(|y| -y).collect();
        let p1 = find_peaks(&xs, &ys, 0.2).unwrap();
        let p2 = find_peaks(&xs, &neg, 0.2).unwrap();
        assert_eq!(p1.len(), p2.len());
        for (a, b) in p1.iter().zip(&p2) {
            assert_eq!(a.index, b.index);
            assert_eq!(a.height, -b.height);
        }
    }
}
