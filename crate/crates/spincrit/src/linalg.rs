//! Small dense Hermitian linear algebra: eigendecomposition, PSD square
//! root, and bipartite partial trace.
//!
//! Two eigensolver regimes are used. Dimensions up to 16 (the 4×4 two-site
//! states and the 3×3 W matrix) go through a cyclic complex Jacobi sweep,
//! which is robust and deterministic. Larger matrices — the real symmetric
//! exact-diagonalization Hamiltonians up to 1024×1024 — go through
//! Householder tridiagonalization followed by implicit-shift QL.

use num_complex::Complex64;

use crate::{Error, Result};

const JACOBI_DIM_LIMIT: usize = 16;

/// Dense Hermitian matrix, row-major complex storage.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(dim: usize) -> Self {
        HermitianMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(dim: usize, mut f: F) -> Self {
        let data = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        HermitianMatrix { dim, data }
    }

    pub fn from_real_fn<F: FnMut(usize, usize) -> f64>(dim: usize, mut f: F) -> Self {
        Self::from_fn(dim, |i, j| Complex64::new(f(i, j), 0.0))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] += v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest deviation |a_ij − conj(a_ji)| over all entries.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Largest imaginary part over all entries.
    pub fn max_imag(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, z| m.max(z.im.abs()))
    }

    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).norm()))
    }

    pub fn matmul(&self, other: &HermitianMatrix) -> HermitianMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = HermitianMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn scaled(&self, factor: f64) -> HermitianMatrix {
        HermitianMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// Kronecker product, `self` acting on the first factor.
    pub fn kron(&self, other: &HermitianMatrix) -> HermitianMatrix {
        let (da, db) = (self.dim, other.dim);
        HermitianMatrix::from_fn(da * db, |i, j| {
            self.get(i / db, j / db) * other.get(i % db, j % db)
        })
    }

    fn check_hermitian(&self) -> Result<()> {
        let res = self.hermiticity_residual();
        if res > 1e-9 {
            return Err(Error::Argument(format!(
                "matrix is not Hermitian: residual {res:.3e}"
            )));
        }
        Ok(())
    }
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending and
/// eigenvectors stored as orthonormal columns.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

impl SpectralDecomposition {
    /// V·diag(λ)·V†, for reconstruction checks.
    pub fn reconstruct(&self) -> HermitianMatrix {
        let n = self.eigenvalues.len();
        HermitianMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| self.vectors[k][i] * self.eigenvalues[k] * self.vectors[k][j].conj())
                .sum()
        })
    }
}

/// Which subsystem [`partial_trace`] keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keep {
    A,
    B,
}

/// Eigendecomposition with ascending eigenvalues and a fixed phase
/// convention (first significant component of each eigenvector made real
/// positive), so identical inputs give identical outputs.
pub fn eigh(h: &HermitianMatrix) -> Result<SpectralDecomposition> {
    h.check_hermitian()?;
    let n = h.dim;
    if n == 0 {
        return Err(Error::Argument("empty matrix".into()));
    }
    let (mut eigenvalues, mut vectors) = if n <= JACOBI_DIM_LIMIT || h.max_imag() > 1e-13 {
        jacobi_hermitian(h)
    } else {
        let (vals, vecs) = real_symmetric_evd(h);
        (
            vals,
            vecs.into_iter()
                .map(|col| col.into_iter().map(|x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    };

    // Ascending sort, stable so degenerate blocks keep the solver's order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eigenvalues[a].total_cmp(&eigenvalues[b]));
    eigenvalues = order.iter().map(|&k| eigenvalues[k]).collect();
    vectors = order.iter().map(|&k| std::mem::take(&mut vectors[k])).collect();

    for v in &mut vectors {
        fix_phase(v);
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        vectors,
    })
}

fn fix_phase(v: &mut [Complex64]) {
    let max = v.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    if max == 0.0 {
        return;
    }
    if let Some(lead) = v.iter().find(|z| z.norm() > 1e-12 * max) {
        let phase = lead.conj() / lead.norm();
        for z in v.iter_mut() {
            *z *= phase;
        }
    }
}

/// Cyclic Jacobi for complex Hermitian matrices. Returns unsorted
/// eigenvalues and eigenvector columns.
fn jacobi_hermitian(h: &HermitianMatrix) -> (Vec<f64>, Vec<Vec<Complex64>>) {
    let n = h.dim;
    // Symmetrize so round-off in the input cannot stall convergence.
    let mut a = HermitianMatrix::from_fn(n, |i, j| 0.5 * (h.get(i, j) + h.get(j, i).conj()));
    let mut v = HermitianMatrix::identity(n);
    let scale = a.data.iter().fold(0.0f64, |m, z| m.max(z.norm())).max(1.0);

    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off += a.get(p, q).norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale * n as f64 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r <= 1e-300 {
                    continue;
                }
                let phase = apq / r; // e^{iφ}
                let tau = (a.get(q, q).re - a.get(p, p).re) / (2.0 * r);
                // smaller-magnitude root of t² − 2τt − 1 = 0, written in the
                // cancellation-free form (τ − √(τ²+1) loses all digits for
                // large |τ| and stalls convergence)
                let t = -tau.signum() / (tau.abs() + (tau * tau + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // U = [[c, -s], [s e^{-iφ}, c e^{-iφ}]] on the (p, q) plane.
                let u21 = s * phase.conj();
                let u22 = c * phase.conj();
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, akp * c + akq * u21);
                    a.set(k, q, akp * (-s) + akq * u22);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, apk * c + aqk * u21.conj());
                    a.set(q, k, apk * (-s) + aqk * u22.conj());
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, vkp * c + vkq * u21);
                    v.set(k, q, vkp * (-s) + vkq * u22);
                }
            }
        }
    }

    let eigenvalues: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    let vectors: Vec<Vec<Complex64>> = (0..n)
        .map(|col| (0..n).map(|row| v.get(row, col)).collect())
        .collect();
    (eigenvalues, vectors)
}

/// Householder tridiagonalization + implicit-shift QL for real symmetric
/// matrices (tred2/tql2 lineage). Returns unsorted eigenvalues and
/// eigenvector columns.
fn real_symmetric_evd(h: &HermitianMatrix) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = h.dim;
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (h.get(i, j).re + h.get(j, i).re)).collect())
        .collect();
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];

    // tred2: Householder reduction to tridiagonal form with accumulation.
    for j in 0..n {
        d[j] = v[n - 1][j];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut hh = 0.0;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                hh += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = hh.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            hh -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in j + 1..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= hh;
                f += e[j] * d[j];
            }
            let correction = f / (hh + hh);
            for j in 0..i {
                e[j] -= correction * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = hh;
    }
    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let hh = d[i + 1];
        if hh != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / hh;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k][i + 1] * v[k][j];
                }
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k][i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;

    // tql2: implicit-shift QL on the tridiagonal form.
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            for _iter in 0..50 {
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut hsh = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= hsh;
                }
                f += hsh;
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let gg = c * e[i];
                    hsh = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * gg;
                    d[i + 1] = hsh + s * (c * gg + s * d[i]);
                    for vk in v.iter_mut().take(n) {
                        let hv = vk[i + 1];
                        vk[i + 1] = s * vk[i] + c * hv;
                        vk[i] = c * vk[i] - s * hv;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
            d[l] += f;
            e[l] = 0.0;
        } else {
            d[l] += f;
            e[l] = 0.0;
        }
    }

    let vectors: Vec<Vec<f64>> = (0..n)
        .map(|col| (0..n).map(|row| v[row][col]).collect())
        .collect();
    (d, vectors)
}

/// Σ √max(λᵢ, 0) vᵢvᵢ†, with eigenvalues in [−neg_tol, 0) clamped to zero.
pub fn psd_sqrt(rho: &HermitianMatrix, neg_tol: f64) -> Result<HermitianMatrix> {
    let spec = eigh(rho)?;
    if let Some(&bad) = spec.eigenvalues.iter().find(|&&l| l < -neg_tol) {
        return Err(Error::NotPositiveSemidefinite { eigenvalue: bad });
    }
    let n = rho.dim;
    let roots: Vec<f64> = spec.eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect();
    Ok(HermitianMatrix::from_fn(n, |i, j| {
        (0..n)
            .map(|k| spec.vectors[k][i] * roots[k] * spec.vectors[k][j].conj())
            .sum()
    }))
}

/// Default eigenvalue-negativity tolerance used by the PSD clipping policy.
pub const DEFAULT_NEG_TOL: f64 = 1e-10;

/// Pauli matrix σ_k for k = 1 (x), 2 (y), 3 (z), with σ^z|0⟩ = +|0⟩.
pub fn pauli(k: usize) -> HermitianMatrix {
    let mut m = HermitianMatrix::zeros(2);
    match k {
        1 => {
            m.set(0, 1, Complex64::new(1.0, 0.0));
            m.set(1, 0, Complex64::new(1.0, 0.0));
        }
        2 => {
            m.set(0, 1, Complex64::new(0.0, -1.0));
            m.set(1, 0, Complex64::new(0.0, 1.0));
        }
        3 => {
            m.set(0, 0, Complex64::new(1.0, 0.0));
            m.set(1, 1, Complex64::new(-1.0, 0.0));
        }
        _ => panic!("pauli index must be 1, 2 or 3"),
    }
    m
}

/// Partial trace of a state on a d_A ⊗ d_B space.
pub fn partial_trace(
    rho: &HermitianMatrix,
    keep: Keep,
    d_a: usize,
    d_b: usize,
) -> Result<HermitianMatrix> {
    if rho.dim() != d_a * d_b {
        return Err(Error::Argument(format!(
            "dimension mismatch: matrix is {}×{} but d_A·d_B = {}",
            rho.dim(),
            rho.dim(),
            d_a * d_b
        )));
    }
    rho.check_hermitian()?;
    let out = match keep {
        Keep::A => HermitianMatrix::from_fn(d_a, |a, a2| {
            (0..d_b).map(|b| rho.get(a * d_b + b, a2 * d_b + b)).sum()
        }),
        Keep::B => HermitianMatrix::from_fn(d_b, |b, b2| {
            (0..d_a).map(|a| rho.get(a * d_b + b, a * d_b + b2)).sum()
        }),
    };
    Ok(out)
}
