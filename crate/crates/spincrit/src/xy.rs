//! Thermodynamic-limit correlation functions of the XY chain: the one-site
//! z-magnetization, the G_n kernel, and the xx/yy/zz two-site correlators as
//! shifted Toeplitz determinants over G.
//!
//! The zero-temperature limit is taken as tanh(βω) ≡ 1 (β → ∞). All
//! integrals run over φ ∈ [0, π]; when the dispersion has an interior zero
//! (γ = 0, λ > 1) the domain is split there so the adaptive quadrature only
//! ever sees smooth pieces.

use std::f64::consts::PI;

use crate::numerics::{integrate_adaptive, shifted_toeplitz_det};
use crate::state::CorrelatorSet;
use crate::{Result, Temperature};

pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

/// Parameters of the XY chain in the thermodynamic limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XYParams {
    /// Anisotropy γ ∈ [0, 1].
    pub gamma: f64,
    /// Field parameter λ ≥ 0; the chain is critical at λ = 1.
    pub lambda: f64,
    pub temperature: Temperature,
    pub quad_tol: f64,
}

impl XYParams {
    pub fn new(gamma: f64, lambda: f64, temperature: Temperature) -> Self {
        XYParams {
            gamma,
            lambda,
            temperature,
            quad_tol: DEFAULT_QUAD_TOL,
        }
    }
}

/// Dispersion ω_φ = √((γλ sinφ)² + (1 + λ cosφ)²)/2.
pub fn omega(phi: f64, p: &XYParams) -> f64 {
    let a = p.gamma * p.lambda * phi.sin();
    let b = 1.0 + p.lambda * phi.cos();
    (a * a + b * b).sqrt() / 2.0
}

/// tanh(βω)/ω with the finite-β limit β at ω → 0; at T = 0 a vanishing gap
/// contributes nothing (measure zero on the integration domain).
fn thermal_kernel(omega: f64, temperature: Temperature) -> f64 {
    if omega < 1e-14 {
        return match temperature {
            Temperature::Zero => 0.0,
            Temperature::InverseBeta(beta) => beta,
        };
    }
    temperature.thermal_factor(omega) / omega
}

/// Interior points where ω_φ vanishes, used as quadrature breakpoints.
fn dispersion_zeros(p: &XYParams) -> Vec<f64> {
    if p.gamma == 0.0 && p.lambda > 1.0 {
        vec![(-1.0 / p.lambda).acos()]
    } else {
        Vec::new()
    }
}

fn integrate_split<F: Fn(f64) -> f64>(f: F, p: &XYParams) -> Result<f64> {
    let zeros = dispersion_zeros(p);
    let mut bounds = vec![0.0];
    bounds.extend(zeros);
    bounds.push(PI);
    let tol = p.quad_tol / (bounds.len() - 1) as f64;
    let mut total = 0.0;
    for pair in bounds.windows(2) {
        total += integrate_adaptive(&f, pair[0], pair[1], tol)?;
    }
    Ok(total)
}

/// ⟨σ^z⟩ = −∫₀^π (1 + λcosφ)·tanh(βω_φ)/(2π ω_φ) dφ.
pub fn xy_magnetization(p: &XYParams) -> Result<f64> {
    integrate_split(
        |phi| {
            let w = omega(phi, p);
            -(1.0 + p.lambda * phi.cos()) * thermal_kernel(w, p.temperature) / (2.0 * PI)
        },
        p,
    )
}

/// G_n = ∫₀^π tanh(βω_φ)/(2π ω_φ)·[cos(nφ)(1 + λcosφ) − γλ sin(nφ) sinφ] dφ.
pub fn xy_g(n: i64, p: &XYParams) -> Result<f64> {
    let nf = n as f64;
    integrate_split(
        |phi| {
            let w = omega(phi, p);
            let bracket = (nf * phi).cos() * (1.0 + p.lambda * phi.cos())
                - p.gamma * p.lambda * (nf * phi).sin() * phi.sin();
            bracket * thermal_kernel(w, p.temperature) / (2.0 * PI)
        },
        p,
    )
}

/// Two-site correlators at separation n: the xx and yy Toeplitz determinants
/// over G, and zz = ⟨σ^z⟩² − G_n·G_{−n}.
pub fn xy_correlators(n: usize, p: &XYParams) -> Result<CorrelatorSet> {
    if n == 0 || n > 32 {
        return Err(crate::Error::Argument(format!(
            "site separation must be in 1..=32, got {n}"
        )));
    }
    let ni = n as i64;
    // every determinant entry reuses this kernel cache
    let mut g = Vec::with_capacity(2 * n + 1);
    for k in -ni..=ni {
        g.push(xy_g(k, p)?);
    }
    let gen = |k: i64| g[(k + ni) as usize];
    let sig_z = xy_magnetization(p)?;
    let xx = shifted_toeplitz_det(gen, n, -1)?;
    let yy = shifted_toeplitz_det(gen, n, 1)?;
    let zz = sig_z * sig_z - gen(ni) * gen(-ni);
    Ok(CorrelatorSet {
        n,
        sig_z,
        xx,
        yy,
        zz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::build_rho;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn zero_t(gamma: f64, lambda: f64) -> XYParams {
        XYParams::new(gamma, lambda, Temperature::Zero)
    }

    #[test]
    fn omega_reference_values() {
        assert!((omega(0.3, &zero_t(0.7, 0.0)) - 0.5).abs() <= 1e-15);
        assert!(omega(PI, &zero_t(0.4, 1.0)).abs() <= 1e-15);
        assert!((omega(PI / 2.0, &zero_t(0.0, 2.0)) - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn magnetization_of_the_free_chain() {
        let p = zero_t(0.5, 0.0);
        let m = xy_magnetization(&p).unwrap();
        assert!((m + 1.0).abs() <= p.quad_tol * 10.0);
    }

    #[test]
    fn magnetization_vanishes_at_infinite_temperature() {
        let p = XYParams::new(0.5, 0.8, Temperature::InverseBeta(1e-6));
        assert!(xy_magnetization(&p).unwrap().abs() <= 1e-5);
    }

    #[test]
    fn magnetization_is_minus_g0() {
        let p = zero_t(1.0, 0.5);
        let m = xy_magnetization(&p).unwrap();
        let g0 = xy_g(0, &p).unwrap();
        assert!((m + g0).abs() <= 2.0 * p.quad_tol);
    }

    #[test]
    fn g_kernel_of_the_free_chain() {
        let p = zero_t(0.3, 0.0);
        assert!((xy_g(0, &p).unwrap() - 1.0).abs() <= 1e-9);
        assert!(xy_g(1, &p).unwrap().abs() <= 1e-9);
        assert!(xy_g(-1, &p).unwrap().abs() <= 1e-9);
    }

    #[test]
    fn g_kernel_is_even_in_n_for_the_xx_chain() {
        for lambda in [0.4, 1.3, 2.0] {
            let p = zero_t(0.0, lambda);
            for n in 1..=4i64 {
                let plus = xy_g(n, &p).unwrap();
                let minus = xy_g(-n, &p).unwrap();
                assert!((plus - minus).abs() <= 1e-9, "λ={lambda} n={n}");
            }
        }
    }

    #[test]
    fn g_kernel_matches_fixed_composite_quadrature() {
        // independent oracle: 10^6-panel midpoint Gauss-2 composite rule
        let p = zero_t(1.0, 1.0);
        let computed = xy_g(1, &p).unwrap();
        let f = |phi: f64| {
            let w = omega(phi, &p);
            if w < 1e-14 {
                return 0.0;
            }
            (phi.cos() * (1.0 + phi.cos()) - phi.sin() * phi.sin()) / (2.0 * PI * w)
        };
        let panels = 1_000_000usize;
        let h = PI / panels as f64;
        let node = 1.0 / 3.0f64.sqrt();
        let mut oracle = 0.0;
        for i in 0..panels {
            let mid = (i as f64 + 0.5) * h;
            oracle += 0.5 * h * (f(mid - 0.5 * h * node) + f(mid + 0.5 * h * node));
        }
        assert!((computed - oracle).abs() <= 1e-8, "{computed} vs {oracle}");
    }

    #[test]
    fn free_chain_correlators_are_fully_polarized() {
        let p = zero_t(0.8, 0.0);
        let c = xy_correlators(1, &p).unwrap();
        assert!((c.sig_z + 1.0).abs() <= 1e-9);
        assert!(c.xx.abs() <= 1e-9);
        assert!(c.yy.abs() <= 1e-9);
        assert!((c.zz - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn xx_equals_yy_without_anisotropy() {
        for lambda in [0.5, 1.5, 2.2] {
            for n in 1..=3usize {
                let c = xy_correlators(n, &zero_t(0.0, lambda)).unwrap();
                assert!((c.xx - c.yy).abs() <= 1e-8, "λ={lambda} n={n}");
            }
        }
    }

    #[test]
    fn zz_identity_holds_by_construction() {
        let p = zero_t(0.6, 1.2);
        let c = xy_correlators(2, &p).unwrap();
        let g2 = xy_g(2, &p).unwrap();
        let gm2 = xy_g(-2, &p).unwrap();
        assert!((c.zz + g2 * gm2 - c.sig_z * c.sig_z).abs() <= 1e-14);
    }

    #[test]
    fn infinite_temperature_kills_all_correlators() {
        let p = XYParams::new(0.7, 1.1, Temperature::InverseBeta(1e-6));
        let c = xy_correlators(1, &p).unwrap();
        for v in [c.sig_z, c.xx, c.yy, c.zz] {
            assert!(v.abs() <= 1e-4);
        }
    }

    #[test]
    fn correlators_build_physical_states_across_the_plane() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..12 {
            let gamma = rng.gen_range(0.0..=1.0);
            let lambda = rng.gen_range(0.0..2.5);
            let n = rng.gen_range(1..=3usize);
            let c = xy_correlators(n, &zero_t(gamma, lambda)).unwrap();
            for v in [c.sig_z, c.xx, c.yy, c.zz] {
                assert!((-1.0 - 1e-9..=1.0 + 1e-9).contains(&v), "γ={gamma} λ={lambda}");
            }
            build_rho(&c).unwrap();
        }
    }

    #[test]
    fn separation_bounds_are_enforced() {
        let p = zero_t(0.5, 0.5);
        assert!(xy_correlators(0, &p).is_err());
        assert!(xy_correlators(33, &p).is_err());
    }
}
