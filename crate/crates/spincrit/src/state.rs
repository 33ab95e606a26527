//! Assembly and validation of the two-site reduced density matrix from a set
//! of spin correlators.
//!
//! Basis order is |00⟩, |01⟩, |10⟩, |11⟩ with σ^z|0⟩ = +|0⟩; every pinned
//! value downstream depends on this convention.

use num_complex::Complex64;
use rand::Rng;

use crate::linalg::{self, HermitianMatrix};
use crate::{Error, Result};

/// Eigenvalue floor below which a built state is rejected as unphysical.
pub const STATE_NEG_TOL: f64 = 1e-8;

/// One-site magnetization and the three two-site correlators at separation n.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CorrelatorSet {
    /// Site separation.
    pub n: usize,
    /// ⟨σ^z⟩ one-site magnetization.
    pub sig_z: f64,
    /// ⟨σ^x_0 σ^x_n⟩
    pub xx: f64,
    /// ⟨σ^y_0 σ^y_n⟩
    pub yy: f64,
    /// ⟨σ^z_0 σ^z_n⟩
    pub zz: f64,
}

/// 4×4 two-site reduced density matrix together with the correlators it was
/// built from.
#[derive(Debug, Clone)]
pub struct TwoSiteState {
    pub matrix: HermitianMatrix,
    pub source: CorrelatorSet,
}

/// Residuals reported by [`state_diagnostics`].
#[derive(Debug, Clone, Copy)]
pub struct StateDiagnostics {
    pub trace_deviation: f64,
    pub min_eigenvalue: f64,
    pub x_structure_residual: f64,
}

/// ¼[I + sig_z(σ^z⊗I + I⊗σ^z) + xx·σ^x⊗σ^x + yy·σ^y⊗σ^y + zz·σ^z⊗σ^z].
///
/// Fails when the correlators produce a state with an eigenvalue below
/// −1e−8, which signals an upstream numerical fault or an unphysical input.
pub fn build_rho(c: &CorrelatorSet) -> Result<TwoSiteState> {
    for (name, v) in [("sig_z", c.sig_z), ("xx", c.xx), ("yy", c.yy), ("zz", c.zz)] {
        if !v.is_finite() {
            return Err(Error::Argument(format!("correlator {name} is not finite: {v}")));
        }
    }
    let matrix = rho_from_correlators(c);
    let spec = linalg::eigh(&matrix)?;
    let min_eig = spec.eigenvalues[0];
    if min_eig < -STATE_NEG_TOL {
        return Err(Error::InvalidCorrelators {
            min_eigenvalue: min_eig,
        });
    }
    Ok(TwoSiteState { matrix, source: *c })
}

fn rho_from_correlators(c: &CorrelatorSet) -> HermitianMatrix {
    let eye = HermitianMatrix::identity(2);
    let (sx, sy, sz) = (linalg::pauli(1), linalg::pauli(2), linalg::pauli(3));
    let mut m = HermitianMatrix::identity(4);
    let terms = [
        (c.sig_z, sz.kron(&eye)),
        (c.sig_z, eye.kron(&sz)),
        (c.xx, sx.kron(&sx)),
        (c.yy, sy.kron(&sy)),
        (c.zz, sz.kron(&sz)),
    ];
    for (coeff, op) in terms {
        for i in 0..4 {
            for j in 0..4 {
                m.add_to(i, j, op.get(i, j) * coeff);
            }
        }
    }
    m.scaled(0.25)
}

/// Trace, positivity and X-structure residuals of a state. Non-mutating.
pub fn state_diagnostics(s: &TwoSiteState) -> StateDiagnostics {
    diagnostics_of(&s.matrix)
}

pub fn diagnostics_of(matrix: &HermitianMatrix) -> StateDiagnostics {
    let trace_deviation = (matrix.trace().re - 1.0).abs();
    let min_eigenvalue = linalg::eigh(matrix)
        .map(|s| s.eigenvalues[0])
        .unwrap_or(f64::NAN);
    // off-pattern entries of the Eq.-style X form (1-based (1,2), (1,3),
    // (2,4), (3,4) and transposes)
    let mut x_structure_residual = 0.0f64;
    for (i, j) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
        x_structure_residual = x_structure_residual
            .max(matrix.get(i, j).norm())
            .max(matrix.get(j, i).norm());
    }
    StateDiagnostics {
        trace_deviation,
        min_eigenvalue,
        x_structure_residual,
    }
}

/// Seeded random two-qubit X-state (diagonal plus anti-diagonal), used by the
/// brute-force LQU oracle runs.
pub fn random_x_state<R: Rng>(rng: &mut R) -> HermitianMatrix {
    let mut diag = [0.0f64; 4];
    let mut total = 0.0;
    for d in &mut diag {
        *d = rng.gen_range(0.01..1.0);
        total += *d;
    }
    for d in &mut diag {
        *d /= total;
    }
    // |ρ_14| ≤ √(ρ11 ρ44), |ρ_23| ≤ √(ρ22 ρ33) keeps the state PSD
    let m14 = (diag[0] * diag[3]).sqrt() * rng.gen_range(0.0..1.0);
    let m23 = (diag[1] * diag[2]).sqrt() * rng.gen_range(0.0..1.0);
    let p14 = rng.gen_range(0.0..std::f64::consts::TAU);
    let p23 = rng.gen_range(0.0..std::f64::consts::TAU);
    let z14 = Complex64::from_polar(m14, p14);
    let z23 = Complex64::from_polar(m23, p23);
    let mut m = HermitianMatrix::zeros(4);
    for (i, d) in diag.iter().enumerate() {
        m.set(i, i, Complex64::new(*d, 0.0));
    }
    m.set(0, 3, z14);
    m.set(3, 0, z14.conj());
    m.set(1, 2, z23);
    m.set(2, 1, z23.conj());
    m
}

/// Seeded random mixed state ρ = AA†/tr(AA†) with Gaussian A.
pub fn random_mixed_state<R: Rng>(rng: &mut R, dim: usize) -> HermitianMatrix {
    let a: Vec<Complex64> = (0..dim * dim)
        .map(|_| {
            Complex64::new(
                gaussian(rng),
                gaussian(rng),
            )
        })
        .collect();
    let mut m = HermitianMatrix::from_fn(dim, |i, j| {
        (0..dim).map(|k| a[i * dim + k] * a[j * dim + k].conj()).sum()
    });
    let tr = m.trace().re;
    m = m.scaled(1.0 / tr);
    m
}

fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller is enough here; statistical quality is not load-bearing.
    let u: f64 = rng.gen_range(f64::EPSILON..1.0);
    let v: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    (-2.0 * u.ln()).sqrt() * v.cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn correlators(sig_z: f64, xx: f64, yy: f64, zz: f64) -> CorrelatorSet {
        CorrelatorSet {
            n: 1,
            sig_z,
            xx,
            yy,
            zz,
        }
    }

    #[test]
    fn polarized_correlators_give_down_down_projector() {
        let s = build_rho(&correlators(-1.0, 0.0, 0.0, 1.0)).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == 3 && j == 3 { 1.0 } else { 0.0 };
                assert!((s.matrix.get(i, j).re - expect).abs() <= 1e-15);
                assert!(s.matrix.get(i, j).im.abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn zero_correlators_give_maximally_mixed() {
        let s = build_rho(&correlators(0.0, 0.0, 0.0, 0.0)).unwrap();
        assert!(s.matrix.max_abs_diff(&HermitianMatrix::identity(4).scaled(0.25)) <= 1e-15);
    }

    #[test]
    fn bell_correlators_give_phi_plus() {
        let s = build_rho(&correlators(0.0, 1.0, -1.0, 1.0)).unwrap();
        let mut bell = HermitianMatrix::zeros(4);
        for &i in &[0usize, 3] {
            for &j in &[0usize, 3] {
                bell.set(i, j, Complex64::new(0.5, 0.0));
            }
        }
        assert!(s.matrix.max_abs_diff(&bell) <= 1e-15);
    }

    #[test]
    fn unphysical_correlators_are_rejected() {
        match build_rho(&correlators(0.0, 1.0, 1.0, 1.0)) {
            Err(Error::InvalidCorrelators { min_eigenvalue }) => assert!(min_eigenvalue < -1e-4),
            other => panic!("expected invalid-correlators error, got {other:?}"),
        }
        assert!(build_rho(&correlators(f64::NAN, 0.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn diagnostics_of_reference_states() {
        let mixed = build_rho(&correlators(0.0, 0.0, 0.0, 0.0)).unwrap();
        let d = state_diagnostics(&mixed);
        assert!(d.trace_deviation <= 1e-14);
        assert!((d.min_eigenvalue - 0.25).abs() <= 1e-12);
        assert!(d.x_structure_residual <= 1e-14);

        let bell = build_rho(&correlators(0.0, 1.0, -1.0, 1.0)).unwrap();
        let d = state_diagnostics(&bell);
        assert!(d.trace_deviation <= 1e-14);
        assert!(d.min_eigenvalue.abs() <= 1e-10);
        assert!(d.x_structure_residual <= 1e-14);
    }

    #[test]
    fn diagnostics_report_injected_trace_drift() {
        let mut s = build_rho(&correlators(0.0, 0.0, 0.0, 0.0)).unwrap();
        let v = s.matrix.get(0, 0) + Complex64::new(1e-6, 0.0);
        s.matrix.set(0, 0, v);
        let d = state_diagnostics(&s);
        assert!((d.trace_deviation - 1e-6).abs() <= 1e-12);
    }

    #[test]
    fn build_rho_is_linear_in_the_correlators() {
        let c1 = correlators(0.3, -0.2, 0.4, 0.1);
        let c2 = correlators(-0.1, 0.5, -0.3, 0.6);
        for &t in &[0.0, 0.25, 0.5, 0.8, 1.0] {
            let mix = correlators(
                t * c1.sig_z + (1.0 - t) * c2.sig_z,
                t * c1.xx + (1.0 - t) * c2.xx,
                t * c1.yy + (1.0 - t) * c2.yy,
                t * c1.zz + (1.0 - t) * c2.zz,
            );
            let lhs = rho_from_correlators(&mix);
            let a = rho_from_correlators(&c1);
            let b = rho_from_correlators(&c2);
            let rhs = HermitianMatrix::from_fn(4, |i, j| {
                a.get(i, j) * t + b.get(i, j) * (1.0 - t)
            });
            assert!(lhs.max_abs_diff(&rhs) <= 1e-14);
        }
    }

    #[test]
    fn random_states_are_valid_densities() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            for rho in [random_x_state(&mut rng), random_mixed_state(&mut rng, 4)] {
                assert!(rho.hermiticity_residual() <= 1e-12);
                assert!((rho.trace().re - 1.0).abs() <= 1e-12);
                let spec = crate::linalg::eigh(&rho).unwrap();
                assert!(spec.eigenvalues[0] >= -1e-12);
            }
        }
    }
}
