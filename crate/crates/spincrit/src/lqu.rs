//! Skew information, the W matrix, the closed-form local quantum uncertainty
//! U = 1 − λ_max{W}, and an independent brute-force minimizer over the Bloch
//! sphere used as a correctness oracle.
//!
//! All operations act on a qubit ⊗ qudit density matrix; the measured
//! observable is K = r⃗·σ⃗ on the qubit side (the first subsystem unless
//! stated otherwise).

use num_complex::Complex64;

use crate::linalg::{self, HermitianMatrix};
use crate::state::TwoSiteState;
use crate::{Error, Result};

/// Which tensor factor carries the measured qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MeasuredSide {
    #[default]
    First,
    Second,
}

/// Unit vector on the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementDirection {
    pub r: [f64; 3],
}

impl MeasurementDirection {
    pub fn new(r: [f64; 3]) -> Result<Self> {
        let norm = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Argument(format!(
                "measurement direction must be a unit vector, |r| = {norm}"
            )));
        }
        Ok(MeasurementDirection { r })
    }

    pub fn from_angles(theta: f64, phi: f64) -> Self {
        MeasurementDirection {
            r: [
                theta.sin() * phi.cos(),
                theta.sin() * phi.sin(),
                theta.cos(),
            ],
        }
    }
}

/// Closed-form LQU output: the value, the W matrix it came from, and the
/// optimal measurement direction (top eigenvector of W).
#[derive(Debug, Clone)]
pub struct LquResult {
    pub u: f64,
    pub lambda_max: f64,
    pub w: [[f64; 3]; 3],
    pub optimal_r: MeasurementDirection,
}

fn check_qubit_side(rho: &HermitianMatrix) -> Result<usize> {
    let dim = rho.dim();
    if dim < 2 || dim % 2 != 0 {
        return Err(Error::Argument(format!(
            "state dimension must be 2·d for a qubit subsystem, got {dim}"
        )));
    }
    Ok(dim / 2)
}

/// K ⊗ I or I ⊗ K depending on the measured side.
fn local_observable(r: &MeasurementDirection, other_dim: usize, side: MeasuredSide) -> HermitianMatrix {
    let mut k = HermitianMatrix::zeros(2);
    for (coeff, p) in r.r.iter().zip(1..=3) {
        let sigma = linalg::pauli(p);
        for i in 0..2 {
            for j in 0..2 {
                k.add_to(i, j, sigma.get(i, j) * *coeff);
            }
        }
    }
    let eye = HermitianMatrix::identity(other_dim);
    match side {
        MeasuredSide::First => k.kron(&eye),
        MeasuredSide::Second => eye.kron(&k),
    }
}

/// Precomputed √ρ, so the brute-force sphere scan pays the eigensolve once.
pub struct SkewEngine {
    sqrt_rho: HermitianMatrix,
    other_dim: usize,
    side: MeasuredSide,
}

impl SkewEngine {
    pub fn new(rho: &HermitianMatrix, side: MeasuredSide) -> Result<Self> {
        let other_dim = check_qubit_side(rho)?;
        let sqrt_rho = linalg::psd_sqrt(rho, linalg::DEFAULT_NEG_TOL)?;
        Ok(SkewEngine {
            sqrt_rho,
            other_dim,
            side,
        })
    }

    /// −½ tr([√ρ, K]²) = tr(ρK²) − tr(√ρ K √ρ K), evaluated directly from
    /// matrix products; independent of the W-matrix route.
    pub fn eval(&self, r: &MeasurementDirection) -> f64 {
        let k = local_observable(r, self.other_dim, self.side);
        let sk = self.sqrt_rho.matmul(&k);
        let n = sk.dim();
        // tr(ρK²) = tr((√ρK)(√ρK)†) since √ρ and K are Hermitian
        let mut tr_rho_k2 = 0.0;
        let mut tr_sksk = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                tr_rho_k2 += sk.get(i, j).norm_sqr();
                tr_sksk += sk.get(i, j) * sk.get(j, i);
            }
        }
        tr_rho_k2 - tr_sksk.re
    }

    /// (W)_ij = tr{√ρ (σ_i⊗I) √ρ (σ_j⊗I)}.
    pub fn w_matrix(&self) -> [[f64; 3]; 3] {
        let products: Vec<HermitianMatrix> = (1..=3)
            .map(|p| {
                let dir = MeasurementDirection {
                    r: [
                        if p == 1 { 1.0 } else { 0.0 },
                        if p == 2 { 1.0 } else { 0.0 },
                        if p == 3 { 1.0 } else { 0.0 },
                    ],
                };
                let k = local_observable(&dir, self.other_dim, self.side);
                self.sqrt_rho.matmul(&k)
            })
            .collect();
        let n = self.sqrt_rho.dim();
        let mut w = [[0.0; 3]; 3];
        for (i, row) in w.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let mut tr = Complex64::new(0.0, 0.0);
                for a in 0..n {
                    for b in 0..n {
                        tr += products[i].get(a, b) * products[j].get(b, a);
                    }
                }
                *entry = tr.re;
            }
        }
        w
    }
}

/// Skew information of the state with the local observable r⃗·σ⃗ on the first
/// qubit.
pub fn skew_information(s: &TwoSiteState, r: &MeasurementDirection) -> Result<f64> {
    skew_information_of(&s.matrix, r, MeasuredSide::First)
}

pub fn skew_information_of(
    rho: &HermitianMatrix,
    r: &MeasurementDirection,
    side: MeasuredSide,
) -> Result<f64> {
    Ok(SkewEngine::new(rho, side)?.eval(r))
}

/// The 3×3 real symmetric W matrix of the state.
pub fn w_matrix(s: &TwoSiteState) -> Result<[[f64; 3]; 3]> {
    w_matrix_of(&s.matrix, MeasuredSide::First)
}

pub fn w_matrix_of(rho: &HermitianMatrix, side: MeasuredSide) -> Result<[[f64; 3]; 3]> {
    Ok(SkewEngine::new(rho, side)?.w_matrix())
}

/// Closed-form LQU: U = 1 − λ_max{W}.
pub fn lqu(s: &TwoSiteState) -> Result<LquResult> {
    lqu_of(&s.matrix, MeasuredSide::First)
}

pub fn lqu_of(rho: &HermitianMatrix, side: MeasuredSide) -> Result<LquResult> {
    let w = w_matrix_of(rho, side)?;
    let wm = HermitianMatrix::from_real_fn(3, |i, j| w[i][j]);
    let spec = linalg::eigh(&wm)?;
    let lambda_max = spec.eigenvalues[2];
    let top = &spec.vectors[2];
    let mut r = [top[0].re, top[1].re, top[2].re];
    let norm = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    for c in &mut r {
        *c /= norm;
    }
    Ok(LquResult {
        u: 1.0 - lambda_max,
        lambda_max,
        w,
        optimal_r: MeasurementDirection { r },
    })
}

/// Direct minimization of the skew information over a (θ, φ) grid followed
/// by three shrink-by-4 refinement rounds around the best cell. Upper-bounds
/// the true LQU and is fully independent of the closed form.
pub fn lqu_bruteforce(s: &TwoSiteState, polar_steps: usize, azimuthal_steps: usize) -> Result<f64> {
    lqu_bruteforce_of(&s.matrix, MeasuredSide::First, polar_steps, azimuthal_steps)
}

pub fn lqu_bruteforce_of(
    rho: &HermitianMatrix,
    side: MeasuredSide,
    polar_steps: usize,
    azimuthal_steps: usize,
) -> Result<f64> {
    if polar_steps < 2 || azimuthal_steps < 2 {
        return Err(Error::Argument(
            "brute-force grid needs at least 2 steps per angle".into(),
        ));
    }
    let engine = SkewEngine::new(rho, side)?;
    let pi = std::f64::consts::PI;
    let tau = std::f64::consts::TAU;

    let mut best = f64::INFINITY;
    let mut best_theta = 0.0;
    let mut best_phi = 0.0;
    let dtheta = pi / polar_steps as f64;
    let dphi = tau / azimuthal_steps as f64;
    // Offset grids avoid the degenerate poles; ties resolve to the lowest
    // θ then lowest φ by scan order.
    for i in 0..polar_steps {
        let theta = (i as f64 + 0.5) * dtheta;
        for j in 0..azimuthal_steps {
            let phi = (j as f64 + 0.5) * dphi;
            let v = engine.eval(&MeasurementDirection::from_angles(theta, phi));
            if v < best {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    let mut half_theta = dtheta;
    let mut half_phi = dphi;
    for _round in 0..3 {
        let refine = 16usize;
        let (t0, p0) = (best_theta, best_phi);
        for i in 0..=refine {
            let theta = (t0 - half_theta + 2.0 * half_theta * i as f64 / refine as f64)
                .clamp(0.0, pi);
            for j in 0..=refine {
                let phi = p0 - half_phi + 2.0 * half_phi * j as f64 / refine as f64;
                let v = engine.eval(&MeasurementDirection::from_angles(theta, phi));
                if v < best {
                    best = v;
                    best_theta = theta;
                    best_phi = phi;
                }
            }
        }
        half_theta /= 4.0;
        half_phi /= 4.0;
    }
    Ok(best)
}
