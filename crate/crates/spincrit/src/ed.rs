//! Brute-force exact diagonalization of the XY and XYT Hamiltonians on small
//! periodic rings. Produces thermal ground states, two-site reduced states,
//! and correlators that validate the analytic modules.
//!
//! Site 0 is the most significant bit of the basis index, so the reduced
//! state of a site pair comes out in the |00⟩, |01⟩, |10⟩, |11⟩ order used
//! everywhere else.

use num_complex::Complex64;

use crate::linalg::{self, HermitianMatrix};
use crate::state::CorrelatorSet;
use crate::xyt::XYTParams;
use crate::{Error, Result, Temperature};

pub const MAX_SITES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    XY,
    XYT,
}

/// Dense 2^N × 2^N ring Hamiltonian; real symmetric in the computational
/// basis.
#[derive(Debug, Clone)]
pub struct DenseHamiltonian {
    pub sites: usize,
    pub model: Model,
    pub params: XYTParams,
    pub matrix: HermitianMatrix,
}

#[derive(Debug, Clone, Copy)]
enum Pauli {
    X,
    Y,
    Z,
}

/// Applies a product of single-site Paulis to a basis state, rightmost
/// factor first; returns the resulting basis state and amplitude.
fn apply_string(sites: usize, ops: &[(usize, Pauli)], state: usize) -> (usize, Complex64) {
    let mut s = state;
    let mut amp = Complex64::new(1.0, 0.0);
    for &(site, op) in ops.iter().rev() {
        let bit = 1usize << (sites - 1 - site);
        let v = (s & bit) != 0;
        match op {
            Pauli::X => s ^= bit,
            Pauli::Y => {
                amp *= if v {
                    Complex64::new(0.0, -1.0)
                } else {
                    Complex64::new(0.0, 1.0)
                };
                s ^= bit;
            }
            Pauli::Z => {
                if v {
                    amp = -amp;
                }
            }
        }
    }
    (s, amp)
}

/// H = −½ Σ_j [(1+γ)σ^x_jσ^x_{j+1} + (1−γ)σ^y_jσ^y_{j+1} + λσ^z_j
///            + α(σ^x_{j−1}σ^x_{j+1} + σ^y_{j−1}σ^y_{j+1})σ^z_j],
/// all site indices mod N.
pub fn build_hamiltonian(model: Model, p: &XYTParams) -> Result<DenseHamiltonian> {
    let n = p.sites;
    if !(2..=MAX_SITES).contains(&n) {
        return Err(Error::Argument(format!(
            "exact diagonalization supports 2..={MAX_SITES} sites, got {n}"
        )));
    }
    let mut params = *p;
    if matches!(model, Model::XY) {
        params.alpha = 0.0;
    }
    let dim = 1usize << n;
    let mut h = HermitianMatrix::zeros(dim);
    let mut add_term = |coeff: f64, ops: &[(usize, Pauli)]| {
        if coeff == 0.0 {
            return;
        }
        for s in 0..dim {
            let (s2, amp) = apply_string(n, ops, s);
            let v = h.get(s2, s) + amp * coeff;
            h.set(s2, s, v);
        }
    };
    for j in 0..n {
        let next = (j + 1) % n;
        let prev = (j + n - 1) % n;
        add_term(-0.5 * (1.0 + params.gamma), &[(j, Pauli::X), (next, Pauli::X)]);
        add_term(-0.5 * (1.0 - params.gamma), &[(j, Pauli::Y), (next, Pauli::Y)]);
        add_term(-0.5 * params.lambda, &[(j, Pauli::Z)]);
        add_term(
            -0.5 * params.alpha,
            &[(prev, Pauli::X), (next, Pauli::X), (j, Pauli::Z)],
        );
        add_term(
            -0.5 * params.alpha,
            &[(prev, Pauli::Y), (next, Pauli::Y), (j, Pauli::Z)],
        );
    }
    debug_assert!(h.max_imag() <= 1e-12);
    debug_assert!(h.hermiticity_residual() <= 1e-12);
    Ok(DenseHamiltonian {
        sites: n,
        model,
        params,
        matrix: h,
    })
}

/// Canonical-ensemble state exp(−βH)/Z; at T = 0 the equal-weight mixture of
/// all eigenstates within 1e−10 of the ground energy (the thermal ground
/// state, no symmetry breaking).
pub fn thermal_state(h: &DenseHamiltonian, temperature: Temperature) -> Result<HermitianMatrix> {
    let spec = linalg::eigh(&h.matrix)?;
    let dim = h.matrix.dim();
    let e0 = spec.eigenvalues[0];
    let weights: Vec<f64> = match temperature {
        Temperature::Zero => {
            let deg = spec
                .eigenvalues
                .iter()
                .take_while(|&&e| e - e0 <= 1e-10)
                .count();
            spec.eigenvalues
                .iter()
                .enumerate()
                .map(|(i, _)| if i < deg { 1.0 / deg as f64 } else { 0.0 })
                .collect()
        }
        Temperature::InverseBeta(beta) => {
            let raw: Vec<f64> = spec
                .eigenvalues
                .iter()
                .map(|&e| (-beta * (e - e0)).exp())
                .collect();
            let z: f64 = raw.iter().sum();
            raw.into_iter().map(|w| w / z).collect()
        }
    };
    let mut rho = HermitianMatrix::zeros(dim);
    for (k, &w) in weights.iter().enumerate() {
        if w < 1e-18 {
            continue;
        }
        let v = &spec.vectors[k];
        for i in 0..dim {
            if v[i].norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..dim {
                rho.add_to(i, j, v[i] * w * v[j].conj());
            }
        }
    }
    Ok(rho)
}

/// ⟨σ^z⟩ and the three two-site correlators of sites (i, j), computed as
/// direct traces over the full state. sig_z is the average of the two
/// one-site magnetizations.
pub fn ed_correlators(
    state: &HermitianMatrix,
    sites: usize,
    i: usize,
    j: usize,
) -> Result<CorrelatorSet> {
    if !(i < j && j < sites) {
        return Err(Error::Argument(format!(
            "site pair must satisfy 0 ≤ i < j < N, got ({i}, {j}) on {sites} sites"
        )));
    }
    let dim = 1usize << sites;
    if state.dim() != dim {
        return Err(Error::Argument(format!(
            "state dimension {} does not match {sites} sites",
            state.dim()
        )));
    }
    let bit_i = 1usize << (sites - 1 - i);
    let bit_j = 1usize << (sites - 1 - j);
    let mask = bit_i | bit_j;
    let mut zi = 0.0;
    let mut zj = 0.0;
    let mut xx = 0.0;
    let mut yy = 0.0;
    let mut zz = 0.0;
    for s in 0..dim {
        let sign_i = if s & bit_i == 0 { 1.0 } else { -1.0 };
        let sign_j = if s & bit_j == 0 { 1.0 } else { -1.0 };
        let diag = state.get(s, s).re;
        zi += sign_i * diag;
        zj += sign_j * diag;
        zz += sign_i * sign_j * diag;
        // tr(ρ σ^x_iσ^x_j) and tr(ρ σ^y_iσ^y_j) via the flipped column
        let flipped = s ^ mask;
        let off = state.get(s, flipped).re;
        xx += off;
        yy += -sign_i * sign_j * off;
    }
    Ok(CorrelatorSet {
        n: j - i,
        sig_z: 0.5 * (zi + zj),
        xx,
        yy,
        zz,
    })
}

/// 4×4 reduced density matrix of sites (i, j), tracing out the rest.
pub fn reduce_two_sites(
    state: &HermitianMatrix,
    sites: usize,
    i: usize,
    j: usize,
) -> Result<HermitianMatrix> {
    if !(i < j && j < sites) {
        return Err(Error::Argument(format!(
            "site pair must satisfy 0 ≤ i < j < N, got ({i}, {j}) on {sites} sites"
        )));
    }
    let dim = 1usize << sites;
    if state.dim() != dim {
        return Err(Error::Argument(format!(
            "state dimension {} does not match {sites} sites",
            state.dim()
        )));
    }
    let bit_i = 1usize << (sites - 1 - i);
    let bit_j = 1usize << (sites - 1 - j);
    let assemble = |pair: usize, rest: usize| -> usize {
        let mut s = rest;
        if pair & 2 != 0 {
            s |= bit_i;
        }
        if pair & 1 != 0 {
            s |= bit_j;
        }
        s
    };
    let mut rho = HermitianMatrix::zeros(4);
    // enumerate the environment by skipping the two kept bits
    let env_dim = dim >> 2;
    for e in 0..env_dim {
        let mut rest = 0usize;
        let mut src = e;
        for b in 0..sites {
            let bit = 1usize << b;
            if bit == bit_i || bit == bit_j {
                continue;
            }
            if src & 1 != 0 {
                rest |= bit;
            }
            src >>= 1;
        }
        for a in 0..4 {
            for b in 0..4 {
                rho.add_to(a, b, state.get(assemble(a, rest), assemble(b, rest)));
            }
        }
    }
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eigh;
    use crate::state::diagnostics_of;
    use crate::xyt;

    fn params(gamma: f64, lambda: f64, alpha: f64, sites: usize) -> XYTParams {
        XYTParams::new(gamma, lambda, alpha, sites, Temperature::Zero)
    }

    #[test]
    fn two_site_ising_ring_spectrum() {
        // the j=1 and j=2 bonds coincide on a 2-ring, so H = −2 σ^x⊗σ^x
        let h = build_hamiltonian(Model::XY, &params(1.0, 0.0, 0.0, 2)).unwrap();
        let spec = eigh(&h.matrix).unwrap();
        let want = [-2.0, -2.0, 2.0, 2.0];
        for (got, want) in spec.eigenvalues.iter().zip(want) {
            assert!((got - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn hamiltonian_is_real_symmetric() {
        let h = build_hamiltonian(Model::XYT, &params(0.5, 0.7, 0.3, 6)).unwrap();
        assert!(h.matrix.hermiticity_residual() <= 1e-14);
        assert!(h.matrix.max_imag() <= 1e-14);
    }

    #[test]
    fn field_dominated_ground_state_is_polarized() {
        let h = build_hamiltonian(Model::XYT, &params(0.5, 1e6, 0.3, 4)).unwrap();
        let rho = thermal_state(&h, Temperature::Zero).unwrap();
        // fidelity with |0000⟩
        assert!((rho.get(0, 0).re - 1.0).abs() <= 1e-4);
    }

    #[test]
    fn xy_model_ignores_alpha() {
        let with = build_hamiltonian(Model::XY, &params(0.5, 0.7, 0.9, 4)).unwrap();
        let without = build_hamiltonian(Model::XYT, &params(0.5, 0.7, 0.0, 4)).unwrap();
        assert!(with.matrix.max_abs_diff(&without.matrix) <= 1e-14);
    }

    #[test]
    fn rejects_out_of_range_sizes() {
        assert!(build_hamiltonian(Model::XY, &params(0.5, 1.0, 0.0, 1)).is_err());
        assert!(build_hamiltonian(Model::XY, &params(0.5, 1.0, 0.0, 11)).is_err());
    }

    #[test]
    fn infinite_temperature_state_is_maximally_mixed() {
        let h = build_hamiltonian(Model::XY, &params(0.7, 0.4, 0.0, 3)).unwrap();
        let rho = thermal_state(&h, Temperature::InverseBeta(1e-9)).unwrap();
        let expect = HermitianMatrix::identity(8).scaled(1.0 / 8.0);
        assert!(rho.max_abs_diff(&expect) <= 1e-7);
    }

    #[test]
    fn generic_ground_state_is_a_projector() {
        let h = build_hamiltonian(Model::XYT, &params(0.5, 0.7, 0.3, 4)).unwrap();
        let rho = thermal_state(&h, Temperature::Zero).unwrap();
        let rho2 = rho.matmul(&rho);
        assert!(rho2.max_abs_diff(&rho) <= 1e-9);
    }

    #[test]
    fn degenerate_ising_ground_space_is_mixed_evenly() {
        let h = build_hamiltonian(Model::XY, &params(1.0, 0.0, 0.0, 2)).unwrap();
        let rho = thermal_state(&h, Temperature::Zero).unwrap();
        assert!((rho.trace().re - 1.0).abs() <= 1e-12);
        // two-fold degenerate ground space, so ρ² = ρ/2
        let rho2 = rho.matmul(&rho);
        assert!(rho2.max_abs_diff(&rho.scaled(0.5)) <= 1e-10);
    }

    #[test]
    fn correlators_of_reference_states() {
        let n = 4;
        let dim = 1 << n;
        let mut polarized = HermitianMatrix::zeros(dim);
        polarized.set(0, 0, Complex64::new(1.0, 0.0));
        let c = ed_correlators(&polarized, n, 0, 1).unwrap();
        assert_eq!((c.sig_z, c.xx, c.yy, c.zz), (1.0, 0.0, 0.0, 1.0));

        let mixed = HermitianMatrix::identity(dim).scaled(1.0 / dim as f64);
        let c = ed_correlators(&mixed, n, 1, 3).unwrap();
        assert_eq!((c.sig_z, c.xx, c.yy, c.zz), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn correlators_are_translation_invariant_on_the_ring() {
        let h = build_hamiltonian(Model::XYT, &params(0.5, 0.5, 0.5, 6)).unwrap();
        let rho = thermal_state(&h, Temperature::Zero).unwrap();
        let a = ed_correlators(&rho, 6, 0, 1).unwrap();
        let b = ed_correlators(&rho, 6, 3, 4).unwrap();
        assert!((a.sig_z - b.sig_z).abs() <= 1e-10);
        assert!((a.xx - b.xx).abs() <= 1e-10);
        assert!((a.yy - b.yy).abs() <= 1e-10);
        assert!((a.zz - b.zz).abs() <= 1e-10);
    }

    #[test]
    fn gamma_sign_flip_swaps_xx_and_yy() {
        let plus = build_hamiltonian(Model::XY, &params(0.6, 0.0, 0.0, 4)).unwrap();
        let minus = build_hamiltonian(Model::XY, &params(-0.6, 0.0, 0.0, 4)).unwrap();
        let rp = thermal_state(&plus, Temperature::InverseBeta(3.0)).unwrap();
        let rm = thermal_state(&minus, Temperature::InverseBeta(3.0)).unwrap();
        let cp = ed_correlators(&rp, 4, 0, 1).unwrap();
        let cm = ed_correlators(&rm, 4, 0, 1).unwrap();
        assert!((cp.xx - cm.yy).abs() <= 1e-10);
        assert!((cp.yy - cm.xx).abs() <= 1e-10);
    }

    #[test]
    fn reduced_state_matches_correlator_reconstruction() {
        let h = build_hamiltonian(Model::XYT, &params(0.5, 0.5, 0.5, 8)).unwrap();
        let rho = thermal_state(&h, Temperature::Zero).unwrap();
        let reduced = reduce_two_sites(&rho, 8, 0, 1).unwrap();
        let d = diagnostics_of(&reduced);
        assert!(d.trace_deviation <= 1e-10);
        assert!(d.min_eigenvalue >= -1e-10);
        assert!(d.x_structure_residual <= 1e-10);
        let c = ed_correlators(&rho, 8, 0, 1).unwrap();
        let rebuilt = crate::state::build_rho(&c).unwrap();
        assert!(reduced.max_abs_diff(&rebuilt.matrix) <= 1e-9);
    }

    #[test]
    fn analytic_formulas_converge_to_ed_with_system_size() {
        let mut previous = f64::INFINITY;
        for sites in [6usize, 8, 10] {
            // the unweighted k = −M..M grid tracks small even rings most closely
            let mut p = params(0.5, 0.5, 0.5, sites);
            p.mode_convention = xyt::ModeConvention::Paper;
            let h = build_hamiltonian(Model::XYT, &p).unwrap();
            let rho = thermal_state(&h, Temperature::Zero).unwrap();
            let ed = ed_correlators(&rho, sites, 0, 1).unwrap();
            let analytic = xyt::xyt_correlators(1, &p).unwrap();
            let gap = [
                (ed.sig_z - analytic.sig_z).abs(),
                (ed.xx - analytic.xx).abs(),
                (ed.yy - analytic.yy).abs(),
                (ed.zz - analytic.zz).abs(),
            ]
            .into_iter()
            .fold(0.0f64, f64::max);
            assert!(gap <= 10.0 / sites as f64, "N={sites}: gap {gap}");
            assert!(gap <= previous + 1e-12, "N={sites}: gap {gap} grew from {previous}");
            previous = gap;
        }
    }
}
