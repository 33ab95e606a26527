//! From spin-chain correlators to the two-site density matrix.
//!
//! Shows the intermediate objects the sweep pipeline passes through: the
//! correlator set (magnetization plus xx, yy, zz two-point functions), the
//! 4x4 X-structured reduced density matrix assembled from it, its physical
//! diagnostics, and the resulting skew-information W matrix and LQU.
//!
//! Run with: cargo run --example two_site_state

use spincrit::lqu::{lqu, w_matrix};
use spincrit::state::{build_rho, state_diagnostics};
use spincrit::xy::xy_correlators;
use spincrit::{Temperature, XYParams};

fn main() {
    let p = XYParams::new(0.5, 1.1, Temperature::Zero);
    let c = xy_correlators(1, &p).expect("quadrature");
    println!("XY chain at gamma = {}, lambda = {}, separation n = {}:", p.gamma, p.lambda, c.n);
    println!("  <sz> = {:+.6}", c.sig_z);
    println!("  <xx> = {:+.6}  <yy> = {:+.6}  <zz> = {:+.6}\n", c.xx, c.yy, c.zz);

    let state = build_rho(&c).expect("physical state");
    println!("two-site density matrix (real part):");
    for i in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|j| format!("{:+.4}", state.matrix.get(i, j).re))
            .collect();
        println!("  [{}]", row.join("  "));
    }

    let d = state_diagnostics(&state);
    println!("\ndiagnostics:");
    println!("  trace deviation      {:.2e}", d.trace_deviation);
    println!("  smallest eigenvalue  {:+.2e}", d.min_eigenvalue);
    println!("  X-structure residual {:.2e}", d.x_structure_residual);

    let w = w_matrix(&state).expect("W matrix");
    println!("\nW matrix:");
    for row in w {
        println!("  [{:+.4}  {:+.4}  {:+.4}]", row[0], row[1], row[2]);
    }
    let r = lqu(&state).expect("LQU");
    println!("\nU = 1 - lambda_max(W) = {:.6}", r.u);
}
