//! Local quantum uncertainty of hand-built two-qubit states.
//!
//! Computes the closed-form LQU U(ρ) = 1 − λ_max{W} for a few states whose
//! values are known exactly, and for the Werner family interpolating between
//! the maximally mixed state and a Bell state. Prints the W-matrix eigenvalue
//! and the optimal measurement direction alongside each value.
//!
//! Run with: cargo run --example lqu_point

use num_complex::Complex64;
use spincrit::linalg::HermitianMatrix;
use spincrit::lqu::{lqu_of, MeasuredSide};

fn pure(amplitudes: [Complex64; 4]) -> HermitianMatrix {
    HermitianMatrix::from_fn(4, |i, j| amplitudes[i] * amplitudes[j].conj())
}

fn main() {
    let c = |v: f64| Complex64::new(v, 0.0);
    let half = 0.5f64.sqrt();

    let bell = pure([c(half), c(0.0), c(0.0), c(half)]);
    let product = pure([c(1.0), c(0.0), c(0.0), c(0.0)]);
    let mixed = HermitianMatrix::identity(4).scaled(0.25);

    println!("{:<28} {:>10} {:>12}  optimal direction", "state", "U", "lambda_max");
    for (name, rho) in [
        ("Bell (|00>+|11>)/sqrt(2)", &bell),
        ("product |00>", &product),
        ("maximally mixed I/4", &mixed),
    ] {
        let r = lqu_of(rho, MeasuredSide::First).expect("valid state");
        println!(
            "{:<28} {:>10.6} {:>12.6}  [{:+.3}, {:+.3}, {:+.3}]",
            name, r.u, r.lambda_max, r.optimal_r.r[0], r.optimal_r.r[1], r.optimal_r.r[2]
        );
    }

    println!("\nWerner family p·|Bell><Bell| + (1−p)·I/4:");
    println!("{:>6} {:>10}", "p", "U");
    for i in 0..=10 {
        let p = i as f64 / 10.0;
        let rho = HermitianMatrix::from_fn(4, |a, b| {
            bell.get(a, b) * p + mixed.get(a, b) * (1.0 - p)
        });
        let r = lqu_of(&rho, MeasuredSide::First).expect("valid state");
        println!("{p:>6.2} {:>10.6}", r.u);
    }
}
