//! 2D map of the LQU derivative over the (lambda, gamma) plane of the XY
//! chain.
//!
//! Sweeps lambda for each anisotropy gamma and prints a coarse character map
//! of |dU/dlambda| together with the per-row location of its maximum. The
//! maxima line up along lambda = 1 — the model's critical line.
//!
//! Run with: cargo run --example xy_phase_map

use spincrit::criticality::{phase_map, SweepAxis, SweepModel};
use spincrit::numerics::Grid1D;
use spincrit::{Temperature, XYParams};

fn main() {
    let lambda = Grid1D::new(0.0, 2.0, 0.025).expect("valid grid");
    let gamma = Grid1D::new(0.1, 1.0, 0.1).expect("valid grid");
    let model = SweepModel::Xy(XYParams::new(1.0, 1.0, Temperature::Zero));

    let map = phase_map(&model, SweepAxis::Gamma, &gamma, &lambda, 1).expect("map");
    let cols = map.lambda_values.len();

    println!("|dU/dlambda| over (lambda, gamma); '#' marks the top decile\n");
    let shades = [' ', '.', ':', '-', '=', '+', '*', '%', '@', '#'];
    for (row, &g) in map.outer_values.iter().enumerate() {
        let entries = &map.entries[row * cols..(row + 1) * cols];
        let max = entries.iter().map(|e| e.du.abs()).fold(0.0f64, f64::max);
        let line: String = entries
            .iter()
            .map(|e| shades[((e.du.abs() / max) * 9.0).round() as usize])
            .collect();
        let best = entries
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.du.abs().total_cmp(&b.1.du.abs()))
            .unwrap()
            .0;
        println!(
            "gamma {g:>4.1} |{line}|  peak at lambda = {:.3}",
            map.lambda_values[best]
        );
    }
    println!(
        "           lambda from {} to {}",
        lambda.start, lambda.stop
    );
}
