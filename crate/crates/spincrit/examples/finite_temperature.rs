//! Thermal washing-out of the LQU criticality signal.
//!
//! Repeats the Ising-limit (gamma = 1) sweep at several inverse temperatures
//! beta. The |dU/dlambda| peak stays pinned near lambda = 1 but its height
//! drops as the temperature rises, until the divergence is smoothed away —
//! the criticality signature survives only at low enough temperature.
//!
//! Run with: cargo run --example finite_temperature

use spincrit::criticality::{sweep, SweepAxis, SweepModel, SweepSpec};
use spincrit::numerics::Grid1D;
use spincrit::{Temperature, XYParams};

fn main() {
    let grid = Grid1D::new(0.5, 1.5, 0.01).expect("valid grid");
    println!("XY chain, gamma = 1, lambda in [0.5, 1.5]\n");
    println!("{:>10} {:>14} {:>16}", "beta", "peak lambda", "peak |dU/dlambda|");
    let temperatures = [
        Temperature::InverseBeta(1.0),
        Temperature::InverseBeta(2.0),
        Temperature::InverseBeta(5.0),
        Temperature::InverseBeta(10.0),
        Temperature::Zero,
    ];
    for temperature in temperatures {
        let spec = SweepSpec {
            model: SweepModel::Xy(XYParams::new(1.0, 1.0, temperature)),
            axis: SweepAxis::Lambda,
            grid: grid.clone(),
            separation: 1,
            prominence: None,
        };
        let rows = sweep(&spec).expect("sweep");
        let peak = rows
            .iter()
            .max_by(|a, b| a.du.abs().total_cmp(&b.du.abs()))
            .unwrap();
        let label = match temperature {
            Temperature::Zero => "T = 0".to_string(),
            Temperature::InverseBeta(b) => format!("{b}"),
        };
        println!("{label:>10} {:>14.3} {:>16.4}", peak.axis_value, peak.du.abs());
    }
}
