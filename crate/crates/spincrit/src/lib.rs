//! Local quantum uncertainty (LQU) of two-site reduced states of the XY and
//! XYT spin-1/2 chains, with critical-point detection from divergences of the
//! LQU derivative along parameter sweeps.
//!
//! The crate is organized around the physics pipeline:
//!
//! * [`xy`] / [`xyt`] — two-site correlation functions of the two models
//!   (thermodynamic-limit integrals for XY, finite-N mode sums for XYT),
//! * [`state`] — assembly of the 4×4 two-site reduced density matrix,
//! * [`lqu`] — skew information, the W matrix, the closed-form LQU and an
//!   independent brute-force minimizer used as a correctness oracle,
//! * [`criticality`] — parameter sweeps, derivatives, peak detection and
//!   QPT-vs-branch-switch classification, 2D phase maps, gap-closing lines,
//! * [`ed`] — exact diagonalization of small rings, the validation oracle
//!   for the analytic correlators,
//! * [`numerics`] / [`linalg`] — adaptive quadrature, grid differentiation,
//!   Toeplitz determinants, and small dense Hermitian eigensolvers.
//!
//! See the `examples/` directory for one runnable program per capability;
//! the `spincrit` binary exposes the same pipeline as a CLI.

pub mod cli;
pub mod criticality;
pub mod ed;
pub mod linalg;
pub mod lqu;
pub mod numerics;
pub mod state;
pub mod xy;
pub mod xyt;

pub use criticality::{CriticalPoint, Classification, SweepModel, SweepRow, SweepSpec};
pub use linalg::HermitianMatrix;
pub use lqu::{LquResult, MeasurementDirection};
pub use numerics::Grid1D;
pub use state::{CorrelatorSet, TwoSiteState};
pub use xy::XYParams;
pub use xyt::{ModeConvention, XYTParams};

/// Temperature of the thermal ground state: either the strict T = 0 limit of
/// the canonical ensemble or a finite inverse temperature β = 1/T (k_B = 1).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum Temperature {
    Zero,
    InverseBeta(f64),
}

impl Temperature {
    /// tanh(β·e) weight of a mode with energy `e`, with tanh ≡ 1 at T = 0.
    pub fn thermal_factor(self, energy: f64) -> f64 {
        match self {
            Temperature::Zero => 1.0,
            Temperature::InverseBeta(beta) => (beta * energy).tanh(),
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Temperature::Zero)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("quadrature refinement budget exceeded: best estimate {best}, achieved error bound {error_bound} > tolerance {tolerance}")]
    QuadratureBudget {
        best: f64,
        error_bound: f64,
        tolerance: f64,
    },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue}")]
    NotPositiveSemidefinite { eigenvalue: f64 },

    #[error("correlators produce an unphysical state: smallest eigenvalue {min_eigenvalue}")]
    InvalidCorrelators { min_eigenvalue: f64 },

    #[error("sweep failed at axis value {axis_value}: {source}")]
    SweepPoint {
        axis_value: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("map failed at grid point (row {row}, col {col}): {source}")]
    MapPoint {
        row: usize,
        col: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
