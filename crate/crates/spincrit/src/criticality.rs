//! Parameter sweeps of the LQU, derivative computation, peak detection with
//! QPT-vs-branch-switch classification, 2D phase maps, and the analytic
//! gap-closing lines of the XYT model.
//!
//! A |dU/dλ| peak is classified as a quantum phase transition only when some
//! correlator-derivative channel peaks within two grid steps of it; kinks
//! caused by the minimizing observable switching branches have no such
//! companion divergence.

use rayon::prelude::*;
use serde::Serialize;

use crate::lqu;
use crate::numerics::{self, Grid1D};
use crate::state::{build_rho, CorrelatorSet};
use crate::xy::{self, XYParams};
use crate::xyt::{self, XYTParams};
use crate::{Error, Result};

/// Grid-step window within which a correlator-derivative peak counts as
/// co-located with a |dU| peak.
pub const QPT_WINDOW: usize = 2;

/// Model with its fixed parameters; the swept axis value overrides the
/// corresponding field at each grid point.
#[derive(Debug, Clone, Copy)]
pub enum SweepModel {
    Xy(XYParams),
    Xyt(XYTParams),
}

/// Which parameter the sweep or map axis runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepAxis {
    Lambda,
    Alpha,
    Gamma,
}

impl SweepAxis {
    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::Lambda => "lambda",
            SweepAxis::Alpha => "alpha",
            SweepAxis::Gamma => "gamma",
        }
    }
}

impl SweepModel {
    fn with_axis_value(&self, axis: SweepAxis, value: f64) -> Result<SweepModel> {
        let mut out = *self;
        match (&mut out, axis) {
            (SweepModel::Xy(p), SweepAxis::Lambda) => p.lambda = value,
            (SweepModel::Xy(p), SweepAxis::Gamma) => p.gamma = value,
            (SweepModel::Xyt(p), SweepAxis::Lambda) => p.lambda = value,
            (SweepModel::Xyt(p), SweepAxis::Alpha) => p.alpha = value,
            (SweepModel::Xyt(p), SweepAxis::Gamma) => p.gamma = value,
            (SweepModel::Xy(_), SweepAxis::Alpha) => {
                return Err(Error::Argument(
                    "the XY model has no α axis; use the XYT model".into(),
                ))
            }
        }
        Ok(out)
    }

    fn correlators(&self, n: usize) -> Result<CorrelatorSet> {
        match self {
            SweepModel::Xy(p) => xy::xy_correlators(n, p),
            SweepModel::Xyt(p) => xyt::xyt_correlators(n, p),
        }
    }
}

/// Specification of a 1D sweep.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub model: SweepModel,
    pub axis: SweepAxis,
    pub grid: Grid1D,
    /// Site separation n ≥ 1.
    pub separation: usize,
    /// Peak prominence; `None` means 5× the median |dU| of the sweep.
    pub prominence: Option<f64>,
}

/// One sweep point: correlators, U, and the grid derivatives of U and of the
/// four correlator channels along the axis.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub axis_value: f64,
    #[serde(flatten)]
    pub correlators: CorrelatorSet,
    pub u: f64,
    pub du: f64,
    /// d/daxis of (sig_z, xx, yy, zz).
    pub d_correlators: [f64; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Qpt,
    BranchSwitch,
}

/// A detected |dU| peak with its QPT classification.
#[derive(Debug, Clone, Serialize)]
pub struct CriticalPoint {
    pub location: f64,
    pub axis: SweepAxis,
    pub classification: Classification,
    pub peak_height: f64,
}

/// Evaluates U over the grid (in parallel; output is ordered and independent
/// of the worker count) and attaches grid derivatives.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    if spec.grid.len() < 16 {
        return Err(Error::Argument(format!(
            "sweep axis needs at least 16 points, got {}",
            spec.grid.len()
        )));
    }
    if spec.separation == 0 {
        return Err(Error::Argument("site separation must be ≥ 1".into()));
    }
    let points: Vec<Result<(CorrelatorSet, f64)>> = spec
        .grid
        .values
        .par_iter()
        .map(|&value| {
            let model = spec.model.with_axis_value(spec.axis, value)?;
            let correlators = model.correlators(spec.separation)?;
            let state = build_rho(&correlators)?;
            let u = lqu::lqu(&state)?.u;
            Ok((correlators, u))
        })
        .collect();

    let mut correlators = Vec::with_capacity(points.len());
    let mut us = Vec::with_capacity(points.len());
    for (value, point) in spec.grid.values.iter().zip(points) {
        match point {
            Ok((c, u)) => {
                correlators.push(c);
                us.push(u);
            }
            Err(e) => {
                return Err(Error::SweepPoint {
                    axis_value: *value,
                    source: Box::new(e),
                })
            }
        }
    }

    let du = numerics::central_derivative(&spec.grid, &us)?;
    let channel = |f: fn(&CorrelatorSet) -> f64| -> Result<Vec<f64>> {
        let ys: Vec<f64> = correlators.iter().map(f).collect();
        numerics::central_derivative(&spec.grid, &ys)
    };
    let d_sig_z = channel(|c| c.sig_z)?;
    let d_xx = channel(|c| c.xx)?;
    let d_yy = channel(|c| c.yy)?;
    let d_zz = channel(|c| c.zz)?;

    Ok(spec
        .grid
        .values
        .iter()
        .enumerate()
        .map(|(i, &axis_value)| SweepRow {
            axis_value,
            correlators: correlators[i],
            u: us[i],
            du: du[i],
            d_correlators: [d_sig_z[i], d_xx[i], d_yy[i], d_zz[i]],
        })
        .collect())
}

/// Peaks of |dU| classified against co-located correlator-derivative peaks.
pub fn detect_critical_points(
    grid: &Grid1D,
    rows: &[SweepRow],
    axis: SweepAxis,
    prominence: Option<f64>,
) -> Result<Vec<CriticalPoint>> {
    if rows.len() < 16 {
        return Err(Error::Argument(format!(
            "detection needs at least 16 rows, got {}",
            rows.len()
        )));
    }
    let du: Vec<f64> = rows.iter().map(|r| r.du.abs()).collect();
    let du_prominence = prominence.unwrap_or_else(|| numerics::default_prominence(&du));
    let du_peaks = numerics::find_peaks(grid, &du, du_prominence)?;

    // |correlator-derivative| peaks, same prominence policy per channel
    let mut channel_peak_indices: Vec<usize> = Vec::new();
    for ch in 0..4 {
        let series: Vec<f64> = rows.iter().map(|r| r.d_correlators[ch].abs()).collect();
        let p = prominence.unwrap_or_else(|| numerics::default_prominence(&series));
        for peak in numerics::find_peaks(grid, &series, p)? {
            channel_peak_indices.push(peak.index);
        }
    }

    Ok(du_peaks
        .into_iter()
        .map(|peak| {
            let co_located = channel_peak_indices
                .iter()
                .any(|&i| peak.index.abs_diff(i) <= QPT_WINDOW);
            CriticalPoint {
                location: peak.location,
                axis,
                classification: if co_located {
                    Classification::Qpt
                } else {
                    Classification::BranchSwitch
                },
                peak_height: peak.height,
            }
        })
        .collect())
}

/// A 2D map: the λ axis swept inside each row of the outer axis (γ for the
/// XY model, α or γ for the XYT model).
#[derive(Debug, Clone, Serialize)]
pub struct PhaseMap {
    pub outer_axis: SweepAxis,
    pub outer_values: Vec<f64>,
    pub lambda_values: Vec<f64>,
    /// Row-major over (outer, λ).
    pub entries: Vec<PhaseMapEntry>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct PhaseMapEntry {
    pub u: f64,
    pub du: f64,
}

/// Sweeps λ for every value of the outer axis.
pub fn phase_map(
    model: &SweepModel,
    outer_axis: SweepAxis,
    outer: &Grid1D,
    lambda: &Grid1D,
    separation: usize,
) -> Result<PhaseMap> {
    if outer.len() < 2 {
        return Err(Error::Argument(format!(
            "map outer axis needs at least 2 points, got {}",
            outer.len()
        )));
    }
    let rows: Vec<Result<Vec<SweepRow>>> = outer
        .values
        .par_iter()
        .map(|&outer_value| {
            let row_model = model.with_axis_value(outer_axis, outer_value)?;
            let spec = SweepSpec {
                model: row_model,
                axis: SweepAxis::Lambda,
                grid: lambda.clone(),
                separation,
                prominence: None,
            };
            sweep(&spec)
        })
        .collect();
    let mut entries = Vec::with_capacity(outer.len() * lambda.len());
    for (row_idx, row) in rows.into_iter().enumerate() {
        let row = row.map_err(|e| Error::MapPoint {
            row: row_idx,
            col: 0,
            source: Box::new(e),
        })?;
        entries.extend(row.into_iter().map(|r| PhaseMapEntry { u: r.u, du: r.du }));
    }
    Ok(PhaseMap {
        outer_axis,
        outer_values: outer.values.clone(),
        lambda_values: lambda.values.clone(),
        entries,
    })
}

/// The XYT gap-closing lines λ = 1 + 2α (x = 0 mode) and λ = 2α − 1
/// (x = π mode), sampled on the given α range.
pub fn gap_closing_lines(alpha_range: &Grid1D) -> (Vec<(f64, f64)>, Vec<(f64, f64)>) {
    let upper = alpha_range
        .values
        .iter()
        .map(|&a| (a, 1.0 + 2.0 * a))
        .collect();
    let lower = alpha_range
        .values
        .iter()
        .map(|&a| (a, 2.0 * a - 1.0))
        .collect();
    (upper, lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Temperature;

    fn xy_spec(gamma: f64, start: f64, stop: f64, step: f64) -> SweepSpec {
        SweepSpec {
            model: SweepModel::Xy(XYParams::new(gamma, 0.0, Temperature::Zero)),
            axis: SweepAxis::Lambda,
            grid: Grid1D::new(start, stop, step).unwrap(),
            separation: 1,
            prominence: None,
        }
    }

    #[test]
    fn xx_chain_has_vanishing_u_below_criticality() {
        let spec = xy_spec(0.0, 0.0, 0.9, 0.05);
        let rows = sweep(&spec).unwrap();
        for row in rows {
            assert!(row.u.abs() <= 1e-7, "λ={}: u={}", row.axis_value, row.u);
        }
    }

    #[test]
    fn ising_sweep_flags_the_critical_point() {
        // full-width window: the median-based prominence default needs the
        // off-critical baseline, not just the neighbourhood of the peak
        let spec = xy_spec(1.0, 0.0, 2.5, 0.01);
        let rows = sweep(&spec).unwrap();
        let best = rows
            .iter()
            .max_by(|a, b| a.du.abs().total_cmp(&b.du.abs()))
            .unwrap();
        assert!(
            (best.axis_value - 1.0).abs() <= 0.02,
            "argmax |du| at {}",
            best.axis_value
        );
        let points = detect_critical_points(&spec.grid, &rows, spec.axis, None).unwrap();
        let qpt: Vec<_> = points
            .iter()
            .filter(|p| p.classification == Classification::Qpt)
            .collect();
        assert!(
            qpt.iter().any(|p| (p.location - 1.0).abs() <= 0.02),
            "{points:?}"
        );
    }

    #[test]
    fn synthetic_flat_rows_yield_no_points() {
        let grid = Grid1D::new(0.0, 1.0, 0.05).unwrap();
        let rows: Vec<SweepRow> = grid
            .values
            .iter()
            .map(|&v| SweepRow {
                axis_value: v,
                correlators: CorrelatorSet {
                    n: 1,
                    sig_z: -0.5,
                    xx: 0.1,
                    yy: 0.1,
                    zz: 0.2,
                },
                u: 0.3,
                du: 0.0,
                d_correlators: [0.0; 4],
            })
            .collect();
        let points = detect_critical_points(&grid, &rows, SweepAxis::Lambda, None).unwrap();
        assert!(points.is_empty());
    }

    #[test]
    fn xyt_sweep_finds_both_gap_closing_lines() {
        let spec = SweepSpec {
            model: SweepModel::Xyt(XYTParams::new(0.5, 0.0, 0.5, 200, Temperature::Zero)),
            axis: SweepAxis::Lambda,
            grid: Grid1D::new(-1.0, 2.5, 0.01).unwrap(),
            separation: 1,
            prominence: None,
        };
        let rows = sweep(&spec).unwrap();
        let points = detect_critical_points(&spec.grid, &rows, spec.axis, None).unwrap();
        let qpt: Vec<f64> = points
            .iter()
            .filter(|p| p.classification == Classification::Qpt)
            .map(|p| p.location)
            .collect();
        // gap closes at λ = 2 and λ = 0 for α = 0.5
        assert!(qpt.iter().any(|&l| (l - 2.0).abs() <= 0.03), "{qpt:?}");
        assert!(qpt.iter().any(|&l| l.abs() <= 0.03), "{qpt:?}");
    }

    #[test]
    fn sweep_is_deterministic_across_worker_counts() {
        let spec = xy_spec(0.5, 0.5, 1.5, 0.05);
        let run = |workers: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .unwrap();
            pool.install(|| sweep(&spec).unwrap())
        };
        let one = run(1);
        let four = run(4);
        for (a, b) in one.iter().zip(&four) {
            assert_eq!(a.u.to_bits(), b.u.to_bits());
            assert_eq!(a.du.to_bits(), b.du.to_bits());
        }
    }

    #[test]
    fn degenerate_map_has_finite_entries() {
        let model = SweepModel::Xyt(XYTParams::new(0.5, 0.0, 0.0, 100, Temperature::Zero));
        let outer = Grid1D::new(0.0, 0.5, 0.5).unwrap();
        let lambda = Grid1D::new(0.2, 1.7, 0.1).unwrap();
        let map = phase_map(&model, SweepAxis::Alpha, &outer, &lambda, 1).unwrap();
        assert_eq!(map.entries.len(), outer.len() * lambda.len());
        assert!(map.entries.iter().all(|e| e.u.is_finite() && e.du.is_finite()));
    }

    #[test]
    fn gap_lines_reference_values() {
        let grid = Grid1D::new(0.0, 1.0, 0.5).unwrap();
        let (upper, lower) = gap_closing_lines(&grid);
        assert_eq!(upper, vec![(0.0, 1.0), (0.5, 2.0), (1.0, 3.0)]);
        assert_eq!(lower, vec![(0.0, -1.0), (0.5, 0.0), (1.0, 1.0)]);
    }

    #[test]
    fn sweep_reports_the_failing_axis_value() {
        // n ≥ N/2 fails inside every point; the error carries the coordinate
        let spec = SweepSpec {
            model: SweepModel::Xyt(XYTParams::new(0.5, 0.0, 0.0, 4, Temperature::Zero)),
            axis: SweepAxis::Lambda,
            grid: Grid1D::new(0.0, 1.0, 0.05).unwrap(),
            separation: 3,
            prominence: None,
        };
        match sweep(&spec) {
            Err(Error::SweepPoint { axis_value, .. }) => assert_eq!(axis_value, 0.0),
            other => panic!("expected sweep-point error, got {other:?}"),
        }
    }
}
