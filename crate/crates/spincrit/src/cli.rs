//! Command-line front end: single-point evaluation, sweeps, phase maps,
//! brute-force oracle runs, and gap-line emission, with CSV/JSON output.
//!
//! Flag values override config-file values, which override the built-in
//! defaults. Output is deterministic: re-running a command with the same
//! resolved configuration produces byte-identical data sections.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::criticality::{
    self, Classification, PhaseMap, SweepAxis, SweepModel, SweepRow, SweepSpec,
};
use crate::lqu::{self, MeasuredSide};
use crate::numerics::Grid1D;
use crate::state;
use crate::xy::XYParams;
use crate::xyt::{ModeConvention, XYTParams};
use crate::{Temperature};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const EXIT_COMPUTATION: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "spincrit", version, about = "Local quantum uncertainty and criticality of XY/XYT spin chains")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Debug, Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Evaluate correlators and U at a single parameter point.
    Point,
    /// Sweep U and its derivative along λ (or α) and classify the peaks.
    Sweep,
    /// 2D phase map of (u, du) over (γ, λ) or (α, λ).
    Map,
    /// Compare the closed-form LQU against the brute-force minimizer on
    /// seeded random states.
    Oracle,
    /// Emit the analytic XYT gap-closing lines over an α range.
    Lines,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Point => "point",
            Command::Sweep => "sweep",
            Command::Map => "map",
            Command::Oracle => "oracle",
            Command::Lines => "lines",
        }
    }
}

#[derive(Debug, Args)]
struct Flags {
    /// Flat key=value config file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output path; stdout when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Worker threads (default: SPINCRIT_WORKERS or all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Absolute quadrature tolerance for the XY integrals.
    #[arg(long, global = true)]
    quad_tol: Option<f64>,
    /// Peak prominence; default is 5× the median |series|.
    #[arg(long, global = true)]
    prominence: Option<f64>,
    #[arg(long, global = true, value_enum)]
    mode_convention: Option<ModeConventionArg>,
    /// RNG seed for the oracle's random states.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[arg(long, global = true, value_enum)]
    model: Option<ModelKind>,
    /// Anisotropy γ; scalar, or start:stop:step as a map outer axis.
    #[arg(long, global = true)]
    gamma: Option<String>,
    /// Field parameter λ; scalar or start:stop:step.
    #[arg(long, global = true)]
    lambda: Option<String>,
    /// Three-spin coupling α; scalar or start:stop:step.
    #[arg(long, global = true)]
    alpha: Option<String>,
    /// Chain length for the XYT model.
    #[arg(long = "N", global = true)]
    sites: Option<usize>,
    /// Site separation n.
    #[arg(long = "n", global = true)]
    separation: Option<usize>,
    /// Zero-temperature thermal ground state (the default).
    #[arg(long, global = true, conflicts_with = "beta")]
    zero_temp: bool,
    /// Inverse temperature β = 1/T.
    #[arg(long, global = true)]
    beta: Option<f64>,
    /// Number of random states per family for the oracle command.
    #[arg(long, global = true)]
    lqu_random: Option<usize>,
    /// Polar × azimuthal brute-force grid resolution for the oracle.
    #[arg(long, global = true)]
    oracle_steps: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    Xy,
    Xyt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeConventionArg {
    Paper,
    Symmetric,
}

/// Scalar value or start:stop:step range.
#[derive(Debug, Clone, Copy)]
enum AxisArg {
    Scalar(f64),
    Range { start: f64, stop: f64, step: f64 },
}

impl AxisArg {
    fn parse(text: &str) -> Result<AxisArg, String> {
        let parts: Vec<&str> = text.split(':').collect();
        match parts.as_slice() {
            [one] => one
                .trim()
                .parse()
                .map(AxisArg::Scalar)
                .map_err(|e| format!("bad scalar '{text}': {e}")),
            [a, b, c] => {
                let parse = |s: &str| {
                    s.trim()
                        .parse::<f64>()
                        .map_err(|e| format!("bad range '{text}': {e}"))
                };
                Ok(AxisArg::Range {
                    start: parse(a)?,
                    stop: parse(b)?,
                    step: parse(c)?,
                })
            }
            _ => Err(format!("expected VALUE or START:STOP:STEP, got '{text}'")),
        }
    }

    fn scalar(&self, name: &str) -> Result<f64, String> {
        match self {
            AxisArg::Scalar(v) => Ok(*v),
            AxisArg::Range { .. } => Err(format!("--{name} must be a scalar for this command")),
        }
    }

    fn grid(&self, name: &str) -> Result<Grid1D, String> {
        match self {
            AxisArg::Scalar(_) => Err(format!(
                "--{name} must be a start:stop:step range for this command"
            )),
            AxisArg::Range { start, stop, step } => {
                Grid1D::new(*start, *stop, *step).map_err(|e| e.to_string())
            }
        }
    }

    fn describe(&self) -> String {
        match self {
            AxisArg::Scalar(v) => format!("{v}"),
            AxisArg::Range { start, stop, step } => format!("{start}:{stop}:{step}"),
        }
    }
}

/// Fully resolved configuration of one invocation.
#[derive(Debug, Clone)]
struct RunConfig {
    command: Command,
    model: ModelKind,
    gamma: AxisArg,
    lambda: AxisArg,
    alpha: AxisArg,
    sites: usize,
    separation: usize,
    temperature: Temperature,
    mode_convention: ModeConvention,
    quad_tol: f64,
    prominence: Option<f64>,
    workers: usize,
    seed: u64,
    lqu_random: usize,
    oracle_steps: usize,
    format: OutputFormat,
    output: Option<PathBuf>,
}

impl RunConfig {
    fn header_entries(&self) -> BTreeMap<&'static str, String> {
        let mut m = BTreeMap::new();
        m.insert("command", self.command.name().to_string());
        m.insert(
            "model",
            match self.model {
                ModelKind::Xy => "xy",
                ModelKind::Xyt => "xyt",
            }
            .to_string(),
        );
        m.insert("gamma", self.gamma.describe());
        m.insert("lambda", self.lambda.describe());
        m.insert("alpha", self.alpha.describe());
        m.insert("N", self.sites.to_string());
        m.insert("n", self.separation.to_string());
        m.insert(
            "temperature",
            match self.temperature {
                Temperature::Zero => "zero".to_string(),
                Temperature::InverseBeta(b) => format!("beta={b}"),
            },
        );
        m.insert(
            "mode_convention",
            match self.mode_convention {
                ModeConvention::Paper => "paper",
                ModeConvention::Symmetric => "symmetric",
            }
            .to_string(),
        );
        m.insert("quad_tol", format!("{}", self.quad_tol));
        m.insert(
            "prominence",
            self.prominence
                .map(|p| format!("{p}"))
                .unwrap_or_else(|| "auto".to_string()),
        );
        m.insert("workers", self.workers.to_string());
        m.insert("seed", self.seed.to_string());
        m.insert("lqu_random", self.lqu_random.to_string());
        m.insert("oracle_steps", self.oracle_steps.to_string());
        m
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn computation_error(config: Option<&RunConfig>, err: &crate::Error) -> i32 {
    let record = serde_json::json!({
        "status": "error",
        "version": VERSION,
        "command": config.map(|c| c.command.name()),
        "error": err.to_string(),
    });
    eprintln!("{record}");
    EXIT_COMPUTATION
}

/// Entry point for the `spincrit` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_parsed(cli)
}

fn run_parsed(cli: Cli) -> i32 {
    let config = match resolve_config(&cli) {
        Ok(c) => c,
        Err(msg) => return usage_error(&msg),
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
    {
        Ok(p) => p,
        Err(e) => return usage_error(&format!("cannot build worker pool: {e}")),
    };
    let result = pool.install(|| execute(&config));
    match result {
        Ok(doc) => match write_output(&config, &doc) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                EXIT_COMPUTATION
            }
        },
        Err(ExecError::Usage(msg)) => usage_error(&msg),
        Err(ExecError::Computation(e)) => computation_error(Some(&config), &e),
    }
}

fn resolve_config(cli: &Cli) -> Result<RunConfig, String> {
    let mut file: BTreeMap<String, String> = BTreeMap::new();
    if let Some(path) = &cli.flags.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {} is not key=value", lineno + 1))?;
            file.insert(key.trim().to_string(), value.trim().to_string());
        }
    }
    let from_file = |key: &str| file.get(key).cloned();

    let model = match cli.flags.model {
        Some(m) => m,
        None => match from_file("model").as_deref() {
            Some("xy") | None => ModelKind::Xy,
            Some("xyt") => ModelKind::Xyt,
            Some(other) => return Err(format!("unknown model '{other}' in config")),
        },
    };
    let axis = |flag: &Option<String>, key: &str, default: f64| -> Result<AxisArg, String> {
        if let Some(text) = flag {
            AxisArg::parse(text)
        } else if let Some(text) = from_file(key) {
            AxisArg::parse(&text)
        } else {
            Ok(AxisArg::Scalar(default))
        }
    };
    let gamma = axis(&cli.flags.gamma, "gamma", 0.5)?;
    let lambda = axis(&cli.flags.lambda, "lambda", 1.0)?;
    let alpha = axis(&cli.flags.alpha, "alpha", 0.0)?;

    let parse_file = |key: &str| -> Result<Option<f64>, String> {
        from_file(key)
            .map(|v| v.parse::<f64>().map_err(|e| format!("bad {key} in config: {e}")))
            .transpose()
    };
    let parse_file_usize = |key: &str| -> Result<Option<usize>, String> {
        from_file(key)
            .map(|v| v.parse::<usize>().map_err(|e| format!("bad {key} in config: {e}")))
            .transpose()
    };

    let temperature = if let Some(beta) = cli.flags.beta {
        if beta <= 0.0 {
            return Err("--beta must be > 0".into());
        }
        Temperature::InverseBeta(beta)
    } else if cli.flags.zero_temp {
        Temperature::Zero
    } else if let Some(beta) = parse_file("beta")? {
        Temperature::InverseBeta(beta)
    } else {
        Temperature::Zero
    };

    let mode_convention = match cli.flags.mode_convention {
        Some(ModeConventionArg::Paper) => ModeConvention::Paper,
        Some(ModeConventionArg::Symmetric) => ModeConvention::Symmetric,
        None => match from_file("mode_convention").as_deref() {
            Some("symmetric") | None => ModeConvention::Symmetric,
            Some("paper") => ModeConvention::Paper,
            Some(other) => return Err(format!("unknown mode convention '{other}'")),
        },
    };

    let workers = cli
        .flags
        .workers
        .or(parse_file_usize("workers")?)
        .or_else(|| {
            std::env::var("SPINCRIT_WORKERS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
        });
    if workers == 0 {
        return Err("--workers must be ≥ 1".into());
    }

    let format = match cli.flags.format {
        Some(f) => f,
        None => match from_file("format").as_deref() {
            Some("json") => OutputFormat::Json,
            Some("csv") | None => OutputFormat::Csv,
            Some(other) => return Err(format!("unknown format '{other}'")),
        },
    };

    let output = cli
        .flags
        .output
        .clone()
        .or_else(|| from_file("output").map(PathBuf::from));

    Ok(RunConfig {
        command: cli.command,
        model,
        gamma,
        lambda,
        alpha,
        sites: cli
            .flags
            .sites
            .or(parse_file_usize("N")?)
            .unwrap_or(2000),
        separation: cli
            .flags
            .separation
            .or(parse_file_usize("n")?)
            .unwrap_or(1),
        temperature,
        mode_convention,
        quad_tol: cli
            .flags
            .quad_tol
            .or(parse_file("quad_tol")?)
            .unwrap_or(crate::xy::DEFAULT_QUAD_TOL),
        prominence: cli.flags.prominence.or(parse_file("prominence")?),
        workers,
        seed: cli
            .flags
            .seed
            .or(parse_file_usize("seed")?.map(|v| v as u64))
            .unwrap_or(0),
        lqu_random: cli
            .flags
            .lqu_random
            .or(parse_file_usize("lqu_random")?)
            .unwrap_or(100),
        oracle_steps: cli
            .flags
            .oracle_steps
            .or(parse_file_usize("oracle_steps")?)
            .unwrap_or(256),
        format,
        output,
    })
}

/// Rendered output: a resolved-config header plus a uniform data table.
struct Document {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
    trailer: Vec<String>,
}

fn fmt(v: f64) -> String {
    // 17 significant digits round-trip f64 losslessly
    format!("{v:.16e}")
}

fn sweep_model(config: &RunConfig) -> Result<SweepModel, String> {
    Ok(match config.model {
        ModelKind::Xy => {
            let mut p = XYParams::new(
                config.gamma.scalar("gamma")?,
                1.0,
                config.temperature,
            );
            p.quad_tol = config.quad_tol;
            SweepModel::Xy(p)
        }
        ModelKind::Xyt => {
            let mut p = XYTParams::new(
                config.gamma.scalar("gamma")?,
                1.0,
                0.0,
                config.sites,
                config.temperature,
            );
            p.mode_convention = config.mode_convention;
            SweepModel::Xyt(p)
        }
    })
}

fn execute(config: &RunConfig) -> Result<Document, ExecError> {
    match config.command {
        Command::Point => run_point(config),
        Command::Sweep => run_sweep(config),
        Command::Map => run_map(config),
        Command::Oracle => run_oracle(config),
        Command::Lines => run_lines(config),
    }
}

enum ExecError {
    Usage(String),
    Computation(crate::Error),
}

impl From<crate::Error> for ExecError {
    fn from(e: crate::Error) -> Self {
        ExecError::Computation(e)
    }
}

impl From<String> for ExecError {
    fn from(msg: String) -> Self {
        ExecError::Usage(msg)
    }
}

fn run_point(config: &RunConfig) -> Result<Document, ExecError> {
    let lambda = config.lambda.scalar("lambda")?;
    let alpha = config.alpha.scalar("alpha")?;
    let correlators = match config.model {
        ModelKind::Xy => {
            let mut p = XYParams::new(config.gamma.scalar("gamma")?, lambda, config.temperature);
            p.quad_tol = config.quad_tol;
            crate::xy::xy_correlators(config.separation, &p)?
        }
        ModelKind::Xyt => {
            let mut p = XYTParams::new(
                config.gamma.scalar("gamma")?,
                lambda,
                alpha,
                config.sites,
                config.temperature,
            );
            p.mode_convention = config.mode_convention;
            crate::xyt::xyt_correlators(config.separation, &p)?
        }
    };
    let state = state::build_rho(&correlators)?;
    let result = lqu::lqu(&state)?;
    Ok(Document {
        columns: vec![
            "lambda".into(),
            "alpha".into(),
            "sig_z".into(),
            "xx".into(),
            "yy".into(),
            "zz".into(),
            "u".into(),
        ],
        rows: vec![vec![
            fmt(lambda),
            fmt(alpha),
            fmt(correlators.sig_z),
            fmt(correlators.xx),
            fmt(correlators.yy),
            fmt(correlators.zz),
            fmt(result.u),
        ]],
        trailer: Vec::new(),
    })
}

fn sweep_axis_and_grid(config: &RunConfig) -> Result<(SweepAxis, Grid1D), String> {
    let lambda_range = matches!(config.lambda, AxisArg::Range { .. });
    let alpha_range = matches!(config.alpha, AxisArg::Range { .. });
    match (lambda_range, alpha_range) {
        (true, false) => Ok((SweepAxis::Lambda, config.lambda.grid("lambda")?)),
        (false, true) => {
            if config.model == ModelKind::Xy {
                Err("the XY model has no α axis; sweep --lambda instead".into())
            } else {
                Ok((SweepAxis::Alpha, config.alpha.grid("alpha")?))
            }
        }
        (true, true) => Err("sweep takes exactly one range axis (use map for two)".into()),
        (false, false) => Err("sweep needs --lambda or --alpha as start:stop:step".into()),
    }
}

fn sweep_rows(config: &RunConfig) -> Result<(SweepAxis, Grid1D, Vec<SweepRow>), ExecError> {
    let (axis, grid) = sweep_axis_and_grid(config)?;
    let mut model = sweep_model(config)?;
    // fixed values of the non-swept parameters
    match &mut model {
        SweepModel::Xy(p) => {
            if axis != SweepAxis::Lambda {
                p.lambda = config.lambda.scalar("lambda")?;
            }
        }
        SweepModel::Xyt(p) => {
            if axis != SweepAxis::Lambda {
                p.lambda = config.lambda.scalar("lambda")?;
            }
            if axis != SweepAxis::Alpha {
                p.alpha = config.alpha.scalar("alpha")?;
            }
        }
    }
    let spec = SweepSpec {
        model,
        axis,
        grid: grid.clone(),
        separation: config.separation,
        prominence: config.prominence,
    };
    let rows = criticality::sweep(&spec)?;
    Ok((axis, grid, rows))
}

fn run_sweep(config: &RunConfig) -> Result<Document, ExecError> {
    let (axis, grid, rows) = sweep_rows(config)?;
    let points = criticality::detect_critical_points(&grid, &rows, axis, config.prominence)?;
    let mut classification = vec![String::new(); rows.len()];
    for point in &points {
        if let Some(idx) = grid
            .values
            .iter()
            .position(|&v| (v - point.location).abs() < grid.step / 2.0)
        {
            classification[idx] = match point.classification {
                Classification::Qpt => "qpt",
                Classification::BranchSwitch => "branch_switch",
            }
            .to_string();
        }
    }
    let columns = vec![
        axis.name().to_string(),
        "sig_z".into(),
        "xx".into(),
        "yy".into(),
        "zz".into(),
        "u".into(),
        "du".into(),
        "d_sig_z".into(),
        "d_xx".into(),
        "d_yy".into(),
        "d_zz".into(),
        "classification".into(),
    ];
    let rows_out = rows
        .iter()
        .zip(classification)
        .map(|(r, class)| {
            vec![
                fmt(r.axis_value),
                fmt(r.correlators.sig_z),
                fmt(r.correlators.xx),
                fmt(r.correlators.yy),
                fmt(r.correlators.zz),
                fmt(r.u),
                fmt(r.du),
                fmt(r.d_correlators[0]),
                fmt(r.d_correlators[1]),
                fmt(r.d_correlators[2]),
                fmt(r.d_correlators[3]),
                class,
            ]
        })
        .collect();
    Ok(Document {
        columns,
        rows: rows_out,
        trailer: Vec::new(),
    })
}

fn run_map(config: &RunConfig) -> Result<Document, ExecError> {
    let lambda = config.lambda.grid("lambda")?;
    let gamma_range = matches!(config.gamma, AxisArg::Range { .. });
    let (outer_axis, outer) = match (config.model, gamma_range) {
        (ModelKind::Xy, _) => (SweepAxis::Gamma, config.gamma.grid("gamma")?),
        (ModelKind::Xyt, true) => (SweepAxis::Gamma, config.gamma.grid("gamma")?),
        (ModelKind::Xyt, false) => (SweepAxis::Alpha, config.alpha.grid("alpha")?),
    };
    let mut model = sweep_model(config)?;
    if let SweepModel::Xyt(p) = &mut model {
        if outer_axis != SweepAxis::Alpha {
            p.alpha = config.alpha.scalar("alpha")?;
        }
    }
    let map: PhaseMap =
        criticality::phase_map(&model, outer_axis, &outer, &lambda, config.separation)?;
    let columns = vec![
        outer_axis.name().to_string(),
        "lambda".into(),
        "u".into(),
        "du".into(),
    ];
    let cols = map.lambda_values.len();
    let rows = map
        .entries
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            vec![
                fmt(map.outer_values[idx / cols]),
                fmt(map.lambda_values[idx % cols]),
                fmt(e.u),
                fmt(e.du),
            ]
        })
        .collect();
    Ok(Document {
        columns,
        rows,
        trailer: Vec::new(),
    })
}

fn run_oracle(config: &RunConfig) -> Result<Document, ExecError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let steps = config.oracle_steps;
    let mut rows = Vec::new();
    let mut max_diff = 0.0f64;
    for family in ["x_state", "general"] {
        for index in 0..config.lqu_random {
            let rho = if family == "x_state" {
                state::random_x_state(&mut rng)
            } else {
                state::random_mixed_state(&mut rng, 4)
            };
            let closed = lqu::lqu_of(&rho, MeasuredSide::First)?.u;
            let brute = lqu::lqu_bruteforce_of(&rho, MeasuredSide::First, steps, steps)?;
            let diff = (closed - brute).abs();
            max_diff = max_diff.max(diff);
            rows.push(vec![
                index.to_string(),
                family.to_string(),
                fmt(closed),
                fmt(brute),
                fmt(diff),
            ]);
        }
    }
    Ok(Document {
        columns: vec![
            "index".into(),
            "family".into(),
            "u_closed_form".into(),
            "u_bruteforce".into(),
            "abs_diff".into(),
        ],
        rows,
        trailer: vec![format!("max_abs_diff = {}", fmt(max_diff))],
    })
}

fn run_lines(config: &RunConfig) -> Result<Document, ExecError> {
    let alpha = config.alpha.grid("alpha")?;
    let (upper, lower) = criticality::gap_closing_lines(&alpha);
    let rows = upper
        .iter()
        .zip(&lower)
        .map(|(&(a, up), &(_, low))| vec![fmt(a), fmt(up), fmt(low)])
        .collect();
    Ok(Document {
        columns: vec![
            "alpha".into(),
            "lambda_zero_mode".into(),
            "lambda_pi_mode".into(),
        ],
        rows,
        trailer: Vec::new(),
    })
}

fn write_output(config: &RunConfig, doc: &Document) -> std::io::Result<()> {
    let text = match config.format {
        OutputFormat::Csv => render_csv(config, doc),
        OutputFormat::Json => render_json(config, doc),
    };
    match &config.output {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            file.write_all(text.as_bytes())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())
        }
    }
}

fn render_csv(config: &RunConfig, doc: &Document) -> String {
    let mut out = String::new();
    out.push_str(&format!("# spincrit {VERSION}\n"));
    for (key, value) in config.header_entries() {
        out.push_str(&format!("# {key} = {value}\n"));
    }
    out.push_str(&doc.columns.join(","));
    out.push('\n');
    for row in &doc.rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    for line in &doc.trailer {
        out.push_str(&format!("# {line}\n"));
    }
    out
}

fn render_json(config: &RunConfig, doc: &Document) -> String {
    let header: BTreeMap<&str, String> = config.header_entries();
    let rows: Vec<BTreeMap<&str, &str>> = doc
        .rows
        .iter()
        .map(|row| {
            doc.columns
                .iter()
                .map(|c| c.as_str())
                .zip(row.iter().map(|v| v.as_str()))
                .collect()
        })
        .collect();
    let value = serde_json::json!({
        "version": VERSION,
        "config": header,
        "columns": doc.columns,
        "data": rows,
        "trailer": doc.trailer,
    });
    let mut text = serde_json::to_string_pretty(&value).expect("serializable");
    text.push('\n');
    text
}
