//! Freezing-front calculator for a semi-infinite liquid slab. Solves a
//! problem file (imposed face temperature, or a convective film decaying as
//! `h_0 / sqrt(t)`), translates between the two face conditions, sweeps the
//! film strength, or runs the numerical verification battery.
//!
//! Exit codes: 0 success, 1 a numerical check failed, 2 bad input, 3 the
//! data do not freeze the slab.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use stefan_kit::equivalence;
use stefan_kit::model;
use stefan_kit::verify::enthalpy::{enthalpy_march, FrontPath, MarchConfig};
use stefan_kit::verify::{dimensionless_roundtrip, pde_residual, ResidualReport, RoundTrip};
use stefan_kit::{
    solve_with, BoundaryCondition, DimensionlessGroups, Error, Phase, ProblemSpec, Regime,
    RootTolerance, SimilaritySolution,
};

// Verification gates, fixed here so runs stay comparable across machines.
const HEAT_ORDER_MIN: f64 = 1.85;
const STEFAN_ORDER_MIN: f64 = 0.9;
const ROBIN_REL_MAX: f64 = 1e-8;
const FRONT_ERROR_MAX: f64 = 0.02;
const ROUNDTRIP_GAP_MAX: f64 = 1e-10;

#[derive(Parser)]
#[command(name = "stefan", version, about = "one-dimensional freezing-front calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file; write a summary JSON and a profile CSV
    Solve(SolveArgs),
    /// Map a problem onto its other face-condition form and check the round trip
    Equivalence(EquivalenceArgs),
    /// Tabulate the front coefficient over a log grid of film strengths
    Sweep(SweepArgs),
    /// Check the solution against the governing equations and a marching oracle
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// problem description, flat JSON
    #[arg(long, value_name = "PATH")]
    spec: PathBuf,
    /// output stem: writes <STEM>.json and <STEM>.csv
    #[arg(long, value_name = "STEM")]
    out: PathBuf,
    /// profile sample times, seconds
    #[arg(long, value_delimiter = ',', default_value = "900,1800,3600", value_name = "A,B,C")]
    times: Vec<f64>,
    /// spatial samples per time row
    #[arg(long, default_value_t = 50, value_name = "N")]
    x_samples: usize,
    /// bulk temperature, enables the bulk front bound for an imposed-temperature spec
    #[arg(long, value_name = "T", allow_hyphen_values = true)]
    t_inf: Option<f64>,
    /// front-map residual tolerance for the root solve
    #[arg(long, env = "STEFAN_KIT_TOL", value_name = "TOL", allow_hyphen_values = true)]
    tol: Option<f64>,
    /// exit 3 instead of reporting a pure-conduction solution
    #[arg(long)]
    require_two_phase: bool,
}

#[derive(Args)]
struct EquivalenceArgs {
    /// problem description, flat JSON
    #[arg(long, value_name = "PATH")]
    spec: PathBuf,
    /// bulk temperature; required to map an imposed-temperature spec
    #[arg(long, value_name = "T", allow_hyphen_values = true)]
    t_inf: Option<f64>,
    /// report path; stdout when omitted
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// problem description, flat JSON
    #[arg(long, value_name = "PATH")]
    spec: PathBuf,
    /// film coefficient grid lo:hi:n, log spaced, inclusive
    #[arg(long, value_name = "LO:HI:N")]
    h0_grid: String,
    /// bulk temperature, to sweep from an imposed-temperature spec
    #[arg(long, value_name = "T", allow_hyphen_values = true)]
    t_inf: Option<f64>,
    /// CSV path; stdout when omitted
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// problem description, flat JSON
    #[arg(long, value_name = "PATH")]
    spec: PathBuf,
    /// residual sample times, seconds
    #[arg(long, value_delimiter = ',', default_value = "900,1800,3600", value_name = "A,B,C")]
    times: Vec<f64>,
    /// marching oracle resolution, cells
    #[arg(long, default_value_t = 2000, value_name = "N")]
    cells: usize,
    /// report path; stdout when omitted
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Diagnostic plus the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Regime(_) => 3,
            Error::Solver(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(&a),
        Command::Equivalence(a) => cmd_equivalence(&a),
        Command::Sweep(a) => cmd_sweep(&a),
        Command::Verify(a) => cmd_verify(&a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn check_times(times: &[f64]) -> Result<(), Failure> {
    if times.is_empty() {
        return Err(Failure::input("need at least one sample time"));
    }
    for &t in times {
        if !t.is_finite() || t <= 0.0 {
            return Err(Failure::input(format!("sample times must be positive, got {t}")));
        }
    }
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json(value: &impl Serialize) -> Result<String, Failure> {
    let mut json = serde_json::to_string_pretty(value)?;
    json.push('\n');
    Ok(json)
}

fn phase_label(phase: Phase) -> &'static str {
    match phase {
        Phase::Solid => "solid",
        Phase::Interface => "interface",
        Phase::Liquid => "liquid",
    }
}

#[derive(Serialize)]
struct SolveSummary {
    spec: ProblemSpec,
    regime: Regime,
    #[serde(skip_serializing_if = "Option::is_none")]
    front_coefficient: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    front_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    front_bracket: Option<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solver_iterations: Option<u32>,
    groups: DimensionlessGroups,
    #[serde(skip_serializing_if = "Option::is_none")]
    critical_h0: Option<f64>,
    face_temperature: f64,
    /// q0 in the face flux law `sqrt(t) k dT/dx(0,t) = q0`
    flux_coefficient: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    intrinsic_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bulk_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bulk_bound_informative: Option<bool>,
}

/// intrinsic bound, bulk bound, and whether the bulk bound bites
type FrontBounds = (Option<f64>, Option<f64>, Option<bool>);

/// Bounds on erf(c sqrt(b)) for the solved front coefficient. Imposed
/// temperature: straight from the data, bulk bound only if a bulk
/// temperature was offered. Two-phase film: through the equivalent
/// imposed-temperature problem at the maintained face value, with the
/// spec's own bulk. Pure conduction: no front, no bounds.
fn front_bounds(
    sol: &SimilaritySolution,
    t_inf_flag: Option<f64>,
) -> Result<FrontBounds, Failure> {
    match (sol.spec.bc, sol.front) {
        (BoundaryCondition::Dirichlet { .. }, _) => {
            let b = equivalence::xi_bounds(&sol.spec, t_inf_flag)?;
            Ok((Some(b.intrinsic_bound), b.bulk_bound, b.bulk_bound_informative))
        }
        (BoundaryCondition::Convective { t_inf, .. }, Some(front)) => {
            let t_0 = equivalence::t0_from_convective(&sol.spec, front.coeff)?;
            let equiv = ProblemSpec::new(
                sol.spec.material,
                sol.spec.t_i,
                BoundaryCondition::Dirichlet { t_0 },
            )?;
            let b = equivalence::xi_bounds(&equiv, Some(t_inf))?;
            Ok((Some(b.intrinsic_bound), b.bulk_bound, b.bulk_bound_informative))
        }
        _ => Ok((None, None, None)),
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<u8, Failure> {
    check_times(&args.times)?;
    if args.x_samples < 2 {
        return Err(Failure::input(format!(
            "need at least 2 spatial samples, got {}",
            args.x_samples
        )));
    }
    let spec = ProblemSpec::from_json_file(&args.spec)?;
    let tol = match args.tol {
        None => RootTolerance::default(),
        Some(v) => RootTolerance::with_residual(v)?,
    };
    let sol = solve_with(&spec, tol)?;
    if args.require_two_phase && sol.front.is_none() {
        return Err(Failure {
            code: 3,
            message: "the data do not freeze the slab (film below the critical strength)".into(),
        });
    }

    let (intrinsic_bound, bulk_bound, bulk_bound_informative) = front_bounds(&sol, args.t_inf)?;
    let critical_h0 = match spec.bc {
        BoundaryCondition::Convective { .. } => Some(model::critical_h0(&spec)?),
        _ => None,
    };
    let summary = SolveSummary {
        spec,
        regime: sol.regime(),
        front_coefficient: sol.front.map(|f| f.coeff),
        front_residual: sol.front.map(|f| f.residual),
        front_bracket: sol.front.map(|f| f.bracket),
        solver_iterations: sol.front.map(|f| f.iterations),
        groups: sol.groups,
        critical_h0,
        face_temperature: sol.face_temperature(),
        flux_coefficient: sol.face_flux_coefficient()?,
        intrinsic_bound,
        bulk_bound,
        bulk_bound_informative,
    };
    std::fs::write(args.out.with_extension("json"), to_json(&summary)?)?;

    // one shared x grid so rows at different times line up in plots
    let t_max = args.times.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    let x_max = match sol.front {
        Some(_) => 3.0 * sol.front_position(t_max)?,
        None => 5.0 * (spec.material.alpha_l() * t_max).sqrt(),
    };
    let mut csv = String::from("t,x,temperature,phase\n");
    for &t in &args.times {
        for i in 0..args.x_samples {
            let x = x_max * i as f64 / (args.x_samples - 1) as f64;
            let (v, phase) = sol.temperature(x, t)?;
            writeln!(csv, "{t:?},{x:?},{v:?},{}", phase_label(phase)).expect("string write");
        }
    }
    std::fs::write(args.out.with_extension("csv"), csv)?;
    Ok(0)
}

fn cmd_equivalence(args: &EquivalenceArgs) -> Result<u8, Failure> {
    let spec = ProblemSpec::from_json_file(&args.spec)?;
    let report = match spec.bc {
        BoundaryCondition::Dirichlet { .. } => {
            let t_inf = args.t_inf.ok_or_else(|| {
                Failure::input("mapping an imposed-temperature spec needs --t-inf")
            })?;
            equivalence::roundtrip_check(&spec, t_inf)?
        }
        BoundaryCondition::Convective { .. } => equivalence::roundtrip_check_reverse(&spec)?,
        BoundaryCondition::Flux { .. } => {
            return Err(Failure::input("no equivalence map for an imposed-flux spec"))
        }
    };
    emit(args.out.as_deref(), &to_json(&report)?)?;
    if report.roundtrip_gap <= ROUNDTRIP_GAP_MAX {
        Ok(0)
    } else {
        eprintln!(
            "round-trip gap {:e} exceeds {:e}",
            report.roundtrip_gap, ROUNDTRIP_GAP_MAX
        );
        Ok(1)
    }
}

/// Parse `lo:hi:n` into n log-spaced values from lo to hi inclusive.
fn parse_log_grid(text: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = text.split(':').collect();
    let [lo, hi, n] = parts[..] else {
        return Err(Failure::input(format!("grid must look like lo:hi:n, got {text:?}")));
    };
    let lo: f64 = lo.parse().map_err(|_| Failure::input(format!("bad grid start {lo:?}")))?;
    let hi: f64 = hi.parse().map_err(|_| Failure::input(format!("bad grid end {hi:?}")))?;
    let n: usize = n.parse().map_err(|_| Failure::input(format!("bad grid count {n:?}")))?;
    if !lo.is_finite() || !hi.is_finite() || lo <= 0.0 || hi <= lo {
        return Err(Failure::input(format!("log grid needs 0 < lo < hi, got {text:?}")));
    }
    if n < 2 {
        return Err(Failure::input(format!("grid needs at least 2 points, got {n}")));
    }
    let ratio = hi / lo;
    Ok((0..n).map(|i| lo * ratio.powf(i as f64 / (n - 1) as f64)).collect())
}

fn cmd_sweep(args: &SweepArgs) -> Result<u8, Failure> {
    let spec = ProblemSpec::from_json_file(&args.spec)?;
    let grid = parse_log_grid(&args.h0_grid)?;
    let template = match spec.bc {
        BoundaryCondition::Convective { .. } => spec,
        BoundaryCondition::Dirichlet { .. } => {
            let t_inf = args.t_inf.ok_or_else(|| {
                Failure::input("sweeping from an imposed-temperature spec needs --t-inf")
            })?;
            // the grid supplies every h_0; the template only carries the rest
            ProblemSpec::new(
                spec.material,
                spec.t_i,
                BoundaryCondition::Convective { h_0: 1.0, t_inf },
            )?
        }
        BoundaryCondition::Flux { .. } => {
            return Err(Failure::input("no film sweep for an imposed-flux spec"))
        }
    };
    let rows = equivalence::lambda_sweep(&template, &grid)?;
    let mut csv = String::from("h0,lambda,T0_equiv\n");
    for row in &rows {
        let lambda = row.lambda.map(|v| format!("{v:?}")).unwrap_or_default();
        let t0 = row.t0_equiv.map(|v| format!("{v:?}")).unwrap_or_default();
        writeln!(csv, "{:?},{lambda},{t0}", row.h_0).expect("string write");
        if let Some(note) = &row.note {
            eprintln!("note: h0 = {:?}: {note}", row.h_0);
        }
    }
    emit(args.out.as_deref(), &csv)?;
    Ok(0)
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    value: f64,
    limit: f64,
    /// true: value must stay at or above the limit; false: at or below
    at_least: bool,
    pass: bool,
}

impl Check {
    fn floor(name: &'static str, value: f64, limit: f64) -> Self {
        Check { name, value, limit, at_least: true, pass: value >= limit }
    }

    fn ceiling(name: &'static str, value: f64, limit: f64) -> Self {
        Check { name, value, limit, at_least: false, pass: value <= limit }
    }
}

#[derive(Serialize)]
struct MarchSummary {
    cells: usize,
    x_step: f64,
    dt: f64,
    max_rel_error: f64,
    /// thinned front trajectory rows (t, numeric s, analytic s)
    trajectory: Vec<(f64, f64, f64)>,
}

impl MarchSummary {
    fn from_path(path: &FrontPath) -> Self {
        let n = path.times.len();
        let stride = (n / 32).max(1);
        let mut trajectory: Vec<(f64, f64, f64)> = (0..n)
            .step_by(stride)
            .map(|i| (path.times[i], path.numeric[i], path.analytic[i]))
            .collect();
        if n > 0 && !(n - 1).is_multiple_of(stride) {
            trajectory.push((path.times[n - 1], path.numeric[n - 1], path.analytic[n - 1]));
        }
        MarchSummary {
            cells: path.cells,
            x_step: path.x_step,
            dt: path.dt,
            max_rel_error: path.max_rel_error,
            trajectory,
        }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    spec: ProblemSpec,
    residuals: ResidualReport,
    march: MarchSummary,
    round_trips: Vec<RoundTrip>,
    checks: Vec<Check>,
    pass: bool,
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    check_times(&args.times)?;
    let spec = ProblemSpec::from_json_file(&args.spec)?;
    let sol = stefan_kit::solve(&spec)?;
    if sol.front.is_none() {
        return Err(Failure {
            code: 3,
            message: "verification needs a two-phase solution; the data do not freeze the slab"
                .into(),
        });
    }
    let t_min = args.times.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    let t_max = args.times.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));

    // resolution tied to the thinnest solid layer sampled, so the observed
    // orders come out clean for any material
    let x_step = sol.front_position(t_min)? / 30.0;
    let residuals = pde_residual(&sol, x_step, &args.times)?;

    let march_cfg = MarchConfig {
        t_start: 0.1 * t_max,
        t_end: t_max,
        cells: args.cells,
        dt_override: None,
    };
    let path = enthalpy_march(&sol, &march_cfg)?;

    let round_trips = vec![dimensionless_roundtrip(&spec, 0.1)?, dimensionless_roundtrip(&spec, 2.5)?];
    let mut rt_worst = 0.0f64;
    for rt in &round_trips {
        rt_worst = rt_worst.max(rt.coefficient_gap).max(rt.front_gap).max(rt.field_gap);
    }

    let mut checks = vec![
        Check::floor("heat order (solid)", residuals.orders.heat_order_solid, HEAT_ORDER_MIN),
        Check::floor("heat order (liquid)", residuals.orders.heat_order_liquid, HEAT_ORDER_MIN),
        Check::floor("front balance order", residuals.orders.stefan_order, STEFAN_ORDER_MIN),
    ];
    if let Some(robin) = residuals.robin_residual {
        checks.push(Check::ceiling("film balance residual", robin, ROBIN_REL_MAX));
    }
    checks.push(Check::ceiling("enthalpy front error", path.max_rel_error, FRONT_ERROR_MAX));
    checks.push(Check::ceiling("dimensionless round trip", rt_worst, ROUNDTRIP_GAP_MAX));

    let pass = checks.iter().all(|c| c.pass);
    let report = VerifyReport {
        spec,
        residuals,
        march: MarchSummary::from_path(&path),
        round_trips,
        checks,
        pass,
    };
    emit(args.out.as_deref(), &to_json(&report)?)?;
    if pass {
        Ok(0)
    } else {
        for c in report.checks.iter().filter(|c| !c.pass) {
            let sense = if c.at_least { "below" } else { "above" };
            eprintln!("failed: {} = {:e}, {sense} the limit {:e}", c.name, c.value, c.limit);
        }
        Ok(1)
    }
}
