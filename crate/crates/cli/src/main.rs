//! Command-line front end: reproducible experiments over the corner-growth
//! toolkit with CSV outputs and JSON manifests.
//!
//! Exit codes: 0 success, 1 validation failure (acceptance criterion or
//! tolerance check), 2 invalid parameters, 3 I/O or serialization error,
//! 4 numerical failure (convergence/truncation).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use corner_growth::asymptotics::{
    convergence_ladder, exp_constants, rate_edge_coefficient, rescaled_cdf_points,
    tasep_fluct_params, EdgeConstants, EquilibriumDensity, Regime,
};
use corner_growth::ensemble::{exact_cdf_laguerre, exact_cdf_meixner_many, CdfValue};
use corner_growth::growth::{current_y, monte_carlo_batch, WeightKind};
use corner_growth::output::{
    write_cdf_csv, write_convergence_csv, write_samples_csv, write_tw_csv, Manifest,
};
use corner_growth::rng::index_stream;
use corner_growth::tw::{tw_table, TwMethod};
use corner_growth::{Error, ModelParams};

#[derive(Parser)]
#[command(name = "corner-growth", version, about = "Corner-growth model toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample corner passage times and their edge rescaling.
    Simulate(SimulateArgs),
    /// Tabulate the exact finite-size CDF of the passage time.
    Exact(ExactArgs),
    /// Tabulate the limiting edge distribution F(s).
    Tw(TwArgs),
    /// Emit limit constants, or a convergence ladder with --ladder.
    Asymp(AsympArgs),
    /// Sample the particle current of the exclusion process at time t.
    Tasep(TasepArgs),
    /// Run the full acceptance suite.
    Validate(ValidateArgs),
    /// Re-run a previous command from its manifest, byte-identically.
    Replay(ReplayArgs),
}

#[derive(clap::Args, Serialize, Deserialize)]
struct SimulateArgs {
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    #[arg(long)]
    n: usize,
    /// Number of columns; alternative to --gamma.
    #[arg(long, conflicts_with = "gamma")]
    m: Option<usize>,
    /// Aspect ratio; M = floor(gamma * N).
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Exponential weights instead of geometric (ignores --q).
    #[arg(long, default_value_t = false)]
    exp: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args, Serialize, Deserialize)]
struct ExactArgs {
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with = "gamma")]
    m: Option<usize>,
    #[arg(long)]
    gamma: Option<f64>,
    /// Exponential model (Laguerre route) instead of geometric.
    #[arg(long, default_value_t = false)]
    exp: bool,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t_min: f64,
    #[arg(long)]
    t_max: f64,
    /// Grid size for the exponential model (geometric thresholds are the
    /// integers in [t_min, t_max]).
    #[arg(long, default_value_t = 41)]
    points: usize,
    /// Rescaled table instead: edge grid "lo:hi:count".
    #[arg(long, allow_hyphen_values = true)]
    s_grid: Option<String>,
    /// Fail (exit 1) if any reported error bound exceeds this.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args, Serialize, Deserialize)]
struct TwArgs {
    /// Evaluation grid "lo:hi:count".
    #[arg(long, default_value = "-6:3:91", allow_hyphen_values = true)]
    s_grid: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Fredholm)]
    method: MethodArg,
    /// Fail (exit 1) if any estimated error exceeds this.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args, Serialize, Deserialize)]
struct AsympArgs {
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    /// Sizes "N1,N2,..." for a convergence ladder (writes CSV).
    #[arg(long)]
    ladder: Option<String>,
    /// Edge grid for the ladder, "lo:hi:count".
    #[arg(long, default_value = "-5:2:29", allow_hyphen_values = true)]
    s_grid: String,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args, Serialize, Deserialize)]
struct TasepArgs {
    /// Macroscopic position in [0, 1).
    #[arg(long, default_value_t = 0.0)]
    u: f64,
    #[arg(long)]
    t: f64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args, Serialize, Deserialize)]
struct ValidateArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Optional JSON report path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ReplayArgs {
    /// Path to a `.manifest.json` written by a previous run.
    manifest: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum MethodArg {
    Fredholm,
    Painleve,
}

impl From<MethodArg> for TwMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Fredholm => TwMethod::Fredholm,
            MethodArg::Painleve => TwMethod::Painleve,
        }
    }
}

fn parse_grid(spec: &str) -> Result<(f64, f64, usize), Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let err = || Error::Domain(format!("grid must be lo:hi:count, got {spec:?}"));
    if parts.len() != 3 {
        return Err(err());
    }
    let lo: f64 = parts[0].parse().map_err(|_| err())?;
    let hi: f64 = parts[1].parse().map_err(|_| err())?;
    let count: usize = parts[2].parse().map_err(|_| err())?;
    if count < 2 || hi <= lo {
        return Err(err());
    }
    Ok((lo, hi, count))
}

fn parse_ladder(spec: &str) -> Result<Vec<usize>, Error> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Domain(format!("ladder must be N1,N2,..., got {spec:?}")))
        })
        .collect()
}

fn resolve_params(q: f64, n: usize, m: Option<usize>, gamma: Option<f64>) -> Result<ModelParams, Error> {
    match (m, gamma) {
        (Some(m), _) => ModelParams::new(q, m, n),
        (None, Some(g)) => ModelParams::from_gamma(q, g, n),
        (None, None) => ModelParams::new(q, n, n),
    }
}

fn check_tol(rows: &[CdfValue], tol: Option<f64>) -> Result<(), Failure> {
    if let Some(tol) = tol {
        if let Some(bad) = rows.iter().find(|r| r.err > tol) {
            return Err(Failure::Validation(format!(
                "error bound {} at t={} exceeds --tol {}",
                bad.err, bad.t, tol
            )));
        }
    }
    Ok(())
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Validation(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn write_manifest<C: Serialize>(command: &str, config: &C, out: &Path) -> Result<(), Failure> {
    let manifest = Manifest::new(
        command,
        serde_json::to_value(config).map_err(Error::from)?,
        vec![out.display().to_string()],
    );
    manifest.write(&Manifest::path_for(out))?;
    Ok(())
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), Failure> {
    let params = resolve_params(args.q, args.n, args.m, args.gamma)?;
    let (kind, center, scale) = if args.exp {
        let (c, s) = exp_constants(params.gamma)?;
        (WeightKind::Exponential, c, s)
    } else {
        let ec = EdgeConstants::new(params.gamma, params.q)?;
        (WeightKind::Geometric, ec.omega, ec.sigma)
    };
    let batch = monte_carlo_batch(params, kind, args.samples, args.seed, center, scale)?;
    write_samples_csv(&args.out, &batch)?;
    write_manifest("simulate", args, &args.out)
}

fn cmd_exact(args: &ExactArgs) -> Result<(), Failure> {
    let params = resolve_params(args.q, args.n, args.m, args.gamma)?;
    if let Some(grid) = &args.s_grid {
        // rescaled table: s, integer threshold, probability
        let (lo, hi, count) = parse_grid(grid)?;
        let step = (hi - lo) / (count - 1) as f64;
        let s: Vec<f64> = (0..count).map(|i| lo + i as f64 * step).collect();
        let pts = rescaled_cdf_points(&params, &s)?;
        let mut text = String::from("s,t,p\n");
        for p in &pts {
            text.push_str(&format!("{},{},{}\n", p.s, p.t, p.p));
        }
        std::fs::write(&args.out, text).map_err(Error::from)?;
        return write_manifest("exact", args, &args.out);
    }
    let rows = if args.exp {
        if args.t_min < 0.0 {
            return Err(Error::Domain(format!("t_min must be >= 0, got {}", args.t_min)).into());
        }
        let step = (args.t_max - args.t_min) / (args.points.max(2) - 1) as f64;
        (0..args.points.max(2))
            .map(|i| exact_cdf_laguerre(params.m, params.n, args.t_min + i as f64 * step))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        let ts: Vec<i64> = (args.t_min.ceil() as i64..=args.t_max.floor() as i64).collect();
        if ts.is_empty() {
            return Err(Error::Domain(format!(
                "no integer thresholds in [{}, {}]",
                args.t_min, args.t_max
            ))
            .into());
        }
        exact_cdf_meixner_many(&params, &ts)?
    };
    check_tol(&rows, args.tol)?;
    write_cdf_csv(&args.out, &rows)?;
    write_manifest("exact", args, &args.out)
}

fn cmd_tw(args: &TwArgs) -> Result<(), Failure> {
    let (lo, hi, count) = parse_grid(&args.s_grid)?;
    let rows = tw_table(lo, hi, count, args.method.into())?;
    if let Some(tol) = args.tol {
        if let Some(bad) = rows.iter().find(|r| r.est_err > tol) {
            return Err(Failure::Validation(format!(
                "estimated error {} at s={} exceeds --tol {}",
                bad.est_err, bad.s, tol
            )));
        }
    }
    write_tw_csv(&args.out, &rows)?;
    write_manifest("tw", args, &args.out)
}

fn cmd_asymp(args: &AsympArgs) -> Result<(), Failure> {
    if let Some(ladder) = &args.ladder {
        let sizes = parse_ladder(ladder)?;
        let (lo, hi, count) = parse_grid(&args.s_grid)?;
        let rows = convergence_ladder(args.q, args.gamma, &sizes, lo, hi, count, TwMethod::Painleve)?;
        write_convergence_csv(&args.out, &rows)?;
        return write_manifest("asymp", args, &args.out);
    }
    let ec = EdgeConstants::new(args.gamma, args.q)?;
    let density = EquilibriumDensity::new(args.gamma, args.q)?;
    let (exp_mean, exp_scale) = exp_constants(args.gamma)?;
    let doc = json!({
        "constants": ec,
        "regime": match density.regime {
            Regime::Saturated => "saturated",
            Regime::Unsaturated => "unsaturated",
        },
        "equilibrium_mass": density.mass(),
        "rate_edge_coefficient": rate_edge_coefficient(args.gamma, args.q)?,
        "exponential_model": { "mean": exp_mean, "scale": exp_scale },
    });
    let mut text = serde_json::to_string_pretty(&doc).map_err(Error::from)?;
    text.push('\n');
    std::fs::write(&args.out, text).map_err(Error::from)?;
    write_manifest("asymp", args, &args.out)
}

fn cmd_tasep(args: &TasepArgs) -> Result<(), Failure> {
    let fluct = tasep_fluct_params(args.u)?;
    let (center, scale) = (fluct.center(args.t), fluct.scale(args.t));
    let mut text = String::from("sample_index,raw,rescaled\n");
    for i in 0..args.samples as u64 {
        let run_seed = index_stream(args.seed, i).next_u64();
        let y = current_y(args.u, args.t, run_seed)? as f64;
        text.push_str(&format!("{},{},{}\n", i, y, (y - center) / scale));
    }
    std::fs::write(&args.out, text).map_err(Error::from)?;
    write_manifest("tasep", args, &args.out)
}

fn cmd_validate(args: &ValidateArgs) -> Result<(), Failure> {
    let results = corner_growth::report::run_all(args.seed);
    for r in &results {
        println!("{r}");
    }
    if let Some(out) = &args.out {
        let mut text = serde_json::to_string_pretty(&results).map_err(Error::from)?;
        text.push('\n');
        std::fs::write(out, text).map_err(Error::from)?;
        write_manifest("validate", args, out)?;
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Validation(format!(
            "{} criterion(s) failed: {}",
            failed.len(),
            failed.join(", ")
        )))
    }
}

fn cmd_replay(args: &ReplayArgs) -> Result<(), Failure> {
    let manifest = Manifest::read(&args.manifest)?;
    let config = manifest.config.clone();
    let de = |e: serde_json::Error| Failure::Lib(Error::from(e));
    match manifest.command.as_str() {
        "simulate" => cmd_simulate(&serde_json::from_value(config).map_err(de)?),
        "exact" => cmd_exact(&serde_json::from_value(config).map_err(de)?),
        "tw" => cmd_tw(&serde_json::from_value(config).map_err(de)?),
        "asymp" => cmd_asymp(&serde_json::from_value(config).map_err(de)?),
        "tasep" => cmd_tasep(&serde_json::from_value(config).map_err(de)?),
        "validate" => cmd_validate(&serde_json::from_value(config).map_err(de)?),
        other => Err(Failure::Lib(Error::Domain(format!(
            "manifest command {other:?} is not replayable"
        )))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Simulate(a) => cmd_simulate(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Tw(a) => cmd_tw(a),
        Command::Asymp(a) => cmd_asymp(a),
        Command::Tasep(a) => cmd_tasep(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Replay(a) => cmd_replay(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("validation failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) | Error::OutOfRange(_) => ExitCode::from(2),
                Error::Io(_) | Error::Serde(_) => ExitCode::from(3),
                _ => ExitCode::from(4),
            }
        }
    }
}
