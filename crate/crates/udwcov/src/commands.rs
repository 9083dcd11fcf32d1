//! The `eval`, `sweep`, and `validate` subcommands.

use crate::config::ConfigFile;
use crate::output::{emit, OutputFormat, Record};
use crate::{EXIT_NONCONVERGENCE, EXIT_OK, EXIT_VALIDATION};
use anyhow::{bail, Result};
use clap::Args;
use std::path::PathBuf;
use std::time::Instant;
use udw_covariance::detector::DetectorConfig;
use udw_covariance::field::FieldState;
use udw_covariance::geometry::FrameSpec;
use udw_covariance::numerics::QuadratureSpec;
use udw_covariance::violation::{
    pointlike_trace_e, trace_e_dimensionless, trace_e_ei_2d, trace_e_reduced3d,
    trace_e_reference_mc, ViolationError, ViolationResult,
};

const DEFAULT_MC_SAMPLES: u64 = 10_000_000;
const DEFAULT_SEED: u64 = 1;
/// Declared cross-path tolerances for `validate`.
const PAIRWISE_REL_TOL: f64 = 1e-4;
const MC_SIGMA_BAND: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PathChoice {
    Mc,
    Reduced3d,
    Ei2d,
    Dimensionless,
}

impl PathChoice {
    fn label(&self) -> &'static str {
        match self {
            PathChoice::Mc => "mc",
            PathChoice::Reduced3d => "reduced3d",
            PathChoice::Ei2d => "ei2d",
            PathChoice::Dimensionless => "dimensionless",
        }
    }
}

impl std::str::FromStr for PathChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mc" => Ok(Self::Mc),
            "reduced3d" => Ok(Self::Reduced3d),
            "ei2d" => Ok(Self::Ei2d),
            "dimensionless" => Ok(Self::Dimensionless),
            other => Err(format!(
                "unknown path `{other}` (expected mc, reduced3d, ei2d or dimensionless)"
            )),
        }
    }
}

/// One resolved parameter point.
#[derive(Debug, Clone)]
enum PointSpec {
    /// Pointlike detector: the analytic null result.
    Pointlike { v: f64, omega: f64, t_switch: f64 },
    /// Gaussian detector given as the dimensionless triple.
    Triple { v: f64, t_over_ell: f64, omega_t: f64 },
    /// Gaussian detector given as the dimensional quadruple.
    Quadruple {
        v: f64,
        omega: f64,
        t_switch: f64,
        ell: f64,
    },
}

impl PointSpec {
    fn canonical_triple(&self) -> (f64, f64, f64) {
        match *self {
            PointSpec::Pointlike { v, omega, t_switch } => (v, f64::INFINITY, omega * t_switch),
            PointSpec::Triple { v, t_over_ell, omega_t } => (v, t_over_ell, omega_t),
            PointSpec::Quadruple { v, omega, t_switch, ell } => {
                (v, t_switch / ell, omega * t_switch)
            }
        }
    }

    /// Dimensional parameters for the paths that need them; the triple is
    /// realized at `ell = 1` (the value depends only on the triple).
    fn dimensional(&self) -> (f64, f64, f64, f64) {
        match *self {
            PointSpec::Pointlike { v, omega, t_switch } => (v, omega, t_switch, 0.0),
            PointSpec::Triple { v, t_over_ell, omega_t } => {
                (v, omega_t / t_over_ell, t_over_ell, 1.0)
            }
            PointSpec::Quadruple { v, omega, t_switch, ell } => (v, omega, t_switch, ell),
        }
    }
}

struct Evaluation {
    result: ViolationResult,
    converged: bool,
}

fn evaluate_point(
    point: &PointSpec,
    path: PathChoice,
    quad: &QuadratureSpec,
    mc_samples: u64,
    seed: u64,
) -> Result<Evaluation> {
    let state = FieldState::MasslessVacuum3p1;
    let outcome = match point {
        PointSpec::Pointlike { v, omega, t_switch } => {
            let cfg = DetectorConfig::pointlike(*omega, 0.0, *t_switch, *v)
                .map_err(|e| anyhow::anyhow!("{e}"))?;
            pointlike_trace_e(&cfg)
        }
        _ => match path {
            PathChoice::Dimensionless => {
                let (v, u, w) = point.canonical_triple();
                trace_e_dimensionless(v, u, w, quad)
            }
            _ => {
                let (v, omega, t_switch, ell) = point.dimensional();
                let cfg = DetectorConfig::gaussian(omega, 0.0, t_switch, ell, v)
                    .map_err(|e| anyhow::anyhow!("{e}"))?;
                match path {
                    PathChoice::Mc => {
                        trace_e_reference_mc(&cfg, &state, FrameSpec::lab(), mc_samples, seed)
                    }
                    PathChoice::Reduced3d => trace_e_reduced3d(&cfg, &state, quad),
                    PathChoice::Ei2d => trace_e_ei_2d(&cfg, &state, quad),
                    PathChoice::Dimensionless => unreachable!(),
                }
            }
        },
    };
    match outcome {
        Ok(result) => Ok(Evaluation { result, converged: true }),
        Err(ViolationError::NonConvergence { best }) => Ok(Evaluation {
            result: *best,
            converged: false,
        }),
        Err(other) => Err(anyhow::anyhow!("{other}")),
    }
}

fn record_for(point: &PointSpec, path: PathChoice, eval: &Evaluation, seconds: f64) -> Record {
    let (v, u, w) = point.canonical_triple();
    Record {
        v,
        t_over_ell: u,
        omega_t: w,
        im_value: eval.result.value.im,
        err: eval.result.error_estimate,
        path: if matches!(point, PointSpec::Pointlike { .. }) {
            "pointlike"
        } else {
            path.label()
        },
        seconds,
        converged: eval.converged,
    }
}

fn check_speed(v: f64) -> Result<f64> {
    if !(v.is_finite() && (0.0..1.0).contains(&v)) {
        bail!("speed v must satisfy 0 <= v < 1 (got {v})");
    }
    Ok(v)
}

/// Default quadrature spec, with a test-only override of the panel budget
/// (`UDWCOV_MAX_SUBDIVISIONS`) for exercising the non-convergence exit
/// path.
fn quad_spec() -> QuadratureSpec {
    let mut spec = QuadratureSpec::default();
    if let Some(n) = std::env::var("UDWCOV_MAX_SUBDIVISIONS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        spec.max_subdivisions = n.max(1);
    }
    spec
}

fn run_in_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    #[cfg(feature = "parallel")]
    {
        use anyhow::Context as _;
        if let Some(jobs) = jobs {
            if jobs == 0 {
                bail!("--jobs must be positive");
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .context("building thread pool")?;
            return Ok(pool.install(f));
        }
        Ok(f())
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        Ok(f())
    }
}

// ---------------------------------------------------------------------
// eval

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Detector speed relative to the lab frame, 0 <= v < 1.
    #[arg(long)]
    v: Option<f64>,
    /// Switching-to-smearing scale ratio T/l (dimensionless triple).
    #[arg(long = "t-over-ell")]
    t_over_ell: Option<f64>,
    /// Gap-switching product Omega*T (dimensionless triple).
    #[arg(long = "omega-t")]
    omega_t: Option<f64>,
    /// Proper energy gap Omega (dimensional quadruple).
    #[arg(long)]
    omega: Option<f64>,
    /// Switching timescale T (dimensional quadruple).
    #[arg(long = "t-switch")]
    t_switch: Option<f64>,
    /// Smearing lengthscale l (dimensional quadruple).
    #[arg(long)]
    ell: Option<f64>,
    /// Evaluation path: mc, reduced3d, ei2d or dimensionless.
    #[arg(long)]
    path: Option<String>,
    /// Pointlike detector (analytic null result; l is ignored).
    #[arg(long)]
    pointlike: bool,
    /// Monte-Carlo sample budget for --path mc.
    #[arg(long = "mc-samples")]
    mc_samples: Option<u64>,
    /// Monte-Carlo seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker bound for parallel evaluation.
    #[arg(long)]
    jobs: Option<usize>,
    /// Flat key/value config file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output format: csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn resolve_point(
    cfg: &ConfigFile,
    v: Option<f64>,
    t_over_ell: Option<f64>,
    omega_t: Option<f64>,
    omega: Option<f64>,
    t_switch: Option<f64>,
    ell: Option<f64>,
    pointlike: bool,
) -> Result<PointSpec> {
    let v = cfg.resolve(v, "v")?;
    let t_over_ell = cfg.resolve(t_over_ell, "t-over-ell")?;
    let omega_t = cfg.resolve(omega_t, "omega-t")?;
    let omega = cfg.resolve(omega, "omega")?;
    let t_switch = cfg.resolve(t_switch, "t-switch")?;
    let ell = cfg.resolve(ell, "ell")?;
    let pointlike = cfg.resolve_bool(pointlike, "pointlike")?;

    let Some(v) = v else { bail!("--v is required") };
    let v = check_speed(v)?;

    if pointlike {
        let (Some(omega), Some(t_switch)) = (omega, t_switch) else {
            bail!("--pointlike requires --omega and --t-switch");
        };
        return Ok(PointSpec::Pointlike { v, omega, t_switch });
    }
    match (t_over_ell, omega_t, omega, t_switch, ell) {
        (Some(u), Some(w), None, None, None) => {
            Ok(PointSpec::Triple { v, t_over_ell: u, omega_t: w })
        }
        (None, None, Some(omega), Some(t_switch), Some(ell)) => Ok(PointSpec::Quadruple {
            v,
            omega,
            t_switch,
            ell,
        }),
        _ => bail!(
            "give either the dimensionless triple (--v --t-over-ell --omega-t) \
             or the dimensional quadruple (--v --omega --t-switch --ell)"
        ),
    }
}

pub fn run_eval(args: EvalArgs) -> Result<i32> {
    let cfg = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let point = resolve_point(
        &cfg,
        args.v,
        args.t_over_ell,
        args.omega_t,
        args.omega,
        args.t_switch,
        args.ell,
        args.pointlike,
    )?;
    let path: PathChoice = cfg
        .resolve(args.path, "path")?
        .map(|s: String| s.parse())
        .transpose()
        .map_err(|e: String| anyhow::anyhow!(e))?
        .unwrap_or(PathChoice::Ei2d);
    let mc_samples = cfg
        .resolve(args.mc_samples, "mc-samples")?
        .unwrap_or(DEFAULT_MC_SAMPLES);
    let seed = cfg.resolve(args.seed, "seed")?.unwrap_or(DEFAULT_SEED);
    let jobs = cfg.resolve(args.jobs, "jobs")?;
    let format: OutputFormat = cfg
        .resolve(args.format, "format")?
        .map(|s: String| s.parse())
        .transpose()
        .map_err(|e: String| anyhow::anyhow!(e))?
        .unwrap_or(OutputFormat::Csv);
    let out = cfg.resolve(args.out, "out")?;

    let quad = QuadratureSpec::default();
    let started = Instant::now();
    let eval = run_in_pool(jobs, || {
        evaluate_point(&point, path, &quad, mc_samples, seed)
    })??;
    let record = record_for(&point, path, &eval, started.elapsed().as_secs_f64());
    let converged = record.converged;
    emit(&[record], format, out.as_deref())?;
    Ok(if converged { EXIT_OK } else { EXIT_NONCONVERGENCE })
}

// ---------------------------------------------------------------------
// sweep

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Comma-separated detector speeds.
    #[arg(long, value_delimiter = ',')]
    v: Vec<f64>,
    /// Comma-separated T/l ratios.
    #[arg(long = "t-over-ell", value_delimiter = ',')]
    t_over_ell: Vec<f64>,
    /// Comma-separated Omega*T products.
    #[arg(long = "omega-t", value_delimiter = ',')]
    omega_t: Vec<f64>,
    /// Evaluation path: mc, reduced3d, ei2d or dimensionless.
    #[arg(long)]
    path: Option<String>,
    #[arg(long = "mc-samples")]
    mc_samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker bound for concurrent row evaluation.
    #[arg(long)]
    jobs: Option<usize>,
    /// Flat key/value config file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output format: csv or json.
    #[arg(long)]
    format: Option<String>,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run_sweep(args: SweepArgs) -> Result<i32> {
    let cfg = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let vs = cfg.resolve_list(args.v, "v")?;
    let us = cfg.resolve_list(args.t_over_ell, "t-over-ell")?;
    let ws = cfg.resolve_list(args.omega_t, "omega-t")?;
    if vs.is_empty() || us.is_empty() || ws.is_empty() {
        bail!("sweep requires non-empty --v, --t-over-ell and --omega-t lists");
    }
    for &v in &vs {
        check_speed(v)?;
    }
    for &u in &us {
        if !(u.is_finite() && u > 0.0) {
            bail!("--t-over-ell entries must be positive (got {u})");
        }
    }
    for &w in &ws {
        if !(w.is_finite() && w >= 0.0) {
            bail!("--omega-t entries must be non-negative (got {w})");
        }
    }
    let path: PathChoice = cfg
        .resolve(args.path, "path")?
        .map(|s: String| s.parse())
        .transpose()
        .map_err(|e: String| anyhow::anyhow!(e))?
        .unwrap_or(PathChoice::Ei2d);
    let mc_samples = cfg
        .resolve(args.mc_samples, "mc-samples")?
        .unwrap_or(DEFAULT_MC_SAMPLES);
    let seed = cfg.resolve(args.seed, "seed")?.unwrap_or(DEFAULT_SEED);
    let jobs = cfg.resolve(args.jobs, "jobs")?;
    let format: OutputFormat = cfg
        .resolve(args.format, "format")?
        .map(|s: String| s.parse())
        .transpose()
        .map_err(|e: String| anyhow::anyhow!(e))?
        .unwrap_or(OutputFormat::Csv);
    let out = cfg.resolve(args.out, "out")?;

    // Row order is the nested order of the input lists (v outermost) and
    // is preserved regardless of evaluation concurrency.
    let mut points = Vec::new();
    for &v in &vs {
        for &u in &us {
            for &w in &ws {
                points.push(PointSpec::Triple { v, t_over_ell: u, omega_t: w });
            }
        }
    }

    let quad = QuadratureSpec::default();
    let evaluate_row = |(idx, point): (usize, &PointSpec)| -> Result<Record> {
        let started = Instant::now();
        // Decorrelate MC rows by offsetting the seed per row.
        let eval = evaluate_point(point, path, &quad, mc_samples, seed.wrapping_add(idx as u64))?;
        Ok(record_for(point, path, &eval, started.elapsed().as_secs_f64()))
    };

    let records: Result<Vec<Record>> = run_in_pool(jobs, || {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            points
                .par_iter()
                .enumerate()
                .map(|(idx, p)| evaluate_row((idx, p)))
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            points
                .iter()
                .enumerate()
                .map(|(idx, p)| evaluate_row((idx, p)))
                .collect()
        }
    })?;
    let records = records?;

    let all_converged = records.iter().all(|r| r.converged);
    for r in records.iter().filter(|r| !r.converged) {
        eprintln!(
            "warning: row (v={}, t_over_ell={}, omega_t={}) did not converge; best estimate kept",
            r.v, r.t_over_ell, r.omega_t
        );
    }
    emit(&records, format, out.as_deref())?;
    Ok(if all_converged { EXIT_OK } else { EXIT_NONCONVERGENCE })
}

// ---------------------------------------------------------------------
// validate

#[derive(Args, Debug)]
pub struct ValidateArgs {
    /// Grid selection: `standard` (12 points) or `quick` (3 points).
    #[arg(long)]
    grid: Option<String>,
    #[arg(long = "mc-samples")]
    mc_samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Flat key/value config file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

struct PointReport {
    v: f64,
    u: f64,
    w: f64,
    max_pairwise_rel: f64,
    max_mc_sigma: f64,
    pass: bool,
    lines: Vec<String>,
}

fn validate_point(
    v: f64,
    u: f64,
    w: f64,
    mc_samples: u64,
    seed: u64,
    perturb_ei2d: f64,
) -> Result<PointReport> {
    let state = FieldState::MasslessVacuum3p1;
    let quad = QuadratureSpec::default();
    let cfg = DetectorConfig::gaussian(w / u, 0.0, u, 1.0, v).map_err(|e| anyhow::anyhow!("{e}"))?;

    let reduced = trace_e_reduced3d(&cfg, &state, &quad).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut ei2d = trace_e_ei_2d(&cfg, &state, &quad).map_err(|e| anyhow::anyhow!("{e}"))?;
    ei2d.value *= perturb_ei2d;
    let dimless = trace_e_dimensionless(v, u, w, &quad).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mc = trace_e_reference_mc(&cfg, &state, FrameSpec::lab(), mc_samples, seed)
        .map_err(|e| anyhow::anyhow!("{e}"))?;

    let quads = [&reduced, &ei2d, &dimless];
    let mut max_pairwise_rel = 0.0f64;
    for i in 0..quads.len() {
        for j in (i + 1)..quads.len() {
            let (a, b) = (quads[i].value.im, quads[j].value.im);
            let rel = (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE);
            max_pairwise_rel = max_pairwise_rel.max(rel);
        }
    }

    let mut max_mc_sigma = 0.0f64;
    for q in quads {
        let sigma = (mc.error_estimate.powi(2) + q.error_estimate.powi(2)).sqrt();
        let z = (mc.value.im - q.value.im).abs() / sigma.max(f64::MIN_POSITIVE);
        max_mc_sigma = max_mc_sigma.max(z);
    }

    let pass = max_pairwise_rel <= PAIRWISE_REL_TOL && max_mc_sigma <= MC_SIGMA_BAND;
    let lines = vec![format!(
        "  v={v} T/l={u} OmegaT={w}: reduced3d {:+.6e}  ei2d {:+.6e}  dimensionless {:+.6e}  \
         mc {:+.6e}±{:.1e}  pairwise {:.2e}  mc-z {:.2}  {}",
        reduced.value.im,
        ei2d.value.im,
        dimless.value.im,
        mc.value.im,
        mc.error_estimate,
        max_pairwise_rel,
        max_mc_sigma,
        if pass { "ok" } else { "MISMATCH" }
    )];
    Ok(PointReport {
        v,
        u,
        w,
        max_pairwise_rel,
        max_mc_sigma,
        pass,
        lines,
    })
}

fn exact_zero_suite() -> Result<(bool, Vec<String>)> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut lines = Vec::new();
    let mut ok = true;
    let state = FieldState::MasslessVacuum3p1;
    let quad = QuadratureSpec::default();

    // Pointlike detectors: exactly zero for random parameter sets.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let cfg = DetectorConfig::pointlike(
            rng.gen_range(0.0..100.0),
            0.0,
            rng.gen_range(0.01..100.0),
            rng.gen_range(0.0..0.999),
        )
        .map_err(|e| anyhow::anyhow!("{e}"))?;
        let res = pointlike_trace_e(&cfg).map_err(|e| anyhow::anyhow!("{e}"))?;
        worst = worst.max(res.value.norm()).max(res.error_estimate);
    }
    let pass = worst == 0.0;
    ok &= pass;
    lines.push(format!(
        "  pointlike null result (100 random configs): {}",
        if pass { "exactly zero" } else { "NONZERO" }
    ));

    // Comoving detector: exact zero on every path.
    let cfg = DetectorConfig::gaussian(1.0, 0.0, 2.0, 1.0, 0.0).map_err(|e| anyhow::anyhow!("{e}"))?;
    let zeros = [
        trace_e_reduced3d(&cfg, &state, &quad).map_err(|e| anyhow::anyhow!("{e}"))?,
        trace_e_ei_2d(&cfg, &state, &quad).map_err(|e| anyhow::anyhow!("{e}"))?,
        trace_e_dimensionless(0.0, 2.0, 2.0, &quad).map_err(|e| anyhow::anyhow!("{e}"))?,
        trace_e_reference_mc(&cfg, &state, FrameSpec::lab(), 10_000, 7)
            .map_err(|e| anyhow::anyhow!("{e}"))?,
    ];
    let pass = zeros.iter().all(|r| r.value.norm() == 0.0 && r.error_estimate == 0.0);
    ok &= pass;
    lines.push(format!(
        "  comoving zero (v = 0, all paths): {}",
        if pass { "exactly zero" } else { "NONZERO" }
    ));

    // Zero gap: the oscillatory factor vanishes identically.
    let cfg = DetectorConfig::gaussian(0.0, 0.0, 2.0, 1.0, 0.6).map_err(|e| anyhow::anyhow!("{e}"))?;
    let res = trace_e_ei_2d(&cfg, &state, &quad).map_err(|e| anyhow::anyhow!("{e}"))?;
    let pass = res.value.norm() == 0.0;
    ok &= pass;
    lines.push(format!(
        "  zero-gap zero: {}",
        if pass { "exactly zero" } else { "NONZERO" }
    ));

    Ok((ok, lines))
}

pub fn run_validate(args: ValidateArgs) -> Result<i32> {
    let cfg = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let grid = cfg
        .resolve(args.grid, "grid")?
        .unwrap_or_else(|| "standard".to_string());
    let points: Vec<(f64, f64, f64)> = match grid.as_str() {
        "standard" => {
            let mut pts = Vec::new();
            for v in [0.3, 0.6, 0.9] {
                for u in [1.0, 10.0] {
                    for w in [0.5, 2.0] {
                        pts.push((v, u, w));
                    }
                }
            }
            pts
        }
        "quick" => vec![(0.3, 1.0, 0.5), (0.6, 10.0, 2.0), (0.9, 1.0, 2.0)],
        other => bail!("unknown grid `{other}` (expected standard or quick)"),
    };
    let default_samples = if grid == "quick" { 1_000_000 } else { DEFAULT_MC_SAMPLES };
    let mc_samples = cfg
        .resolve(args.mc_samples, "mc-samples")?
        .unwrap_or(default_samples);
    let seed = cfg.resolve(args.seed, "seed")?.unwrap_or(DEFAULT_SEED);
    let jobs = cfg.resolve(args.jobs, "jobs")?;

    // Test-only negative control: scales the ei2d value to make the
    // cross-path comparison fail.
    let perturb = std::env::var("UDWCOV_PERTURB_EI2D")
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .unwrap_or(1.0);

    println!("cross-path agreement (pairwise tol {PAIRWISE_REL_TOL:.0e}, mc band {MC_SIGMA_BAND} sigma, {mc_samples} samples):");
    let reports: Result<Vec<PointReport>> = run_in_pool(jobs, || {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            points
                .par_iter()
                .enumerate()
                .map(|(i, &(v, u, w))| validate_point(v, u, w, mc_samples, seed + i as u64, perturb))
                .collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            points
                .iter()
                .enumerate()
                .map(|(i, &(v, u, w))| validate_point(v, u, w, mc_samples, seed + i as u64, perturb))
                .collect()
        }
    })?;
    let reports = reports?;

    let mut all_ok = true;
    for report in &reports {
        for line in &report.lines {
            println!("{line}");
        }
        if !report.pass {
            all_ok = false;
            eprintln!(
                "validation failure at v={} T/l={} OmegaT={}: pairwise {:.3e}, mc-z {:.2}",
                report.v, report.u, report.w, report.max_pairwise_rel, report.max_mc_sigma
            );
        }
    }

    println!("exact-zero suite:");
    let (zeros_ok, lines) = exact_zero_suite()?;
    for line in &lines {
        println!("{line}");
    }
    if !zeros_ok {
        eprintln!("validation failure in the exact-zero suite");
    }
    all_ok &= zeros_ok;

    println!("validate: {}", if all_ok { "PASS" } else { "FAIL" });
    Ok(if all_ok { EXIT_OK } else { EXIT_VALIDATION })
}
