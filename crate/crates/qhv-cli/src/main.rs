//! Command-line front end: compute, estimate, generate, benchmark, and
//! scaling-fit over front files.

mod bench;
mod scaling;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qhv::{
    canonicalize, create, gen_front, read_fronts_path, write_front, write_front_path, AlgoParams,
    Family, Front, GenSpec, HvAlgorithm, Orientation, RawFront,
};

use bench::TimingRecord;

#[derive(Parser)]
#[command(name = "qhv", about = "Hypervolume computation and benchmarking", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute per-front hypervolumes from a front file
    Compute(ComputeArgs),
    /// Estimate per-front hypervolumes with the randomized algorithm
    Estimate(EstimateArgs),
    /// Generate a benchmark front
    Gen(GenArgs),
    /// Time algorithms on fronts and write a CSV of measurements
    Bench(BenchArgs),
    /// Fit a scaling exponent to a bench CSV
    Scaling(ScalingArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Maximize,
    Minimize,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::Maximize => Orientation::Maximize,
            OrientationArg::Minimize => Orientation::Minimize,
        }
    }
}

#[derive(Args)]
struct IngestArgs {
    /// Reference point, comma-separated (defaults to the origin; required
    /// for minimize)
    #[arg(long = "ref", value_delimiter = ',', allow_hyphen_values = true)]
    reference: Option<Vec<f64>>,
    /// Whether objectives grow away from or shrink toward the reference
    #[arg(long, value_enum, default_value_t = OrientationArg::Maximize)]
    orientation: OrientationArg,
}

impl IngestArgs {
    fn ingest(&self, raw: &RawFront) -> anyhow::Result<Front> {
        let d = raw.first().map_or(0, Vec::len);
        let reference = match (&self.reference, self.orientation) {
            (Some(r), _) => r.clone(),
            (None, OrientationArg::Maximize) => vec![0.0; d],
            (None, OrientationArg::Minimize) => {
                bail!("--orientation minimize requires --ref")
            }
        };
        let (front, _) = canonicalize(raw, &reference, self.orientation.into(), None)?;
        Ok(front)
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// Front file
    input: PathBuf,
    /// Algorithm: qhv, ie, sweep2d, or mc
    #[arg(long, default_value = "qhv")]
    algo: String,
    #[command(flatten)]
    ingest: IngestArgs,
    /// Subproblem size handed to inclusion-exclusion (qhv)
    #[arg(long, default_value_t = 10)]
    base_threshold: usize,
    /// Relative-error target (mc)
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    /// Probability of missing the error interval (mc)
    #[arg(long, default_value_t = 0.25)]
    delta: f64,
    /// Sample-stream seed (mc)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on drawn samples (mc)
    #[arg(long)]
    max_samples: Option<u64>,
}

#[derive(Args)]
struct EstimateArgs {
    /// Front file
    input: PathBuf,
    #[command(flatten)]
    ingest: IngestArgs,
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long, default_value_t = 0.25)]
    delta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_samples: Option<u64>,
}

#[derive(Args)]
struct GenArgs {
    /// Front family: spherical, random, degenerate, or discontinuous
    #[arg(long)]
    family: Family,
    /// Number of objectives
    #[arg(long, short = 'd')]
    dim: usize,
    /// Number of points
    #[arg(long, short = 'n')]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Front files to benchmark (may repeat); alternative to --family
    #[arg(long = "input")]
    inputs: Vec<PathBuf>,
    /// Family to generate fronts from
    #[arg(long)]
    family: Option<Family>,
    /// Dimension for generated fronts
    #[arg(long, short = 'd')]
    dim: Option<usize>,
    /// Point counts for generated fronts, comma-separated
    #[arg(long, short = 'n', value_delimiter = ',')]
    n: Vec<usize>,
    /// Seed for generation and for the mc sample stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Algorithms to time, comma-separated
    #[arg(long, value_delimiter = ',', default_value = "qhv")]
    algo: Vec<String>,
    /// Timed repetitions per front and algorithm
    #[arg(long, default_value_t = 10)]
    reps: usize,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    ingest: IngestArgs,
    #[arg(long, default_value_t = 10)]
    base_threshold: usize,
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long, default_value_t = 0.25)]
    delta: f64,
}

#[derive(Args)]
struct ScalingArgs {
    /// Bench CSV produced by the bench subcommand
    csv: PathBuf,
    #[arg(long)]
    family: String,
    #[arg(long, short = 'd')]
    dim: usize,
    #[arg(long)]
    algo: String,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> anyhow::Result<ExitCode> {
    match Cli::parse().command {
        Command::Compute(args) => cmd_compute(args),
        Command::Estimate(args) => cmd_estimate(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Scaling(args) => cmd_scaling(args),
    }
}

fn cmd_compute(args: ComputeArgs) -> anyhow::Result<ExitCode> {
    let fronts = read_fronts_path(&args.input)?;
    let params = AlgoParams {
        base_threshold: args.base_threshold,
        epsilon: args.epsilon,
        delta: args.delta,
        seed: args.seed,
        max_samples: args.max_samples,
        ..Default::default()
    };
    let algo = create(&args.algo, &params)?;

    let mut failed = false;
    for (index, raw) in fronts.iter().enumerate() {
        let n = raw.len();
        let d = raw.first().map_or(0, Vec::len);
        match args.ingest.ingest(raw).and_then(|front| {
            let start = Instant::now();
            let outcome = algo.compute(&front)?;
            Ok((outcome, start.elapsed().as_secs_f64()))
        }) {
            Ok((outcome, seconds)) => {
                println!("{index} {n} {d} {} {seconds:.6e}", outcome.value);
            }
            Err(err) => {
                eprintln!("front {index}: {err:#}");
                failed = true;
            }
        }
    }
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_estimate(args: EstimateArgs) -> anyhow::Result<ExitCode> {
    let fronts = read_fronts_path(&args.input)?;
    let params = AlgoParams {
        epsilon: args.epsilon,
        delta: args.delta,
        seed: args.seed,
        max_samples: args.max_samples,
        ..Default::default()
    };
    let algo = create("mc", &params)?;

    let mut failed = false;
    for (index, raw) in fronts.iter().enumerate() {
        let n = raw.len();
        let d = raw.first().map_or(0, Vec::len);
        match args.ingest.ingest(raw).and_then(|front| {
            let start = Instant::now();
            let outcome = algo.compute(&front)?;
            Ok((outcome, start.elapsed().as_secs_f64()))
        }) {
            Ok((outcome, seconds)) => {
                let samples = outcome.samples.unwrap_or(0);
                println!(
                    "{index} {n} {d} {} {samples} {seconds:.6e}",
                    outcome.value
                );
            }
            Err(err) => {
                eprintln!("front {index}: {err:#}");
                failed = true;
            }
        }
    }
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_gen(args: GenArgs) -> anyhow::Result<ExitCode> {
    let spec = GenSpec {
        family: args.family,
        d: args.dim,
        n: args.n,
        seed: args.seed,
    };
    let front = gen_front(&spec)?;
    match &args.out {
        Some(path) => write_front_path(&front, path)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_front(&front, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

struct BenchSubject {
    dataset: String,
    family: String,
    front: Option<Front>,
    error: Option<String>,
    d: usize,
    n: usize,
}

fn cmd_bench(args: BenchArgs) -> anyhow::Result<ExitCode> {
    if args.reps == 0 {
        bail!("--reps must be positive");
    }
    let mut subjects = Vec::new();

    if let Some(family) = args.family {
        let dim = args.dim.context("--family requires --dim")?;
        if args.n.is_empty() {
            bail!("--family requires --n");
        }
        for &n in &args.n {
            let spec = GenSpec {
                family,
                d: dim,
                n,
                seed: args.seed,
            };
            let dataset = format!("{}-d{dim}-n{n}-s{}", family.name(), args.seed);
            match gen_front(&spec) {
                Ok(front) => subjects.push(BenchSubject {
                    dataset,
                    family: family.name().to_string(),
                    d: front.frame().dim(),
                    n: front.len(),
                    front: Some(front),
                    error: None,
                }),
                Err(err) => subjects.push(BenchSubject {
                    dataset,
                    family: family.name().to_string(),
                    d: dim,
                    n,
                    front: None,
                    error: Some(err.to_string()),
                }),
            }
        }
    }

    for path in &args.inputs {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let fronts = read_fronts_path(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        for (index, raw) in fronts.iter().enumerate() {
            let dataset = format!("{stem}#{index}");
            let n = raw.len();
            let d = raw.first().map_or(0, Vec::len);
            match args.ingest.ingest(raw) {
                Ok(front) => subjects.push(BenchSubject {
                    dataset,
                    family: "file".into(),
                    d,
                    n,
                    front: Some(front),
                    error: None,
                }),
                Err(err) => subjects.push(BenchSubject {
                    dataset,
                    family: "file".into(),
                    d,
                    n,
                    front: None,
                    error: Some(format!("{err:#}")),
                }),
            }
        }
    }

    if subjects.is_empty() {
        bail!("nothing to benchmark: pass --family/--dim/--n or --input");
    }

    let params = AlgoParams {
        base_threshold: args.base_threshold,
        epsilon: args.epsilon,
        delta: args.delta,
        seed: args.seed,
        ..Default::default()
    };
    let algos: Vec<Box<dyn HvAlgorithm>> = args
        .algo
        .iter()
        .map(|name| create(name, &params))
        .collect::<qhv::Result<_>>()?;

    // One measurement at a time; generation already happened above.
    let mut records = Vec::new();
    for subject in &subjects {
        for algo in &algos {
            for run in 1..=args.reps {
                let mut record = TimingRecord {
                    dataset: subject.dataset.clone(),
                    family: subject.family.clone(),
                    d: subject.d,
                    n: subject.n,
                    algo: algo.name().to_string(),
                    run,
                    seconds: None,
                    value: None,
                    error: subject.error.clone(),
                    stats: None,
                };
                if let Some(front) = &subject.front {
                    let start = Instant::now();
                    match algo.compute(front) {
                        Ok(outcome) => {
                            record.seconds = Some(start.elapsed().as_secs_f64());
                            record.value = Some(outcome.value);
                            record.stats = outcome.stats;
                        }
                        Err(err) => record.error = Some(err.to_string()),
                    }
                }
                records.push(record);
            }
        }
    }

    bench::write_records(&args.out, &records)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_scaling(args: ScalingArgs) -> anyhow::Result<ExitCode> {
    let records = bench::read_records(&args.csv)?;
    let samples: Vec<(usize, f64)> = records
        .iter()
        .filter(|r| r.family == args.family && r.d == args.dim && r.algo == args.algo)
        .filter_map(|r| r.seconds.filter(|&s| s > 0.0).map(|s| (r.n, s)))
        .collect();

    let mut sizes: Vec<usize> = samples.iter().map(|&(n, _)| n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() < 3 {
        bail!(
            "need at least 3 distinct n values for family={} d={} algo={}, found {}",
            args.family,
            args.dim,
            args.algo,
            sizes.len()
        );
    }

    let fit = scaling::fit_power_law(&samples, args.dim);
    println!(
        "slope={:.6} intercept={:.6} r2={:.6} rows={}",
        fit.slope, fit.intercept, fit.r_squared, fit.rows
    );
    Ok(ExitCode::SUCCESS)
}
