use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use hyperlag::hypergraph::UniformHypergraph;
use hyperlag::lagrangian::{maximize, SolverConfig, DEFAULT_GRID_BUDGET};
use hyperlag::poset::enumerate_candidates;
use hyperlag::verifier::{motzkin_straus_check, verify, CertifyOptions, VerifyOptions, DEFAULT_MARGIN_TOLERANCE};

/// Hypergraph Lagrangians of left-compressed 3-graphs.
#[derive(Parser, Debug)]
#[command(name = "hyperlag", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check λ(G) < λ([l-1]^(3)) for every candidate on [l].
    Verify(VerifyArgs),
    /// Write every candidate on [l] as one graph document per line.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(6..=64))]
        l: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximize the Lagrangian of a graph read from a JSON document.
    Lagrangian {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Built-in consistency checks against closed-form answers.
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Subcommand, Debug)]
enum Oracle {
    /// λ(G) = (1 - 1/ω(G)) / 2 on random graphs.
    MotzkinStraus {
        /// Largest vertex count sampled.
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(2..=64))]
        n: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Args, Debug)]
struct SolverArgs {
    #[arg(long, default_value_t = SolverConfig::default().restarts as u64, value_parser = clap::value_parser!(u64).range(1..))]
    restarts: u64,
    #[arg(long, default_value_t = SolverConfig::default().random_seed)]
    seed: u64,
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig { restarts: self.restarts as usize, random_seed: self.seed, ..SolverConfig::default() }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(6..=64))]
    l: u64,
    #[command(flatten)]
    solver: SolverArgs,
    /// A candidate passes when λ + margin < threshold.
    #[arg(long, default_value_t = DEFAULT_MARGIN_TOLERANCE)]
    margin: f64,
    /// Also bound each λ from above by an exact grid scan.
    #[arg(long)]
    certify: bool,
    /// Largest grid (in points) scanned per candidate with --certify.
    #[arg(long, default_value_t = DEFAULT_GRID_BUDGET)]
    budget: u128,
    /// JSONL report: one record per candidate, then the summary.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run_verify(args: &VerifyArgs) -> Result<bool> {
    if !(args.margin >= 0.0 && args.margin.is_finite()) {
        anyhow::bail!("--margin must be a nonnegative number");
    }
    let opts = VerifyOptions {
        solver: args.solver.config(),
        margin_tolerance: args.margin,
        certify: args.certify.then(|| CertifyOptions { budget: args.budget, ..CertifyOptions::default() }),
    };
    let result = verify(args.l as usize, &opts)?;
    if let Some(path) = &args.out {
        let mut out = output(Some(path))?;
        result.write_jsonl(&mut out)?;
        out.flush()?;
    }
    let s = &result.summary;
    println!(
        "l={} candidates={} max_lambda={} threshold={}/{} min_margin={:e} certified={} all_pass={}",
        s.l,
        s.candidate_count,
        s.max_lambda,
        s.threshold.numerator,
        s.threshold.denominator,
        s.min_margin,
        s.certified_count,
        s.all_pass
    );
    for r in &result.reports {
        if let Some(cert) = &r.certificate {
            println!(
                "certificate: denominator={} upper_bound={} below_threshold={}",
                cert.denominator, cert.upper_bound.decimal, cert.below_threshold
            );
        }
        if let Some(d) = &r.diagnostic {
            eprintln!("note: {d}");
        }
    }
    eprintln!("runtime_seconds={:.3}", s.runtime_seconds);
    Ok(s.all_pass)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify(args) => run_verify(&args),
        Command::Enumerate { l, out } => {
            let mut out = output(out.as_ref())?;
            for g in enumerate_candidates(l as usize)? {
                writeln!(out, "{}", g.to_json())?;
            }
            out.flush()?;
            Ok(true)
        }
        Command::Lagrangian { input, solver } => {
            let g = UniformHypergraph::read_file(&input).with_context(|| format!("reading {}", input.display()))?;
            let r = maximize(&g, &solver.config())?;
            let record = serde_json::json!({
                "value": r.value,
                "support": r.weighting.support(),
                "support_size": r.support_size,
                "kkt_residual": r.kkt_residual,
                "weighting": r.weighting,
            });
            println!("{record}");
            Ok(true)
        }
        Command::Oracle(Oracle::MotzkinStraus { n, trials, solver }) => {
            let check = motzkin_straus_check(n as usize, trials, &solver.config())?;
            println!("{}", serde_json::to_string(&check)?);
            Ok(check.all_within)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
