use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use mbfkit::enumerate::{
    count_all, count_by_minterms, count_profile, lower_bound_classes, lower_bound_r,
    refined_lower_bound_r, write_report, CountOptions, MAX_DESK_VARS,
};
use mbfkit::estimate::{dedekind, inequivalent, korshunov_estimate};
use mbfkit::verify::verify;
use mbfkit::{generate_profiles, Profile};

#[derive(Parser)]
#[command(
    name = "mbfkit",
    version,
    about = "Count monotone Boolean functions by profile"
)]
struct Cli {
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate every feasible profile over n variables
    Profiles {
        n: usize,
        /// Where to write the list, one profile per line
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Count monotone functions, inequivalent and labelled
    Count {
        n: usize,
        /// Count a single profile, e.g. "(0,3,2,0,0)"
        #[arg(long)]
        profile: Option<Profile>,
        /// Also report R_k(n), the classes with exactly k minimal terms
        #[arg(long)]
        k: Option<usize>,
        /// Allow n = 7 (very long; use checkpoints)
        #[arg(long)]
        extended: bool,
        #[arg(long, env = "MBFKIT_CHECKPOINT_DIR")]
        checkpoint_dir: Option<PathBuf>,
        #[arg(long, conflicts_with = "checkpoint_dir")]
        no_checkpoint: bool,
        /// Per-profile CSV
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Stop after this many profiles have been finalized (for testing resume)
        #[arg(long, hide = true)]
        stop_after: Option<usize>,
    },
    /// Check the fast paths against brute-force references
    Verify { n: usize },
    /// Asymptotic estimate of D(n) and lower bounds on R(n)
    Estimate { n: usize },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    match cli.command {
        Command::Profiles { n, output } => profiles(n, output),
        Command::Count {
            n,
            profile,
            k,
            extended,
            checkpoint_dir,
            no_checkpoint,
            output,
            stop_after,
        } => {
            if let Some(p) = profile {
                return single_profile(n, p);
            }
            let checkpoint_dir = if no_checkpoint {
                None
            } else {
                Some(checkpoint_dir.unwrap_or_else(|| PathBuf::from("mbfkit-checkpoints")))
            };
            let options = CountOptions {
                extended,
                checkpoint_dir,
                stop_after,
            };
            count(n, k, &options, output)
        }
        Command::Verify { n } => {
            let report = verify(n)?;
            for check in &report.checks {
                println!("{check}");
            }
            let passed = report.passed();
            println!("verify({n}): {}", if passed { "PASS" } else { "FAIL" });
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Estimate { n } => estimate(n),
    }
}

fn profiles(n: usize, output: Option<PathBuf>) -> Result<ExitCode> {
    let list = generate_profiles(n)?;
    let path = output.unwrap_or_else(|| PathBuf::from(format!("profiles_n{n}.txt")));
    let mut out = BufWriter::new(
        File::create(&path).with_context(|| format!("creating {}", path.display()))?,
    );
    for p in &list {
        writeln!(out, "{p}")?;
    }
    out.flush()?;
    println!("{}", list.len());
    Ok(ExitCode::SUCCESS)
}

fn single_profile(n: usize, p: Profile) -> Result<ExitCode> {
    if p.n() != n {
        bail!("profile {p} has {} entries, expected {n}", p.n());
    }
    if n > MAX_DESK_VARS {
        bail!("single profiles are limited to n <= {MAX_DESK_VARS}");
    }
    let (r, d) = count_profile(n, p)?;
    println!("R{p}={r} D{p}={d}");
    Ok(ExitCode::SUCCESS)
}

fn count(
    n: usize,
    k: Option<usize>,
    options: &CountOptions,
    output: Option<PathBuf>,
) -> Result<ExitCode> {
    let start = Instant::now();
    let report = count_all(n, options)?;
    let path = output.unwrap_or_else(|| PathBuf::from(format!("counts_n{n}.csv")));
    write_report(&report, &path).with_context(|| format!("writing {}", path.display()))?;
    log::info!("counted n={n} in {:.2}s", start.elapsed().as_secs_f64());
    println!("{}", report.summary());
    if let Some(k) = k {
        println!("R_{k}({n})={}", count_by_minterms(&report, k));
    }
    Ok(ExitCode::SUCCESS)
}

fn estimate(n: usize) -> Result<ExitCode> {
    if n >= 2 {
        let e = korshunov_estimate(n)?;
        println!("estimate D({n}) ~ {e}");
        println!("log2 ratio to C({n},{}) = {:.4}", n / 2, e.log2_ratio());
        if let Some(d) = dedekind(n) {
            println!("D({n})={d} ratio={:.4}", e.ratio_to(d));
        }
    }
    if let Some(d) = dedekind(n) {
        println!("lower_bound_R({n})={}", lower_bound_r(n, d));
        if n <= 7 {
            let known = lower_bound_classes(n)?;
            println!(
                "refined_lower_bound_R({n})={}",
                refined_lower_bound_r(n, d, &known)
            );
        }
        if let Some(r) = inequivalent(n) {
            println!("R({n})={r}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
