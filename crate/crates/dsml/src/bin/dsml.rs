//! Command-line front end: generate fixture datasets, run experiments,
//! summarize result tables.
//!
//! Exit codes: 0 on success, 1 for configuration or I/O problems, 2 when an
//! experiment finished but more than 10% of its rows failed.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Parser, Subcommand};

use dsml::datagen::{generate, write_dataset, GenSpec};
use dsml::experiment::{run_experiment_to_files, summarize_files, ExperimentConfig};

#[derive(Parser)]
#[command(name = "dsml", version, about = "Distributed multi-task sparse regression toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic dataset from a TOML spec.
    Generate {
        /// TOML file holding the dataset spec.
        #[arg(long)]
        spec: PathBuf,
        /// Directory the dataset file is written into.
        #[arg(long)]
        output: PathBuf,
    },
    /// Run an experiment described by a TOML config.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Worker threads (overrides the DSML_JOBS environment variable).
        #[arg(long)]
        jobs: Option<usize>,
        /// Overrides the base seed from the config.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Aggregate a results CSV into per-(method, sweep point) statistics.
    Summarize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
}

fn main() {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage problems are configuration errors (exit 1); --help and
            // --version are successes.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Generate { spec, output } => {
            let text = fs::read_to_string(&spec)
                .with_context(|| format!("reading {}", spec.display()))?;
            let gen_spec: GenSpec = toml::from_str(&text)
                .with_context(|| format!("parsing {}", spec.display()))?;
            gen_spec.validate()?;
            let dataset = generate(&gen_spec)?;
            fs::create_dir_all(&output)
                .with_context(|| format!("creating {}", output.display()))?;
            let name = format!(
                "{}-p{}-n{}-m{}-s{}-seed{}.txt",
                gen_spec.family, gen_spec.p, gen_spec.n, gen_spec.m, gen_spec.s, gen_spec.seed
            );
            let path = output.join(name);
            let mut file = std::io::BufWriter::new(
                fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?,
            );
            write_dataset(&mut file, &dataset)?;
            file.flush()?;
            println!("wrote {}", path.display());
            Ok(0)
        }
        Command::Run { config, jobs, seed } => {
            let text = fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let mut experiment = ExperimentConfig::from_toml(&text)?;
            if let Some(seed) = seed {
                experiment.run.seed = seed;
            }
            let jobs = match jobs {
                Some(n) => Some(n),
                None => match std::env::var("DSML_JOBS") {
                    Ok(value) => Some(
                        value
                            .parse::<usize>()
                            .with_context(|| format!("DSML_JOBS='{value}' is not a thread count"))?,
                    ),
                    Err(_) => None,
                },
            };
            if let Some(n) = jobs {
                anyhow::ensure!(n > 0, "worker count must be at least 1");
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .context("initializing the worker pool")?;
            }
            let report = run_experiment_to_files(&experiment)?;
            println!(
                "wrote {} rows ({} failed) to {}",
                report.rows.len(),
                report.failed_rows,
                experiment.run.output.display()
            );
            if report.failure_fraction() > 0.10 {
                eprintln!(
                    "error: {} of {} rows failed (more than 10%)",
                    report.failed_rows,
                    report.rows.len()
                );
                Ok(2)
            } else {
                Ok(0)
            }
        }
        Command::Summarize { input, output } => {
            let rows = summarize_files(&input, &output)
                .with_context(|| format!("summarizing {}", input.display()))?;
            println!("wrote {} summary rows to {}", rows.len(), output.display());
            Ok(0)
        }
    }
}
