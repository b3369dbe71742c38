use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tourneylab_cli::report::to_pretty_json;
use tourneylab_cli::{
    cmd_analyze, cmd_check, cmd_estimate, cmd_exact, cmd_gen, cmd_verify, with_threads,
    AnalyzeOptions, CliError, CliResult, ExperimentConfig, Source,
};
use tourneylab_core::{format_certificate, write_trn1};

#[derive(Parser)]
#[command(name = "tourneylab", version, about = "Hamilton cycles in random subtournaments")]
struct Cli {
    /// Worker threads for parallel kernels (results do not depend on it).
    #[arg(long, global = true, env = "TOURNEYLAB_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated tournament in TRN1 format.
    Gen(GenArgs),
    /// Monte Carlo sweep over sampling probabilities.
    Estimate(EstimateArgs),
    /// Exact probability by enumerating all subsets (n <= 20).
    Exact {
        tournament: PathBuf,
        #[arg(long = "p", required = true, num_args = 1..)]
        p: Vec<f64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Search for an almost-directed cut and report the partition structure.
    Analyze {
        tournament: PathBuf,
        #[arg(long, default_value_t = AnalyzeOptions::default().eps)]
        eps: f64,
        /// Connector threshold [default: derived from p, t and sigma]
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = AnalyzeOptions::default().t)]
        t: usize,
        #[arg(long, default_value_t = AnalyzeOptions::default().p)]
        p: f64,
        #[arg(long, default_value_t = AnalyzeOptions::default().sigma)]
        sigma: f64,
        #[arg(long, default_value_t = AnalyzeOptions::default().effort)]
        effort: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a Hamilton cycle certificate against a tournament.
    Verify {
        tournament: PathBuf,
        certificate: PathBuf,
    },
    /// Summarize a tournament: semidegree, components, Hamiltonicity.
    Check {
        tournament: PathBuf,
        /// Write a Hamilton cycle certificate here when one exists.
        #[arg(long)]
        cycle_out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Rotational,
    NearRegular,
    Transitive,
    Random,
    Theorem1Even,
    Theorem1Odd,
    Main,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file [default: stdout]
    #[arg(short, long)]
    out: Option<PathBuf>,
}

impl GenArgs {
    fn source(&self) -> CliResult<Source> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| CliError::Usage(format!("this family needs --{name}")))
        };
        Ok(match self.family {
            Family::Rotational => Source::Rotational { k: need(self.k, "k")? },
            Family::NearRegular => Source::NearRegular { m: need(self.m, "m")? },
            Family::Transitive => Source::Transitive { n: need(self.n, "n")? },
            Family::Random => Source::Random {
                n: need(self.n, "n")?,
                seed: self.seed.ok_or_else(|| CliError::Usage("random needs --seed".into()))?,
            },
            Family::Theorem1Even => Source::Theorem1Even { k: need(self.k, "k")? },
            Family::Theorem1Odd => Source::Theorem1Odd { k: need(self.k, "k")? },
            Family::Main => Source::Main {
                n: need(self.n, "n")?,
                t: need(self.t, "t")?,
                seed: self.seed,
            },
        })
    }
}

#[derive(Args)]
struct EstimateArgs {
    /// JSON experiment config; flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Tournament file, replacing the configured source.
    #[arg(long)]
    tournament: Option<PathBuf>,
    #[arg(long = "p", num_args = 1..)]
    p: Vec<f64>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// JSON report path [default: stdout]
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

impl EstimateArgs {
    fn config(&self) -> CliResult<ExperimentConfig> {
        let mut config = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                serde_json::from_str(&text).map_err(|e| CliError::Config(e.to_string()))?
            }
            None => ExperimentConfig {
                tournament: match &self.tournament {
                    Some(path) => Source::File { path: path.clone() },
                    None => return Err(CliError::Usage("need --config or --tournament".into())),
                },
                p_values: Vec::new(),
                t: None,
                trials: 100_000,
                master_seed: 0,
                output_path: None,
                csv_path: None,
            },
        };
        if let Some(path) = &self.tournament {
            config.tournament = Source::File { path: path.clone() };
        }
        if !self.p.is_empty() {
            config.p_values = self.p.clone();
        }
        if self.t.is_some() {
            config.t = self.t;
        }
        if let Some(trials) = self.trials {
            config.trials = trials;
        }
        if let Some(seed) = self.seed {
            config.master_seed = seed;
        }
        if self.out.is_some() {
            config.output_path = self.out.clone();
        }
        if self.csv.is_some() {
            config.csv_path = self.csv.clone();
        }
        config.validate()?;
        Ok(config)
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let threads = cli.threads;
    match cli.command {
        Command::Gen(args) => {
            let t = cmd_gen(&args.source()?)?;
            emit(args.out.as_deref(), &write_trn1(&t))
        }
        Command::Estimate(args) => {
            let config = args.config()?;
            let started = Instant::now();
            let report = with_threads(threads, || cmd_estimate(&config))?;
            eprintln!("estimate: {} rows in {:.2?}", report.rows.len(), started.elapsed());
            if let Some(path) = &config.csv_path {
                let file = fs::File::create(path).map_err(|e| CliError::io(path, e))?;
                report
                    .write_csv(file)
                    .map_err(|e| CliError::io(path, std::io::Error::other(e)))?;
            }
            emit(config.output_path.as_deref(), &report.to_json())
        }
        Command::Exact { tournament, p, out } => {
            let report = with_threads(threads, || cmd_exact(&tournament, &p))?;
            emit(out.as_deref(), &to_pretty_json(&report))
        }
        Command::Analyze {
            tournament,
            eps,
            k,
            t,
            p,
            sigma,
            effort,
            out,
        } => {
            let opts = AnalyzeOptions {
                eps,
                k,
                t,
                p,
                sigma,
                effort,
            };
            let report = cmd_analyze(&tournament, &opts)?;
            emit(out.as_deref(), &to_pretty_json(&report))
        }
        Command::Verify {
            tournament,
            certificate,
        } => {
            cmd_verify(&tournament, &certificate)?;
            println!("ok");
            Ok(())
        }
        Command::Check {
            tournament,
            cycle_out,
        } => {
            let report = cmd_check(&tournament, cycle_out.is_some())?;
            if let (Some(path), Some(cycle)) = (&cycle_out, &report.cycle) {
                let text = format!("{}\n", format_certificate(cycle));
                fs::write(path, text).map_err(|e| CliError::io(path, e))?;
            }
            emit(None, &to_pretty_json(&report))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
