//! Library side of the `tourneylab` command: experiment configuration,
//! subcommand implementations and report types.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use commands::{
    cmd_analyze, cmd_check, cmd_estimate, cmd_exact, cmd_gen, cmd_verify, with_threads,
    AnalyzeOptions,
};
pub use config::{ExperimentConfig, Source};
pub use error::{CliError, CliResult};
pub use report::{AnalyzeReport, Branch, CheckReport, ExactReport, SweepReport};
