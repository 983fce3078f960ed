mod commands;
mod input;

use clap::{Parser, Subcommand, ValueEnum};
use fibergerm_core::Error;
use input::GluingArgs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "fibergerm", version, about = "Glue analytic germs and check their Betti numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

/// Options shared by every command.
#[derive(clap::Args, Debug, Clone)]
pub struct RunConfig {
    /// Truncation order of Betti tables and series.
    #[arg(long, global = true, default_value_t = 6)]
    pub trunc: usize,
    /// Largest index checked in the convolution identity.
    #[arg(long, global = true, default_value_t = 4)]
    pub jmax: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Reduction steps allowed per standard-basis or normal-form call.
    #[arg(long = "step-cap", global = true)]
    pub step_cap: Option<u64>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn validate(&self) -> Result<(), CliError> {
        if self.trunc < 3 {
            return Err(CliError::Usage("--trunc must be at least 3".into()));
        }
        if self.jmax > self.trunc {
            return Err(CliError::Usage("--jmax must not exceed --trunc".into()));
        }
        Ok(())
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Embedding dimension, dimension, depth, type and structure flags.
    Invariants(Targets),
    /// Betti numbers of residue fields or subspaces.
    Betti(Targets),
    /// Poincaré series of residue fields or subspaces.
    Poincare(Targets),
    /// Build the glued germ and write its presentation.
    Glue(GluingArgs),
    /// Test the gluing for the weakly large, large and strongly large classes.
    Classify(GluingArgs),
    /// Evaluate every structure criterion on the gluing.
    Criteria(GluingArgs),
    /// Check every formula and criterion against direct computation.
    Verify(VerifyArgs),
}

#[derive(clap::Args, Debug)]
pub struct Targets {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// Germs to report on; all germs when neither this nor --subspace is given.
    #[arg(long)]
    pub germ: Vec<String>,
    #[arg(long)]
    pub subspace: Vec<String>,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub gluing: GluingArgs,
    /// Run the built-in instances instead of a gluing from files.
    #[arg(long, conflicts_with_all = ["files", "alpha", "self_glue"])]
    pub corpus: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Resource(String),
    /// Some check failed; the report has been written.
    Failed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::StepCap { .. } => CliError::Resource(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = cli
        .config
        .validate()
        .and_then(|()| commands::run(cli.command, &cli.config));
    if let Err(CliError::Usage(m) | CliError::Resource(m)) = &result {
        eprintln!("error: {m}");
    }
    ExitCode::from(exit_code(&result))
}

/// 0 success, 1 a check failed, 2 usage or input error, 3 resource limit.
fn exit_code(result: &Result<(), CliError>) -> u8 {
    match result {
        Ok(()) => 0,
        Err(CliError::Failed) => 1,
        Err(CliError::Usage(_)) => 2,
        Err(CliError::Resource(_)) => 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(exit_code(&Ok(())), 0);
        assert_eq!(exit_code(&Err(CliError::Failed)), 1);
        let cap = Error::StepCap { cap: 1, context: "test" };
        assert_eq!(exit_code(&Err(cap.into())), 3);
        assert_eq!(exit_code(&Err(Error::UnknownName("X".into()).into())), 2);
    }
}
