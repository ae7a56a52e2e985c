//! Thin command-line wrapper; all logic lives in `breitenberger::cli`.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use breitenberger::cli::{run, Command, RunConfig};

#[derive(Parser)]
#[command(
    name = "breitenberger",
    version,
    about = "Circle uncertainty inequalities from the planar motion group: \
             verification suites, group checks, and sharpness searches",
    after_help = "Outputs: each command writes <output>.json and/or <output>.csv. \
                  CSV columns are fixed: verify/report emit \
                  family,param,index,label,lhs,rhs,slack,relative_slack,degenerate; \
                  group-check emits check,max_error,tolerance,pass; \
                  maximize emits iter,objective,grad_norm,step."
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the inequality suite (combined bound, both specializations,
    /// and all six ordered basis pairs) on function families or input files
    Verify(CommonArgs),
    /// Run the group and representation property suites against their
    /// independent oracles
    GroupCheck(CommonArgs),
    /// Maximize the uncertainty ratio over a band and record the trace
    Maximize(CommonArgs),
    /// Merge verify JSON outputs into one plot-ready summary CSV
    Report(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Input JSON file (repeatable): functions for verify, a problem for
    /// maximize, verify outputs for report
    #[arg(long = "input", value_name = "PATH")]
    inputs: Vec<PathBuf>,

    /// Output stem; the command writes <stem>.json / <stem>.csv
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Tolerance override (slack bound for verify, per-check tolerance for
    /// group-check, stopping tolerance for maximize)
    #[arg(long)]
    tol: Option<f64>,

    /// Seed for all random draws
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Function family for verify: dirichlet | von_mises | shifted_packet | random
    #[arg(long)]
    family: Option<String>,

    /// Comma-separated parameters (family sweep values, or band half-width
    /// and floor for maximize)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    params: Vec<f64>,

    /// Print a progress summary to stdout
    #[arg(long)]
    verbose: bool,
}

impl CommonArgs {
    fn into_config(self, command: Command) -> RunConfig {
        RunConfig {
            command,
            inputs: self.inputs,
            output: self.output,
            tol: self.tol,
            seed: self.seed,
            family: self.family,
            params: self.params,
            verbose: self.verbose,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            let _ = err.print();
            std::process::exit(0);
        }
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(1);
        }
    };
    let config = match cli.command {
        Cmd::Verify(args) => args.into_config(Command::Verify),
        Cmd::GroupCheck(args) => args.into_config(Command::GroupCheck),
        Cmd::Maximize(args) => args.into_config(Command::Maximize),
        Cmd::Report(args) => args.into_config(Command::Report),
    };
    std::process::exit(run(&config));
}
