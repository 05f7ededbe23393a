use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use ore_vmpum::gb::BaseOrder;
use vmpum_cli::{parse_problem, run, ExitStatus, Flags, OutputFormat};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Deglex,
    Degrevlex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

/// Kernel representations of the most powerful unfalsified model of
/// polynomial-exponential signals over Ore algebras.
#[derive(Debug, Parser)]
#[command(name = "vmpum", version)]
struct Cli {
    /// Problem file, or `-` for standard input.
    problem: PathBuf,
    /// Base monomial order.
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// In the SW algebra, rank the difference operators above the derivations.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    opvars_first: Option<bool>,
    /// Drop redundant rows.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    minimize: Option<bool>,
    /// Check the rows against the signals [default: true].
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    verify: Option<bool>,
    /// Cross-check with the commutative syzygy route.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    oracle: Option<bool>,
    /// Seed of the falsifiability probe.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
}

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let input_error = ExitCode::from(ExitStatus::InputError.code() as u8);
    let text = match read_input(&cli.problem) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", cli.problem.display());
            return input_error;
        }
    };
    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return input_error;
        }
    };
    let flags = Flags {
        order: cli.order.map(|o| match o {
            OrderArg::Deglex => BaseOrder::DegLex,
            OrderArg::Degrevlex => BaseOrder::DegRevLex,
        }),
        opvars_first: cli.opvars_first,
        minimize: cli.minimize,
        verify: cli.verify,
        oracle: cli.oracle,
        seed: cli.seed,
        output: match cli.output {
            OutputArg::Text => OutputFormat::Text,
            OutputArg::Json => OutputFormat::Json,
        },
    };
    match run(&problem, &flags) {
        Ok(outcome) => {
            print!("{}", outcome.render(flags.output));
            for m in &outcome.messages {
                eprintln!("{m}");
            }
            ExitCode::from(outcome.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            input_error
        }
    }
}
