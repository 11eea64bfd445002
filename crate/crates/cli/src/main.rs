use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tameweights::adequacy::DEFAULT_CAP;
use tameweights::verify::VerifyConfig;
use tameweights_cli::{
    cmd_adequacy, cmd_detset, cmd_equiv, cmd_verify_paper, cmd_weights, cmd_witness, CliError,
    DetSpec, EquivSpec, Format, GroupSpec, Outcome, RepSpec, Which,
};

#[derive(Parser)]
#[command(name = "tameweights", version, about = "Explicit Serre weights and adequacy of finite matrix groups")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weight set of a local representation, or membership of its query weight.
    Weights {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::Explicit)]
        which: Which,
    },
    /// Weights whose determinant character is the given one.
    Detset {
        #[arg(long)]
        input: PathBuf,
    },
    /// A witness (J, delta) for the query weight, or "none".
    Witness {
        #[arg(long)]
        input: PathBuf,
    },
    /// Whether two weights are equivalent.
    Equiv {
        #[arg(long)]
        input: PathBuf,
    },
    /// The four adequacy conditions for a matrix group.
    Adequacy {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run the regression checks.
    VerifyPaper {
        /// Override the F_9 modulus (constant term first), e.g. "1,0,1".
        #[arg(long, value_delimiter = ',')]
        f9_modulus: Option<Vec<u64>>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Weights { input, which } => cmd_weights(&RepSpec::parse(&read(input)?)?, *which, fmt),
        Command::Detset { input } => {
            let spec: DetSpec = toml::from_str(&read(input)?).map_err(|e| CliError::Parse(e.to_string()))?;
            cmd_detset(&spec, fmt)
        }
        Command::Witness { input } => cmd_witness(&RepSpec::parse(&read(input)?)?, fmt),
        Command::Equiv { input } => {
            let spec: EquivSpec = toml::from_str(&read(input)?).map_err(|e| CliError::Parse(e.to_string()))?;
            cmd_equiv(&spec, fmt)
        }
        Command::Adequacy { input } => cmd_adequacy(&GroupSpec::parse(&read(input)?)?, cli.cap, fmt),
        Command::VerifyPaper { f9_modulus } => {
            let mut cfg = VerifyConfig { cap: cli.cap, ..VerifyConfig::default() };
            if let Some(m) = f9_modulus {
                cfg.f9_modulus = m.clone();
            }
            Ok(cmd_verify_paper(&cfg, fmt))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share the parse-error exit code
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match dispatch(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
