use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ellzeta_cli::commands::{self, GlobalOptions, Suite, VerifyOptions};
use ellzeta_cli::config::ComplexValue;
use ellzeta_cli::report::Report;
use ellzeta_cli::CliError;

#[derive(Parser, Debug)]
#[command(name = "ellzeta", version, about = "Exact partial zeta values at s = 0 and multiple elliptic Gamma functions")]
struct Cli {
    /// JSON job configuration.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Working precision in decimal digits.
    #[arg(long, global = true, value_name = "DIGITS")]
    prec: Option<u32>,
    #[arg(long, global = true, value_name = "N")]
    trials: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
    /// Worker threads for the library's parallel loops.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Precision cap for exact sign decisions.
    #[arg(long = "max-sign-prec", global = true, value_name = "BITS")]
    max_sign_prec: Option<u32>,
    /// List every case in text output, not only failures.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact partial zeta value at s = 0.
    Zeta0 {
        /// Built-in example: quadratic, cubic1 or cubic2.
        #[arg(long)]
        field: Option<String>,
    },
    /// Evaluate G_r or a geometric family.
    GrEval {
        /// `RE,IM`.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        z: Option<ComplexValue>,
        /// `RE,IM`; repeat for tau_0, ..., tau_r.
        #[arg(long = "tau", value_parser = parse_pair, allow_hyphen_values = true)]
        taus: Vec<ComplexValue>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Rank for the modular suite.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        field: Option<String>,
        /// Modular suite: also run the rank n-1 families.
        #[arg(long)]
        experimental: bool,
    },
    /// The quartic G_2 product and its octic minimal polynomial.
    UnitExample,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Modular,
    Distribution,
    Cocycle,
    Kappa,
    Sampling,
    Oracle,
    Parallelepiped,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Modular => Suite::Modular,
            SuiteArg::Distribution => Suite::Distribution,
            SuiteArg::Cocycle => Suite::Cocycle,
            SuiteArg::Kappa => Suite::Kappa,
            SuiteArg::Sampling => Suite::Sampling,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Parallelepiped => Suite::Parallelepiped,
        }
    }
}

fn parse_pair(s: &str) -> Result<ComplexValue, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected RE,IM, got '{s}'"))?;
    Ok([re.trim().to_string(), im.trim().to_string()])
}

fn run(cli: &Cli) -> Result<(Report, bool), CliError> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Validation(format!("cannot set up {t} threads: {e}")))?;
    }
    let opts = GlobalOptions {
        config: cli.config.clone(),
        prec_digits: cli.prec,
        trials: cli.trials,
        seed: cli.seed,
        max_sign_bits: cli.max_sign_prec,
    };
    Ok(match &cli.command {
        Command::Zeta0 { field } => {
            let r = commands::zeta0(&opts, field.as_deref())?;
            let ok = r.expected.as_ref().is_none_or(|e| e.matches);
            (Report::Zeta0(r), ok)
        }
        Command::GrEval { z, taus } => (Report::GrEval(commands::gr_eval(&opts, z.clone(), taus.clone())?), true),
        Command::Verify { suite, n, field, experimental } => {
            let v = VerifyOptions { n: *n, field: field.clone(), experimental: *experimental };
            let r = commands::verify((*suite).into(), &opts, &v)?;
            let ok = r.all_pass;
            (Report::Verify(r), ok)
        }
        Command::UnitExample => {
            let r = commands::unit_example(&opts)?;
            let ok = r.poly_residual_below_1e_20 && r.palindromic;
            (Report::UnitExample(r), ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((report, ok)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text(cli.verbose));
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                if !cli.json {
                    eprintln!("verification failed");
                }
                ExitCode::from(3)
            }
        }
        Err(e) => {
            if cli.json {
                let body = serde_json::json!({ "error": { "kind": e.kind(), "code": e.code(), "message": e.to_string() } });
                println!("{}", serde_json::to_string_pretty(&body).expect("error serializes"));
            } else {
                eprintln!("error ({}): {e}", e.kind());
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
