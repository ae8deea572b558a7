use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thilb::analysis::{self, Overrides};
use thilb::bundled::load;
use thilb::hilbert_tag;
use thilb::verify;
use thilb::CliError;

#[derive(Parser)]
#[command(name = "thilb", version, about = "Hilbert coefficients and closures of parameter ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Length sequences, Hilbert coefficients and identity checks for a ring file.
    Coeffs {
        spec: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Comma-separated closures: none, limit, tight, frobenius, contracted.
        #[arg(long = "closure", value_delimiter = ',')]
        closure: Option<Vec<String>>,
        #[arg(long)]
        e_bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Generators and colength of one closure of Q^n.
    Closure {
        spec: String,
        #[arg(long)]
        which: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        e_bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Runs every bundled ring and compares the results with the golden file.
    VerifyPaper {
        #[arg(long)]
        json: bool,
        /// Compare against this file instead of the built-in golden file.
        #[arg(long)]
        golden: Option<String>,
        /// Print the summary that a golden file should contain and exit.
        #[arg(long)]
        bless: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    analysis::install_budget()?;
    match cli.command {
        Command::Coeffs {
            spec,
            n_max,
            closure,
            e_bound,
            json,
        } => {
            if let Some(list) = &closure {
                for c in list {
                    hilbert_tag(c)?;
                }
            }
            let spec = load(&spec)?;
            let ov = Overrides {
                n_max,
                closures: closure,
                e_bound,
            };
            let report = analysis::analyze(&spec, &ov)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render());
            }
        }
        Command::Closure {
            spec,
            which,
            n,
            e_bound,
            json,
        } => {
            let tag = hilbert_tag(&which)?;
            let spec = load(&spec)?;
            let report = analysis::closure(&spec, tag, n, e_bound)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.render());
            }
        }
        Command::VerifyPaper { json, golden, bless } => {
            let reports = verify::reports()?;
            let text = verify::summary_text(&reports);
            if bless {
                print!("{text}");
                return Ok(());
            }
            let golden = match golden {
                Some(path) => std::fs::read_to_string(&path).map_err(|e| CliError::Io(format!("{path}: {e}")))?,
                None => verify::GOLDEN.to_string(),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
            } else {
                for r in &reports {
                    let pass = r.checks.iter().filter(|c| c.verdict == "PASS").count();
                    let fail = r.checks.iter().filter(|c| c.verdict == "FAIL").count();
                    let skip = r.checks.len() - pass - fail;
                    println!("{:<18} {pass:>2} pass  {fail:>2} fail  {skip:>2} skipped", r.spec.name);
                }
            }
            let diff = verify::diff(&golden, &text);
            if !diff.is_empty() {
                return Err(CliError::Golden(diff));
            }
            if !json {
                println!("all results match the golden file");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Golden(lines) = &e {
                for l in lines {
                    eprintln!("{l}");
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
