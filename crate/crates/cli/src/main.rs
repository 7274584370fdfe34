use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

use commands::{CliError, Outcome};

#[derive(Parser)]
#[command(
    name = "relbgg",
    version,
    about = "Bigradings, torsion conditions and relative BGG sequences for nested parabolics"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct PairArgs {
    /// Cartan type, e.g. A4.
    #[arg(value_name = "TYPE")]
    pub cartan_type: String,
    /// Crossed nodes of q, comma separated.
    #[arg(long = "sq", value_name = "NODES")]
    pub sigma_q: String,
    /// Crossed nodes of p, comma separated.
    #[arg(long = "sp", value_name = "NODES", default_value = "")]
    pub sigma_p: String,
}

#[derive(Subcommand)]
enum Command {
    /// Bidegrees and dimensions of the components of g.
    Bigrade(PairArgs),
    /// The P-invariant filtration and its subquotient modules.
    Filtration(PairArgs),
    /// Ranks of the tangent-bundle subquotients.
    Ranks(PairArgs),
    /// Exhaustive bracket checks of the bigrading; exits 3 on any violation.
    Audit(PairArgs),
    /// Relative BGG sequence of a source label.
    Bgg {
        /// Source label with the crossed nodes of p, e.g. 'A4[x,o,o,o](-2,1,0,0)'.
        label: String,
        #[arg(long = "sq", value_name = "NODES")]
        sigma_q: String,
        #[arg(long = "sp", value_name = "NODES", default_value = "")]
        sigma_p: String,
    },
    /// Torsion conditions for a catalog geometry or a custom support.
    CheckTorsion {
        /// Built-in geometry: legendrean(n) or path-geometry(n).
        #[arg(long, conflicts_with_all = ["cartan_type", "support"])]
        catalog: Option<String>,
        /// Drop the obstruction to involutivity of F from the Legendrean catalog.
        #[arg(long = "assume-involutive-F", requires = "catalog")]
        assume_involutive_f: bool,
        /// Cartan type for a custom support.
        #[arg(value_name = "TYPE", requires_all = ["sigma_q", "support"])]
        cartan_type: Option<String>,
        #[arg(long = "sq", value_name = "NODES")]
        sigma_q: Option<String>,
        #[arg(long = "sp", value_name = "NODES", default_value = "")]
        sigma_p: String,
        /// JSON file with the torsion support.
        #[arg(long, value_name = "FILE")]
        support: Option<std::path::PathBuf>,
    },
}

fn dispatch(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Bigrade(p) => commands::run_bigrade(&p),
        Command::Filtration(p) => commands::run_filtration(&p),
        Command::Ranks(p) => commands::run_ranks(&p),
        Command::Audit(p) => commands::run_audit(&p),
        Command::Bgg {
            label,
            sigma_q,
            sigma_p,
        } => commands::run_bgg(&label, &sigma_q, &sigma_p),
        Command::CheckTorsion {
            catalog,
            assume_involutive_f,
            cartan_type,
            sigma_q,
            sigma_p,
            support,
        } => match (catalog, cartan_type, sigma_q, support) {
            (Some(name), None, None, None) => commands::torsion_catalog(&name, assume_involutive_f),
            (None, Some(ty), Some(sq), Some(file)) => {
                let text = std::fs::read_to_string(&file)
                    .map_err(|e| CliError::User(format!("cannot read {}: {e}", file.display())))?;
                let pair = PairArgs {
                    cartan_type: ty,
                    sigma_q: sq,
                    sigma_p,
                };
                commands::torsion_custom(&pair, &text, &file.display().to_string())
            }
            _ => Err(CliError::User(
                "give either --catalog NAME or TYPE --sq NODES --support FILE".into(),
            )),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match dispatch(cli) {
        Ok(outcome) => {
            if json {
                println!("{}", outcome.json());
            } else {
                print!("{}", outcome.text);
            }
            if outcome.invariant_failure {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
