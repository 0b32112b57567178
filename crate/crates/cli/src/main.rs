use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use trop_core::cycles::{read_json, write_json};
use trop_core::poly::parse_polynomial;
use trop_core::{
    is_balanced, is_tropical_basis, stable_intersection, tropical_evaluate, tropical_hypersurface,
    tropical_prevariety, tropical_variety, Convention, Rational, TropicalCycle, TropicalOutput, VarietyOptions,
    WeightedFan,
};

mod ideal_file;
mod render;

#[derive(Parser)]
#[command(name = "trop", version, about = "Exact tropical geometry over the rationals")]
struct Cli {
    /// Use the max convention instead of min.
    #[arg(long, global = true)]
    max: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the displacement vector of stable intersections.
    #[arg(long, global = true, env = "TROP_SEED", default_value_t = 0)]
    seed: u64,
    /// Print the elapsed wall time on standard error.
    #[arg(long, global = true)]
    time: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Tropical hypersurface of a single polynomial.
    Hypersurface {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
    },
    /// Tropical variety of the ideal in a file.
    Variety {
        file: PathBuf,
        /// The ideal is not known to be prime.
        #[arg(long)]
        not_prime: bool,
    },
    /// Intersection of the hypersurfaces of the generators in a file.
    Prevariety { file: PathBuf },
    /// Whether the generators in a file form a tropical basis.
    IsTropicalBasis { file: PathBuf },
    /// Balancing check of a cycle stored as JSON.
    IsBalanced { file: PathBuf },
    /// Stable intersection of two cycles stored as JSON.
    StableIntersection { a: PathBuf, b: PathBuf },
    /// Tropical polynomial evaluated at a rational point.
    Eval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        point: Vec<String>,
    },
}

enum Failure {
    /// Bad input or usage; exit code 2.
    Input(String),
    /// The mathematics refused; exit code 1.
    Domain(String),
}

impl From<trop_core::Error> for Failure {
    fn from(e: trop_core::Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_ideal(path: &Path) -> Result<trop_core::IdealSpec, Failure> {
    ideal_file::parse_ideal_file(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A stored cycle or fan, which must use the requested convention.
fn read_output(path: &Path, convention: Convention) -> Result<TropicalOutput, Failure> {
    let output = read_json(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if output.convention() != convention {
        return Err(trop_core::Error::ConventionMismatch {
            left: output.convention().to_string(),
            right: convention.to_string(),
        }
        .into());
    }
    Ok(output)
}

fn read_cycle(path: &Path, convention: Convention) -> Result<TropicalCycle, Failure> {
    Ok(read_output(path, convention)?.into_cycle()?)
}

fn show(wf: &WeightedFan, format: Format, multiplicities: bool, balanced: bool) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => write_json(wf)? + "\n",
        Format::Text => {
            let verdict = if balanced && wf.is_pure() { Some(wf.is_balanced()?) } else { None };
            render::weighted_fan(wf, multiplicities, verdict)
        }
    })
}

fn show_output(output: &TropicalOutput, format: Format) -> Result<String, Failure> {
    show(output.weighted_fan(), format, true, true)
}

fn show_bool(b: bool) -> String {
    format!("{b}\n")
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let convention = if cli.max { Convention::Max } else { Convention::Min };
    match &cli.command {
        Command::Hypersurface { poly, vars } => {
            let f = parse_polynomial(poly, vars)?;
            let cycle = tropical_hypersurface(&f, convention)?;
            show(&cycle, cli.format, true, true)
        }
        Command::Variety { file, not_prime } => {
            let ideal = read_ideal(file)?;
            let options = VarietyOptions { prime: !not_prime, convention, ..VarietyOptions::default() };
            show_output(&tropical_variety(&ideal, &options)?, cli.format)
        }
        Command::Prevariety { file } => {
            let ideal = read_ideal(file)?;
            let fan = tropical_prevariety(ideal.generators(), convention)?;
            let ones = vec![1; fan.maximal_cones().len()];
            show(&WeightedFan::new(fan, &ones, convention)?, cli.format, false, false)
        }
        Command::IsTropicalBasis { file } => {
            let ideal = read_ideal(file)?;
            Ok(show_bool(is_tropical_basis(ideal.generators(), convention)?))
        }
        Command::IsBalanced { file } => Ok(show_bool(is_balanced(&read_cycle(file, convention)?))),
        Command::StableIntersection { a, b } => {
            let a = read_cycle(a, convention)?;
            let b = read_cycle(b, convention)?;
            let s = stable_intersection(&a, &b, cli.seed)?;
            show(&s, cli.format, true, true)
        }
        Command::Eval { poly, vars, point } => {
            let f = parse_polynomial(poly, vars)?;
            let w = point
                .iter()
                .map(|s| s.trim().parse::<Rational>().map_err(|_| Failure::Input(format!("bad rational `{s}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            let value = tropical_evaluate(&f, &w, convention)?;
            Ok(match cli.format {
                Format::Text => format!("{value}\n"),
                Format::Json => format!("\"{value}\"\n"),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    if cli.time {
        eprintln!("-- used {:.6} seconds", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(text) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
