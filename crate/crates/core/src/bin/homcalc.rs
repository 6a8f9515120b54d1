use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use homcalc::pipeline::{self, decomposition_json, EXIT_FAULT};
use homcalc::simplicial::{simplicial_cohomology, simplicial_homology};

#[derive(Parser)]
#[command(name = "homcalc", version, about = "Homological algebra over computable rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a pipeline document.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Simplicial (co)homology of the closure of a list of facets.
    Simplicial {
        #[arg(long)]
        facets: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        cohomology: bool,
    },
    /// Run the acceptance checks.
    Selftest,
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Compute { input, output } => {
            let doc = pipeline::parse_pipeline(&read(&input)?).map_err(|e| e.to_string())?;
            let outcome = pipeline::run_pipeline(&doc).map_err(|e| e.to_string())?;
            let text = serde_json::to_string_pretty(&outcome.document).expect("serializable");
            match output {
                Some(path) => std::fs::write(&path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?,
                None => println!("{text}"),
            }
            Ok(outcome.exit_code())
        }
        Command::Simplicial { facets, degree, cohomology } => {
            let doc = pipeline::parse_facets(&read(&facets)?).map_err(|e| e.to_string())?;
            let d = if cohomology { simplicial_cohomology(&doc, degree) } else { simplicial_homology(&doc, degree) }
                .map_err(|e| e.to_string())?;
            let mut out = decomposition_json(&d);
            out["degree"] = degree.into();
            out["kind"] = if cohomology { "cohomology" } else { "homology" }.into();
            println!("{out}");
            Ok(0)
        }
        Command::Selftest => {
            let results = homcalc::selftest::run_all();
            for o in &results {
                println!("criterion {:>2} {}: {} ({})", o.id, if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail);
            }
            Ok(if results.iter().all(|o| o.passed) { 0 } else { EXIT_FAULT })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_FAULT as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAULT as u8)
        }
    }
}
