use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tropical_complex::complex::DEFAULT_TYPE_ENUMERATION_CAP;
use tropical_complex_cli::{commands, CliError};

/// Types, face posets and pictures of min-plus tropical hyperplane arrangements.
#[derive(Parser)]
#[command(name = "tropcx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the type of a point, e.g. `0,-3/2,7`.
    TypeOfPoint {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Enumerate every cell of the tropical complex as JSON.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also realize each cell by a point.
        #[arg(long)]
        check_geometric: bool,
        /// Largest accepted n·d.
        #[arg(long, default_value_t = DEFAULT_TYPE_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Apply an ordered set partition to a type, e.g. `({3}|{1,2})`.
    Act {
        file: PathBuf,
        #[arg(name = "TYPE")]
        ty: String,
        partition: String,
    },
    /// Draw an arrangement in R^3 as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// XMIN,XMAX,YMIN,YMAX in projected coordinates.
        #[arg(long, allow_hyphen_values = true)]
        viewport: Option<String>,
    },
}

fn emit(text: String, out: Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::TypeOfPoint { file, point } => {
            let arr = commands::load_arrangement(&file)?;
            emit(commands::type_of_point(&arr, &point)?, None)
        }
        Command::Enumerate {
            file,
            out,
            check_geometric,
            cap,
        } => {
            let arr = commands::load_arrangement(&file)?;
            emit(commands::enumerate(&arr, check_geometric, cap)?, out)
        }
        Command::Act {
            file,
            ty,
            partition,
        } => {
            let arr = commands::load_arrangement(&file)?;
            emit(commands::act(&arr, &ty, &partition)?, None)
        }
        Command::Render {
            file,
            out,
            viewport,
        } => {
            let arr = commands::load_arrangement(&file)?;
            emit(commands::render(&arr, viewport.as_deref())?, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tropcx: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
