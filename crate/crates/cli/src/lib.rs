//! File formats, subcommands and SVG rendering for the `tropcx` tool.

pub mod commands;
pub mod format;
pub mod render;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    CapExceeded(tropical_complex::Error),

    #[error("not a type: {0}")]
    NotAType(String),

    #[error("rendering needs n = 3, found n = {0}")]
    UnsupportedRender(usize),

    #[error("combinatorial and geometric tests disagree on {0}")]
    Disagreement(String),

    #[error("{0}")]
    Core(tropical_complex::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::CapExceeded(_) => 3,
            CliError::NotAType(_) => 4,
            CliError::UnsupportedRender(_) => 5,
            CliError::Disagreement(_) | CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<tropical_complex::Error> for CliError {
    fn from(e: tropical_complex::Error) -> Self {
        use tropical_complex::Error as E;
        match e {
            E::CapExceeded { .. } => CliError::CapExceeded(e),
            E::NotAType => CliError::NotAType(e.to_string()),
            E::DimensionMismatch { .. }
            | E::ShapeMismatch { .. }
            | E::UnsupportedDimension(_)
            | E::InvalidPartition(_)
            | E::InvalidScalar => CliError::Parse(e.to_string()),
            _ => CliError::Core(e),
        }
    }
}
