use std::fmt;

pub const EXIT_OK: i32 = 0;
/// Verification or tolerance failure.
pub const EXIT_FAILED: i32 = 1;
/// Bad flags, unreadable or malformed input.
pub const EXIT_USAGE: i32 = 2;
/// Non-convergence or no crossing.
pub const EXIT_NUMERICAL: i32 = 3;
/// A search that ran correctly and found nothing.
pub const EXIT_EMPTY: i32 = 4;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Failed(String),
    Numerical(String),
    Empty(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) => EXIT_FAILED,
            CliError::Numerical(_) => EXIT_NUMERICAL,
            CliError::Empty(_) => EXIT_EMPTY,
        }
    }

    pub fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        CliError::Usage(format!("{}: {e}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Failed(m) => write!(f, "failed: {m}"),
            CliError::Numerical(m) => write!(f, "error: {m}"),
            CliError::Empty(m) => write!(f, "no result: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<prodform_core::Error> for CliError {
    fn from(e: prodform_core::Error) -> Self {
        use prodform_core::Error as E;
        match e {
            E::Numerical(_) | E::NoCrossing => CliError::Numerical(e.to_string()),
            E::FitRejected(_) => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
