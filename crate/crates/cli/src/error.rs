use std::fmt;

/// Everything that can stop a command short of a finished report.
///
/// The process exit code is derived from the variant: usage and input
/// problems exit 2, kernel self-check disagreements exit 1 like any other
/// failed check, and budget refusals exit 3 so that "too big to verify"
/// can never be mistaken for a falsified identity.
#[derive(Debug)]
pub enum CliError {
    /// Flag combinations the argument parser cannot express.
    Usage(String),
    /// A file could not be read.
    Io { path: String, source: std::io::Error },
    /// An input file failed to parse; line and column are 1-based.
    Parse { path: String, line: usize, col: usize, message: String },
    /// The kernel refused or failed.
    Kernel(monoideal::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Kernel(e) => kernel_exit_code(e),
        }
    }
}

/// Exit code for an error surfaced directly by the kernel.
pub fn kernel_exit_code(e: &monoideal::Error) -> u8 {
    match e {
        monoideal::Error::OracleBudget { .. } | monoideal::Error::EnumerationBudget { .. } => 3,
        monoideal::Error::SelfCheck(_) => 1,
        _ => 2,
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Parse { path, line, col, message } => {
                write!(f, "{path}:{line}:{col}: {message}")
            }
            CliError::Kernel(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<monoideal::Error> for CliError {
    fn from(e: monoideal::Error) -> Self {
        CliError::Kernel(e)
    }
}
