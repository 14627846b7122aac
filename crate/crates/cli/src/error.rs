use std::fmt;

/// Failure of a subcommand, carrying its process exit code.
#[derive(Debug)]
pub enum CliError {
    /// An embedded check failed (exit 1).
    Assertion(String),
    /// Bad flags, configuration or input files (exit 2).
    Input(String),
    /// A scale guard tripped (exit 3).
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Assertion(_) => 1,
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Assertion(m) => write!(f, "assertion failed: {m}"),
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Resource(m) => write!(f, "resource guard: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<cliquefactor::Error> for CliError {
    fn from(e: cliquefactor::Error) -> Self {
        use cliquefactor::Error as E;
        match e {
            E::Resource(m) => CliError::Resource(m),
            E::Invariant(m) => CliError::Assertion(format!("internal invariant: {m}")),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
