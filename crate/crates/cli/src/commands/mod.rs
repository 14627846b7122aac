pub mod absorb;
pub mod experiments;
pub mod graphs;
pub mod reduced;
pub mod tile;

use crate::error::{CliError, CliResult};

/// Enumerated flag values, checked against the accepted words.
pub(crate) fn choice(value: &str, key: &str, allowed: &[&str]) -> CliResult<()> {
    if allowed.contains(&value) {
        Ok(())
    } else {
        Err(CliError::Input(format!("--{key} must be one of {}, got '{value}'", allowed.join(", "))))
    }
}
