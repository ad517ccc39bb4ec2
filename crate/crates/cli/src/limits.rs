use std::env;

use ccc_forge_core::DESK_MAX_Q;

use crate::error::CliError;

/// Overrides the default limit on `q`.
pub const MAX_Q_ENV: &str = "CCC_FORGE_MAX_Q";

pub fn max_q() -> Result<u64, CliError> {
    match env::var(MAX_Q_ENV) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("{MAX_Q_ENV} must be a positive integer, got {text:?}"))),
        Err(env::VarError::NotPresent) => Ok(DESK_MAX_Q),
        Err(env::VarError::NotUnicode(_)) => Err(CliError::usage(format!("{MAX_Q_ENV} is not valid UTF-8"))),
    }
}
