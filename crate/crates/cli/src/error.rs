//! Failures and their process exit codes.

use std::process::ExitCode;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VERIFICATION: u8 = 2;
pub const EXIT_REFUSED: u8 = 3;
pub const EXIT_NOT_UNIVERSAL: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Refused(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Refused(_) => EXIT_REFUSED,
            CliError::Internal(_) => EXIT_VERIFICATION,
        })
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Refused(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

impl From<locprof_core::Error> for CliError {
    fn from(e: locprof_core::Error) -> Self {
        use locprof_core::Error;
        match e {
            Error::Parse { .. } | Error::Input(_) => CliError::Input(e.to_string()),
            Error::Refused { .. } => CliError::Refused(e.to_string()),
            Error::Internal(_) => CliError::Internal(e.to_string()),
        }
    }
}
