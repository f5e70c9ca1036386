use std::fmt;
use std::process::ExitCode;

use trigsum::Error;

/// Exit statuses: 0 success, 1 internal or I/O, 2 usage or validation,
/// 3 verification failure.
#[derive(Debug)]
pub enum CliError {
    Internal(String),
    Usage(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Internal(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 3,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Internal(m) | CliError::Usage(m) | CliError::Verification(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        if err.is_validation() {
            CliError::Usage(err.to_string())
        } else {
            CliError::Internal(err.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Internal(format!("i/o: {err}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        CliError::Internal(format!("csv: {err}"))
    }
}
