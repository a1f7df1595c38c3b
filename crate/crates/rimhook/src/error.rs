use thiserror::Error;

/// Failures surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    BadInput(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// 2 for bad input, 1 for invariant violations.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::BadInput(_) | CliError::Io { .. } => 2,
            CliError::Invariant(_) => 1,
        }
    }
}

impl From<rimhook_core::Error> for CliError {
    fn from(e: rimhook_core::Error) -> Self {
        use rimhook_core::Error as E;
        match e {
            E::Overflow | E::Invariant(_) => CliError::Invariant(e.to_string()),
            _ => CliError::BadInput(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Invariant(format!("serialization failed: {e}"))
    }
}
