use thiserror::Error;

/// Failures surfaced by the `dicke` binary, each tied to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] dicke_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use dicke_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                E::NonHermitianInput { .. }
                | E::NotPhysical(_)
                | E::InvalidStateParams(_)
                | E::MeanSpinZero => 3,
                E::NotXForm { .. } => 4,
                E::UnphysicalField(_) => 5,
            },
        }
    }

    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
