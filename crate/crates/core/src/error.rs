use thiserror::Error;

/// Errors raised while building or analysing two-atom states.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: |m[{row}][{col}] - conj(m[{col}][{row}])| = {deviation:e}")]
    NonHermitianInput {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("invalid X-state parameters: {0}")]
    InvalidStateParams(String),

    #[error("matrix is not of Dicke X form: entry {position} has magnitude {magnitude:e}")]
    NotXForm { position: String, magnitude: f64 },

    #[error("matrix is not a physical density matrix: {0}")]
    NotPhysical(String),

    #[error("mean spin <S_z> vanishes; the Wineland parameter is undefined")]
    MeanSpinZero,

    #[error("unphysical field: {0}")]
    UnphysicalField(String),
}

pub type Result<T> = std::result::Result<T, Error>;
