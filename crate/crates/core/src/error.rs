use thiserror::Error;

/// Errors produced by model setup, assembly, and solves.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("empty basis: {0}")]
    EmptyBasis(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("scalar policy not usable here: {0}")]
    Policy(String),

    #[error("overlap matrix is rank deficient: kept {kept} of {dim} directions, need {need}")]
    RankDeficient { dim: usize, kept: usize, need: usize },

    #[error("iteration failed to converge: {0}")]
    NoConvergence(String),

    #[error("unexpected degeneracy: {0}")]
    Degeneracy(String),

    #[error("index out of range: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;
