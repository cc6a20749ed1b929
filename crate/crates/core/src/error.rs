use thiserror::Error;

use crate::game::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("player {player} out of range (game has {players} players)")]
    InvalidPlayer { player: usize, players: usize },

    #[error("latency of resource {resource} evaluated at load {load}, beyond its {len} tabulated values")]
    LatencyOutOfRange { resource: usize, load: usize, len: usize },

    #[error("{solver} does not apply: {reason}")]
    ClassMismatch { solver: &'static str, reason: String },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("brute force refused: {states} states exceed the budget of {budget}")]
    BudgetExceeded { states: u128, budget: u128 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid game: {}", join_violations(.0))]
    Validation(Vec<Violation>),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {message}")]
    Document { path: String, message: String },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    pub(crate) fn class_mismatch(solver: &'static str, reason: impl Into<String>) -> Self {
        Error::ClassMismatch {
            solver,
            reason: reason.into(),
        }
    }
}
