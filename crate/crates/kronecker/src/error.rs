//! Error types shared across the crate.

use thiserror::Error;

/// Parse failure with a byte offset into the input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn at(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

/// Violated caller-checked side condition.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("precondition violated: {0}")]
pub struct Precondition(pub String);

/// Oracle-side failures.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration budget exceeded: needs {needed} states, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("inconsistent classification: {0}")]
    Inconsistent(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
