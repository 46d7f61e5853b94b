use thiserror::Error;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable set mismatch: {0} vs {1}")]
    VarSetMismatch(&'static str, &'static str),

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("pole: denominator vanishes under specialization ({0})")]
    Pole(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("leading denominator coefficient in N vanishes identically")]
    DegenerateLeadingCoefficient,

    #[error("nonzero remainder dividing by (w{a} - w{b}) inside the trusted window")]
    NonzeroRemainder { a: usize, b: usize },

    #[error("truncation budget exhausted: need degree {needed}, have {available}")]
    BudgetUnderflow { needed: usize, available: usize },

    #[error("partition weight mismatch: {0} vs {1}")]
    WeightMismatch(usize, usize),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("hypergeometric series does not terminate: no nonpositive integer numerator parameter")]
    NonTerminating,

    #[error("coefficient routes disagree for {kind} at l = {l}")]
    RouteMismatch { kind: &'static str, l: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("limit does not exist: numerator degree {num} exceeds denominator degree {den}")]
    InfiniteLimit { num: usize, den: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
