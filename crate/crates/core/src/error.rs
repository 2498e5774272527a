use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}` (expected `p` or `p/q`)")]
    Rational(String),
    #[error("unknown algebra `{0}`")]
    Algebra(String),
    #[error("invalid permutation `{0}` (expected a rearrangement of `abg`)")]
    Permutation(String),
    #[error("unknown line `{0}` (expected sl, so, sp or exc)")]
    Line(String),
    #[error("invalid representation expression `{expr}`: {reason}")]
    Expression { expr: String, reason: String },
    #[error("invalid data file: {0}")]
    Data(String),
}

/// Failure to evaluate a formal sinh product at a point.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    /// A denominator argument vanishes and no numerator argument does.
    #[error("singular: denominator argument {argument} vanishes")]
    Singular { argument: String },
    /// Zero arguments on both sides; the value depends on the direction of approach.
    #[error("indeterminate: {numer} vanishing numerator and {denom} vanishing denominator arguments; evaluate with a line limit")]
    Indeterminate { numer: usize, denom: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimensionError {
    #[error("unbalanced product ({numer} numerator vs {denom} denominator factors): the x→0 limit is not finite and nonzero")]
    Unbalanced { numer: usize, denom: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: char, rank: u32 },
    #[error("weight {0:?} has the wrong number of Dynkin labels")]
    WrongLength(Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("fundamental weight index {index} outside 1..={rank}")]
    IndexOutOfRange { index: i64, rank: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimitError {
    #[error("point does not lie on the {line} line (constraint value {value})")]
    NotOnLine { line: String, value: Rational },
    #[error("vanishing order mismatch along the line: {numer} numerator vs {denom} denominator factors")]
    OrderMismatch { numer: usize, denom: usize },
    #[error("denominator argument {argument} vanishes identically along the line")]
    SingularOnLine { argument: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("Vogel parameter {0} is zero")]
    ZeroParameter(&'static str),
    #[error("singular: factor `{0}` of the denominator vanishes")]
    Singular(&'static str),
}
