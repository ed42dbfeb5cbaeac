use thiserror::Error;

/// Errors produced by constructors and conversions.
///
/// Operations documented as total never return these; they are raised when
/// building values from untrusted input (tuples, JSON, CLI flags).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("coordinate ({s},{t}) lies outside the index domain of {cartan}")]
    OutsideDomain { cartan: String, s: usize, t: usize },

    #[error("negative value {value} at coordinate ({s},{t})")]
    NegativeValue { s: usize, t: usize, value: i64 },

    #[error("partition {partition} does not belong to the family")]
    NotInFamily { partition: String },

    #[error("operation is defined for type A only, got {cartan}")]
    TypeAOnly { cartan: String },

    #[error("cartan types differ: {left} vs {right}")]
    CartanMismatch { left: String, right: String },

    #[error("unknown suite name {0:?}")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
