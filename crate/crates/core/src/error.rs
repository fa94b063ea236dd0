//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by exact-arithmetic and group-theoretic operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,

    #[error("cyclotomic order {from} does not embed into order {to}")]
    BadEmbedding { from: u32, to: u32 },

    #[error("cannot parse cyclotomic literal `{0}`: {1}")]
    BadCyclotomicLiteral(String, String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("denominator vanishes at the origin; series expansion undefined")]
    DenominatorVanishesAtOrigin,

    #[error("zero denominator in rational function")]
    ZeroDenominator,

    #[error("group closure exceeded {max} elements; generators describe an infinite or mis-specified group")]
    ClosureExceeded { max: usize },

    #[error("generator {index} is not unitary")]
    NonUnitaryGenerator { index: usize },

    #[error("generators have mismatched dimensions")]
    DimensionMismatch,

    #[error("catalog {file}:{line}: {message}")]
    CatalogParse {
        file: String,
        line: usize,
        message: String,
    },

    #[error("group `{name}`: {message}")]
    CatalogVerify { name: String, message: String },

    #[error("ambiguous class matching for `{group}`: classes {first} and {second} share signature (order, size, trace); pin them with explicit representative words")]
    AmbiguousClassMatch {
        group: String,
        first: String,
        second: String,
    },

    #[error("character table failed orthogonality: {0}")]
    OrthogonalityFailure(String),

    #[error("unknown group `{name}`; available: {available}")]
    UnknownGroup { name: String, available: String },

    #[error("unknown irrep `{name}` for group `{group}`; available: {available}")]
    UnknownIrrep {
        name: String,
        group: String,
        available: String,
    },

    #[error("unknown representation `{name}` for group `{group}`; available: {available}")]
    UnknownRep {
        name: String,
        group: String,
        available: String,
    },

    #[error("character table for `{0}` has not been verified")]
    UnverifiedTable(String),

    #[error("double cover check failed: {0}")]
    CoverFailure(String),

    #[error("numeric lift failed: {0}")]
    ExactificationFailure(String),

    #[error("class `{0}` is missing rotation-angle metadata")]
    MissingAngle(String),

    #[error("Molien coefficient at degree {degree} is not a non-negative integer: {value}")]
    NonIntegralCoefficient { degree: usize, value: String },

    #[error("row-sum identity violated at degree {degree}: expected {expected}, got {got}")]
    RowSumViolation {
        degree: usize,
        expected: String,
        got: String,
    },

    #[error("OEIS stripped file, line {line}: {message}")]
    OeisParse { line: usize, message: String },

    #[error("sequence query needs at least {min} terms, got {got}")]
    TooFewTerms { min: usize, got: usize },

    #[error("sequence query is constant; constant sequences match almost everything, extend the table or pick another column")]
    DegenerateSequence,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
