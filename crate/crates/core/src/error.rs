use alloc::string::String;
use core::fmt;

/// Errors raised by context construction and the lattice operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    UnknownName {
        what: &'static str,
        name: String,
    },
    DuplicateName {
        what: &'static str,
        name: String,
    },
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// A subset or pair was built against a different context.
    ForeignSubset,
    EmptyContext,
    NotNormalized(String),
    /// The pair does not satisfy `X^↑N = Y` and `Y^↓N = X`.
    NotInCn,
    /// The graded pair does not satisfy `g^↑N = f` and `f^↓N = g`.
    NotInFn,
    /// `block_bounds` needs `X` different from `∅` and `B`.
    TrivialPair,
    TooManyAtoms {
        atoms: usize,
        limit: usize,
    },
    BudgetExceeded {
        required: u128,
        budget: u128,
    },
    InvalidGranularity(u32),
    GradeOutOfRange {
        numerator: u32,
        m: u32,
    },
    /// Adjoint property `x ≤ z↙y ⇔ x&y ≤ z ⇔ y ≤ z↖x` fails at this triple of numerators.
    NotAdjoint {
        x: u32,
        y: u32,
        z: u32,
    },
    /// `max{x | x&y ≤ z}` (or its dual) is empty.
    NoResiduum {
        side: &'static str,
        z: u32,
        arg: u32,
    },
    FrameMismatch(String),
    OperatorUnavailable {
        operator: &'static str,
    },
    ContractViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { what, index, len } => {
                write!(f, "{what} index {index} out of range (size {len})")
            }
            Error::UnknownName { what, name } => write!(f, "unknown {what} name `{name}`"),
            Error::DuplicateName { what, name } => write!(f, "duplicate {what} name `{name}`"),
            Error::DimensionMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what}: expected {expected} entries, found {found}"),
            Error::ForeignSubset => f.write_str("subset belongs to a different context"),
            Error::EmptyContext => f.write_str("context has no attributes or no objects"),
            Error::NotNormalized(detail) => write!(f, "context is not normalized: {detail}"),
            Error::NotInCn => f.write_str("pair is not a fixpoint of the necessity operators"),
            Error::NotInFn => {
                f.write_str("graded pair is not a fixpoint of the necessity operators")
            }
            Error::TrivialPair => f.write_str("pair has an empty or full object set"),
            Error::TooManyAtoms { atoms, limit } => write!(
                f,
                "{atoms} atoms exceed the materialization limit of {limit}"
            ),
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration needs {required} candidates, budget is {budget}"
            ),
            Error::InvalidGranularity(m) => write!(f, "chain granularity must be >= 1, got {m}"),
            Error::GradeOutOfRange { numerator, m } => {
                write!(f, "grade {numerator}/{m} is outside [0,1]")
            }
            Error::NotAdjoint { x, y, z } => {
                write!(f, "adjoint property fails at x={x}, y={y}, z={z}")
            }
            Error::NoResiduum { side, z, arg } => {
                write!(f, "no {side} residuum for z={z}, argument={arg}")
            }
            Error::FrameMismatch(detail) => write!(f, "frame mismatch: {detail}"),
            Error::OperatorUnavailable { operator } => {
                write!(f, "operator {operator} is not defined for this frame")
            }
            Error::ContractViolation(detail) => write!(f, "internal check failed: {detail}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
