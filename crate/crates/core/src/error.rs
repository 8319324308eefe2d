//! Error type shared by the whole kernel.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong inside the kernel.
///
/// Budget overruns ([`Error::OracleBudget`], [`Error::EnumerationBudget`])
/// are kept distinct from mathematical refusals ([`Error::Hypothesis`]) so
/// callers can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in polynomial rings with different variable counts.
    ContextMismatch { left: usize, right: usize },
    /// An exponent left `u32` range during a multiplication.
    ExponentOverflow,
    /// A variable index was outside `0..nvars`.
    IndexOutOfRange { index: usize, nvars: usize },
    /// The operation is undefined for the zero ideal.
    ZeroIdeal,
    /// The operation is undefined for the unit ideal.
    UnitIdeal,
    /// The operation requires a square-free ideal.
    NotSquareFree,
    /// Powers are only defined for exponents `>= 1`.
    ZeroPower,
    /// An operation was handed an empty list where at least one element is
    /// required.
    EmptyInput,
    /// A malformed argument, with a short reason.
    InvalidArgument(&'static str),
    /// A checker refused to run because a named hypothesis failed.
    Hypothesis(&'static str),
    /// The witness oracle would have to scan more candidates than its cap.
    OracleBudget { needed: u128, cap: u128 },
    /// An exact enumeration is only supported up to a fixed size.
    EnumerationBudget { size: usize, cap: usize },
    /// Two routes that must agree disagreed; this indicates a kernel bug.
    SelfCheck(&'static str),
    /// Text that could not be parsed as a monomial.
    Parse { offset: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ContextMismatch { left, right } => {
                write!(f, "context mismatch: {left} variables vs {right}")
            }
            Error::ExponentOverflow => write!(f, "exponent overflow"),
            Error::IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range for {nvars} variables")
            }
            Error::ZeroIdeal => write!(f, "operation undefined for the zero ideal"),
            Error::UnitIdeal => write!(f, "operation undefined for the unit ideal"),
            Error::NotSquareFree => write!(f, "operation requires a square-free ideal"),
            Error::ZeroPower => write!(f, "powers require an exponent >= 1"),
            Error::EmptyInput => write!(f, "at least one element is required"),
            Error::InvalidArgument(reason) => write!(f, "invalid argument: {reason}"),
            Error::Hypothesis(name) => write!(f, "hypothesis not satisfied: {name}"),
            Error::OracleBudget { needed, cap } => {
                write!(f, "oracle out of budget: {needed} candidates exceed cap {cap}")
            }
            Error::EnumerationBudget { size, cap } => {
                write!(f, "enumeration out of budget: size {size} exceeds cap {cap}")
            }
            Error::SelfCheck(what) => write!(f, "internal cross-check failed: {what}"),
            Error::Parse { offset, message } => {
                write!(f, "parse error at offset {offset}: {message}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
