//! Error type shared by all modules of the crate.

use std::fmt;

/// Coarse classification of an [`Error`], used by callers (notably the CLI)
/// that map failures to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed textual input.
    Parse,
    /// A precondition of an operation was violated (mismatched rings,
    /// division by zero, non-prime argument, ...).
    Domain,
    /// The computation is well-posed but exceeds a configured bound
    /// (trial-division bound, oracle bound, integer width).
    Capacity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values from rings with different `d` were combined.
    MismatchedRing { left: i128, right: i128 },
    /// `d` is not an admissible ring parameter (must be squarefree,
    /// congruent to 2 or 3 mod 4, and not 0 or 1).
    InvalidRing { d: i128, reason: &'static str },
    /// The operation is only defined for d = -5.
    UnsupportedRing { d: i128 },
    DivisionByZero,
    /// Exact division failed; the dividend is not a multiple of the divisor.
    NotDivisible,
    /// The zero ideal was produced or passed where a nonzero ideal is required.
    ZeroIdeal,
    /// A putative HNF triple does not describe an ideal lattice.
    InvalidBasis(&'static str),
    /// The argument must be a rational prime.
    NotPrime(i128),
    /// Factorization of zero or of a unit was requested.
    NotFactorable,
    /// A precondition on numeric arguments failed (e.g. unsorted
    /// multiplicities passed to the closed counting formula).
    Domain(String),
    /// Intermediate arithmetic exceeded the 128-bit integer width.
    Overflow,
    /// A value exceeded a configured working bound.
    Capacity { value: i128, bound: i128 },
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) => ErrorKind::Parse,
            Error::Overflow | Error::Capacity { .. } => ErrorKind::Capacity,
            _ => ErrorKind::Domain,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MismatchedRing { left, right } => {
                write!(f, "mismatched rings: d = {left} vs d = {right}")
            }
            Error::InvalidRing { d, reason } => {
                write!(f, "invalid ring parameter d = {d}: {reason}")
            }
            Error::UnsupportedRing { d } => {
                write!(f, "operation requires d = -5, got d = {d}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotDivisible => write!(f, "not divisible"),
            Error::ZeroIdeal => write!(f, "the zero ideal is not admitted here"),
            Error::InvalidBasis(reason) => write!(f, "not a valid ideal basis: {reason}"),
            Error::NotPrime(n) => write!(f, "{n} is not a rational prime"),
            Error::NotFactorable => write!(f, "zero and units have no irreducible factorization"),
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::Overflow => write!(f, "arithmetic overflow beyond 128-bit width"),
            Error::Capacity { value, bound } => {
                write!(f, "value {value} exceeds the configured bound {bound}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
