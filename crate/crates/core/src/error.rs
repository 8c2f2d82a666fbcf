use alloc::string::String;
use core::fmt;

/// Errors raised by the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A polynomial that was supposed to define a field extension factors.
    ReducibleModulus(String),
    /// The irreducibility test does not cover this modulus.
    UnsupportedModulus(String),
    /// Arithmetic was attempted with operands living in different structures.
    DomainMismatch(&'static str),
    /// A segment colon `(s : Empty)` or a colon whose result is the zero module.
    EmptyColon,
    /// Division by zero (or a non-invertible residue).
    ZeroDivisor,
    /// A semigroup with `gcd != 1`, or an otherwise invalid presentation.
    InvalidInput(String),
    /// The module cannot be represented in this family.
    Unrepresentable(String),
    /// The requested operation is outside what this domain supports.
    UnsupportedOperation(String),
    /// Two independent decision routes disagreed.
    ConsistencyFailure(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ReducibleModulus(m) => write!(f, "modulus {m} is reducible"),
            Error::UnsupportedModulus(m) => write!(f, "cannot decide irreducibility of {m}"),
            Error::DomainMismatch(what) => write!(f, "operands live in different {what}"),
            Error::EmptyColon => f.write_str("colon by the empty segment or result is zero"),
            Error::ZeroDivisor => f.write_str("division by zero"),
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::Unrepresentable(m) => write!(f, "not representable: {m}"),
            Error::UnsupportedOperation(m) => write!(f, "unsupported operation: {m}"),
            Error::ConsistencyFailure(m) => write!(f, "consistency failure: {m}"),
        }
    }
}

impl core::error::Error for Error {}
