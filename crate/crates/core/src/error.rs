use alloc::string::String;
use core::fmt;

/// Errors raised by the core crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    NotSquare { rows: usize, cols: usize },
    DimensionMismatch { expected: usize, found: usize },
    Singular,
    InvalidGraph(String),
    InvalidAction(String),
    InvalidArgument(String),
    UnstableConfig,
    DirectedGraph,
    NotSymmetric,
    CapExceeded { needed: u128, cap: u64 },
    TooLarge(String),
    NotSpanning,
    /// Floating evaluation did not land close enough to an integer.
    Rounding { raw: f64, residue: f64 },
    PrecisionExhausted { raw: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Singular => f.write_str("matrix is singular"),
            Error::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            Error::InvalidAction(msg) => write!(f, "invalid group action: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::UnstableConfig => f.write_str("configuration is not stable"),
            Error::DirectedGraph => f.write_str("recurrence test needs an undirected graph"),
            Error::NotSymmetric => f.write_str("configuration is not fixed by the action"),
            Error::CapExceeded { needed, cap } => {
                write!(f, "enumeration needs {needed} candidates, cap is {cap}")
            }
            Error::TooLarge(msg) => write!(f, "input too large: {msg}"),
            Error::NotSpanning => f.write_str("not a spanning tree of this graph"),
            Error::Rounding { raw, residue } => {
                write!(f, "value {raw:e} is {residue:e} away from an integer")
            }
            Error::PrecisionExhausted { raw } => {
                write!(f, "value {raw:e} exceeds the float evaluation range")
            }
        }
    }
}

impl core::error::Error for Error {}
