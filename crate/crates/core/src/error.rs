use thiserror::Error;

/// Errors raised by the numerical routines and the identity registry.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{func}: argument {arg} is outside the domain ({expected})")]
    Domain {
        func: &'static str,
        arg: f64,
        expected: &'static str,
    },

    #[error("{func}: index ({n}, {k}) is out of range (max {max})")]
    Bounds {
        func: &'static str,
        n: usize,
        k: usize,
        max: usize,
    },

    #[error("integrand returned non-finite value {value} at x = {x}")]
    NonFinite { x: f64, value: f64 },

    #[error("unknown constant `{0}`")]
    UnknownConstant(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(func: &'static str, arg: f64, expected: &'static str) -> Error {
    Error::Domain {
        func,
        arg,
        expected,
    }
}
