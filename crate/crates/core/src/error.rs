use thiserror::Error;

use crate::modular::InvariantKind;

/// Errors raised by the series engine, the oracles, and table assembly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in rational {numerator}/0")]
    ZeroDenominator { numerator: String },

    #[error("coefficient q^{index} requested from a series known only modulo q^{prec}")]
    Precision { index: usize, prec: usize },

    #[error("expected an integer, found {value}")]
    NotIntegral { value: String },

    #[error("{kind} is undefined for genus {genus}")]
    Domain { kind: InvariantKind, genus: u32 },

    #[error("invalid argument: {0}")]
    Argument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
