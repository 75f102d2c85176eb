//! Exact q-series engine for the numbers of genus-`g`, `n`-nodal curves in a
//! primitive class on an Abelian surface.
//!
//! The counts are coefficients of quasi-modular forms built from the
//! Eisenstein series `G2` and the operator `D = q d/dq`:
//!
//! ```
//! use abelcount::modular::{invariant, InvariantKind};
//!
//! assert_eq!(invariant(InvariantKind::N, 5, 7).unwrap(), 2_126_400.into());
//! assert_eq!(invariant(InvariantKind::Fls, 4, 4).unwrap(), 6594.into());
//! ```
//!
//! [`oracle`] recomputes every family by summing over compositions with
//! plain big integers, and [`verify`] cross-checks the two routes together
//! with embedded reference tables.

pub mod error;
pub mod golden;
pub mod modular;
pub mod oracle;
pub mod qseries;
pub mod rational;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use modular::{
    eisenstein_g2, fls_identity_series, generating_series, invariant, InvariantKind,
};
pub use qseries::QSeries;
pub use rational::{rational, ExactRational};
pub use table::{CountTable, Source};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/generating-functions.md")]
    mod generating_functions {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
