//! The weight-2 Eisenstein series and the generating functions built from it.
//!
//! Every count lives in a q-series whose coefficient of `q^(n+g-1)` is the
//! number for genus `g` with `n` nodes:
//!
//! | kind   | series                          |
//! |--------|---------------------------------|
//! | `N`    | `g (DG2)^(g-1)`                 |
//! | `FLS`  | `(DG2)^(g-2) D^2 G2`            |
//! | `N12`  | `D((DG2)^(g-1))`                |
//! | `N34`  | `(DG2)^(g-1)`                   |
//! | `ZERO*`| `0`                             |
//!
//! with `G2 = -1/24 + sum sigma(k) q^k` and `D = q d/dq`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::QSeries;
use crate::rational::ExactRational;

/// Which family of counts is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    /// Curves through `g` generic points.
    N,
    /// Curves in a fixed linear system through `g-2` points.
    Fls,
    N12,
    N34,
    Zero13,
    Zero14,
    Zero23,
    Zero24,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 8] = [
        Self::N,
        Self::Fls,
        Self::N12,
        Self::N34,
        Self::Zero13,
        Self::Zero14,
        Self::Zero23,
        Self::Zero24,
    ];

    pub const ZEROS: [InvariantKind; 4] = [Self::Zero13, Self::Zero14, Self::Zero23, Self::Zero24];

    /// Flag spelling, as accepted by [`FromStr`].
    pub fn name(self) -> &'static str {
        match self {
            Self::N => "n",
            Self::Fls => "fls",
            Self::N12 => "n12",
            Self::N34 => "n34",
            Self::Zero13 => "zero13",
            Self::Zero14 => "zero14",
            Self::Zero23 => "zero23",
            Self::Zero24 => "zero24",
        }
    }

    /// Mathematical label used in table headers.
    pub fn symbol(self) -> &'static str {
        match self {
            Self::N => "N_{g,n}",
            Self::Fls => "N_{g,n}^{FLS}",
            Self::N12 => "N_{g,n}^{12}",
            Self::N34 => "N_{g,n}^{34}",
            Self::Zero13 => "N_{g,n}^{13}",
            Self::Zero14 => "N_{g,n}^{14}",
            Self::Zero23 => "N_{g,n}^{23}",
            Self::Zero24 => "N_{g,n}^{24}",
        }
    }

    pub fn is_vanishing(self) -> bool {
        Self::ZEROS.contains(&self)
    }

    /// Smallest genus for which the generating function is defined.
    pub fn min_genus(self) -> u32 {
        match self {
            Self::Fls => 2,
            _ => 1,
        }
    }

    pub fn check_genus(self, genus: u32) -> Result<()> {
        if genus < self.min_genus() {
            Err(Error::Domain { kind: self, genus })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Argument(format!("unknown invariant kind `{s}`")))
    }
}

/// A (genus, nodes) pair. The count sits at exponent `n + g - 1`, which is
/// half the self-intersection of the curve class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenusNodeIndex {
    genus: u32,
    nodes: u32,
}

impl GenusNodeIndex {
    pub fn new(genus: u32, nodes: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Argument("genus must be at least 1".into()));
        }
        Ok(Self { genus, nodes })
    }

    pub fn genus(self) -> u32 {
        self.genus
    }

    pub fn nodes(self) -> u32 {
        self.nodes
    }

    pub fn exponent(self) -> usize {
        (self.nodes + self.genus - 1) as usize
    }
}

/// `sigma(k)` for `0 <= k < len` by a divisor sieve (`sigma(0)` is left 0).
fn divisor_sums_below(len: usize) -> Vec<u64> {
    let mut sums = vec![0u64; len];
    for d in 1..len {
        for multiple in (d..len).step_by(d) {
            sums[multiple] += d as u64;
        }
    }
    sums
}

/// `G2 = -1/24 + sum_{k>=1} sigma(k) q^k` modulo `q^prec`.
pub fn eisenstein_g2(prec: usize) -> Result<QSeries> {
    check_prec(prec)?;
    let sigma = divisor_sums_below(prec);
    let mut coefficients = Vec::with_capacity(prec);
    coefficients.push(ExactRational::new(-1, 24)?);
    coefficients.extend(sigma[1..].iter().map(|&s| ExactRational::from_integer(s)));
    QSeries::from_coefficients(coefficients)
}

/// The generating function of `kind` at genus `genus`, modulo `q^prec`.
pub fn generating_series(kind: InvariantKind, genus: u32, prec: usize) -> Result<QSeries> {
    check_prec(prec)?;
    kind.check_genus(genus)?;
    if kind.is_vanishing() {
        return Ok(QSeries::zero(prec));
    }
    let dg2 = eisenstein_g2(prec)?.d_operator();
    let series = match kind {
        InvariantKind::N => dg2
            .pow(genus - 1)
            .scale(&ExactRational::from_integer(genus)),
        InvariantKind::Fls => dg2.pow(genus - 2).mul(&dg2.d_operator()),
        InvariantKind::N12 => dg2.pow(genus - 1).d_operator(),
        InvariantKind::N34 => dg2.pow(genus - 1),
        _ => unreachable!("vanishing kinds handled above"),
    };
    Ok(series)
}

/// `(g-1)^-1 D((DG2)^(g-1))`, the second closed form for the fixed linear
/// system counts.
pub fn fls_identity_series(genus: u32, prec: usize) -> Result<QSeries> {
    check_prec(prec)?;
    InvariantKind::Fls.check_genus(genus)?;
    let dg2 = eisenstein_g2(prec)?.d_operator();
    let inverse = ExactRational::new(1, i64::from(genus - 1))?;
    Ok(dg2.pow(genus - 1).d_operator().scale(&inverse))
}

/// The count of `kind` for genus `genus` with `nodes` nodes.
pub fn invariant(kind: InvariantKind, genus: u32, nodes: u32) -> Result<BigInt> {
    let index = GenusNodeIndex::new(genus, nodes).map_err(|_| Error::Domain { kind, genus })?;
    let exponent = index.exponent();
    generating_series(kind, genus, exponent + 1)?
        .coefficient(exponent)?
        .to_integer()
}

fn check_prec(prec: usize) -> Result<()> {
    if prec == 0 {
        Err(Error::Argument("precision must be at least 1".into()))
    } else {
        Ok(())
    }
}
