//! Brute-force counts that do not touch the series engine.
//!
//! Each count is a sum over compositions `k = (k_1, .., k_{g-1})` of
//! `n + g - 1`, where a component of fiber degree `k` contributes
//! `k * sigma(k)` (the degree-`k` covers of a fixed elliptic curve, times the
//! `k` positions of a marked point). Everything is plain big-integer
//! arithmetic so that agreement with [`crate::modular`] is a real check.

mod compositions;

pub use compositions::{enumerate_compositions, Composition, Compositions};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::modular::InvariantKind;

/// Sum of the positive divisors of `k`, by trial division up to `sqrt(k)`.
pub fn divisor_sum(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Argument("divisor sum of 0 is undefined".into()));
    }
    let mut sum = 0;
    let mut d = 1;
    while d * d <= k {
        if k.is_multiple_of(d) {
            sum += d;
            let pair = k / d;
            if pair != d {
                sum += pair;
            }
        }
        d += 1;
    }
    Ok(sum)
}

/// Upper-triangular Hermite normal forms `[[a, b], [0, d]]` with `a d = k`
/// and `0 <= b < d`; each is the basis of exactly one index-`k` sublattice of
/// `Z^2`.
pub fn hermite_forms(k: u64) -> impl Iterator<Item = [[u64; 2]; 2]> {
    (1..=k)
        .filter(move |&a| k.is_multiple_of(a))
        .flat_map(move |a| {
            let d = k / a;
            (0..d).map(move |b| [[a, b], [0, d]])
        })
}

/// Number of index-`k` sublattices of `Z^2`, by enumerating their Hermite
/// normal forms.
pub fn sublattice_count(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Argument("sublattice index must be positive".into()));
    }
    Ok(hermite_forms(k).count() as u64)
}

/// `k * sigma(k)` for `k = 0..=max` (entry 0 unused).
fn part_weights(max: u32) -> Vec<BigInt> {
    std::iter::once(BigInt::zero())
        .chain((1..=u64::from(max)).map(|k| BigInt::from(k * divisor_sum(k).unwrap())))
        .collect()
}

/// Sum over `(genus-1)`-part compositions of `nodes + genus - 1` of the
/// product of part weights, where `special(index, part)` may override the
/// weight of one part.
fn composition_sum(
    genus: u32,
    nodes: u32,
    special: impl Fn(usize, usize, u32) -> Option<BigInt>,
) -> BigInt {
    let total = nodes + genus - 1;
    let length = (genus - 1) as usize;
    let weights = part_weights(total);
    enumerate_compositions(total, length)
        .map(|c| {
            c.parts()
                .iter()
                .enumerate()
                .map(|(i, &k)| special(i, length, k).unwrap_or_else(|| weights[k as usize].clone()))
                .fold(BigInt::one(), |acc, w| acc * w)
        })
        .sum()
}

fn squared_weight(k: u32) -> BigInt {
    let k = u64::from(k);
    BigInt::from(k) * BigInt::from(k) * BigInt::from(divisor_sum(k).unwrap())
}

fn check(kind: InvariantKind, genus: u32) -> Result<()> {
    if genus == 0 {
        return Err(Error::Domain { kind, genus });
    }
    kind.check_genus(genus)
}

/// `g * sum_k prod k_i sigma(k_i)`.
pub fn oracle_n(genus: u32, nodes: u32) -> Result<BigInt> {
    check(InvariantKind::N, genus)?;
    Ok(BigInt::from(genus) * composition_sum(genus, nodes, |_, _, _| None))
}

/// Last part weighted `k^2 sigma(k)` (two marked points on that component),
/// the others `k sigma(k)`.
pub fn oracle_fls(genus: u32, nodes: u32) -> Result<BigInt> {
    check(InvariantKind::Fls, genus)?;
    Ok(composition_sum(genus, nodes, |i, len, k| {
        (i + 1 == len).then(|| squared_weight(k))
    }))
}

/// `(g-1)` choices of section component, first part weighted `k^2 sigma(k)`.
pub fn oracle_n12(genus: u32, nodes: u32) -> Result<BigInt> {
    check(InvariantKind::N12, genus)?;
    if genus == 1 {
        return Ok(BigInt::zero());
    }
    Ok(BigInt::from(genus - 1)
        * composition_sum(genus, nodes, |i, _, k| (i == 0).then(|| squared_weight(k))))
}

pub fn oracle_n34(genus: u32, nodes: u32) -> Result<BigInt> {
    check(InvariantKind::N34, genus)?;
    Ok(composition_sum(genus, nodes, |_, _, _| None))
}

/// Dispatch on `kind`; the vanishing kinds count nothing.
pub fn oracle(kind: InvariantKind, genus: u32, nodes: u32) -> Result<BigInt> {
    match kind {
        InvariantKind::N => oracle_n(genus, nodes),
        InvariantKind::Fls => oracle_fls(genus, nodes),
        InvariantKind::N12 => oracle_n12(genus, nodes),
        InvariantKind::N34 => oracle_n34(genus, nodes),
        _ => {
            check(kind, genus)?;
            Ok(BigInt::zero())
        }
    }
}
