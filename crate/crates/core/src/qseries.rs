//! Truncated formal power series in `q` over [`ExactRational`].
//!
//! A [`QSeries`] is known modulo `q^prec`. Binary operations return the
//! smaller of the two precisions; nothing is ever zero-extended, so a
//! coefficient past the known range is an error rather than a silent `0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    // Invariant: non-empty; the length is the precision.
    coefficients: Vec<ExactRational>,
}

impl QSeries {
    /// Series with the given coefficients for `q^0 .. q^(len-1)`, known
    /// modulo `q^len`.
    pub fn from_coefficients(coefficients: Vec<ExactRational>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Argument(
                "a series needs precision at least 1".into(),
            ));
        }
        Ok(Self { coefficients })
    }

    pub fn from_integers(coefficients: &[i64]) -> Result<Self> {
        Self::from_coefficients(coefficients.iter().map(|&c| c.into()).collect())
    }

    /// The zero series modulo `q^prec`.
    ///
    /// Panics if `prec` is 0.
    pub fn zero(prec: usize) -> Self {
        assert!(prec > 0, "series precision must be positive");
        Self {
            coefficients: vec![ExactRational::zero(); prec],
        }
    }

    /// The constant series 1 modulo `q^prec`.
    ///
    /// Panics if `prec` is 0.
    pub fn one(prec: usize) -> Self {
        Self::monomial(0, prec)
    }

    /// `q^exponent` modulo `q^prec` (the zero series if `exponent >= prec`).
    ///
    /// Panics if `prec` is 0.
    pub fn monomial(exponent: usize, prec: usize) -> Self {
        let mut series = Self::zero(prec);
        if let Some(c) = series.coefficients.get_mut(exponent) {
            *c = ExactRational::one();
        }
        series
    }

    pub fn prec(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Result<&ExactRational> {
        self.coefficients.get(k).ok_or(Error::Precision {
            index: k,
            prec: self.prec(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(ExactRational::is_zero)
    }

    /// Forget everything from `q^prec` on. Raising the precision is not
    /// possible and is reported as an error.
    pub fn truncate(&self, prec: usize) -> Result<Self> {
        if prec == 0 || prec > self.prec() {
            return Err(Error::Argument(format!(
                "cannot truncate a series known modulo q^{} to q^{}",
                self.prec(),
                prec
            )));
        }
        Ok(Self {
            coefficients: self.coefficients[..prec].to_vec(),
        })
    }

    /// Smallest exponent with a nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn scale(&self, factor: &ExactRational) -> Self {
        self.map(|c| c * factor)
    }

    /// Cauchy product modulo `q^min(prec)`.
    ///
    /// Both operands are brought over a common denominator, convolved as big
    /// integers, and each output coefficient is reduced once.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec().min(other.prec());
        let (a, den_a) = scaled_integers(&self.coefficients[..prec]);
        let (b, den_b) = scaled_integers(&other.coefficients[..prec]);
        let mut out = vec![BigInt::zero(); prec];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[..prec - i].iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = den_a * den_b;
        Self {
            coefficients: out
                .into_iter()
                .map(|c| ExactRational::new(c, den.clone()).expect("denominator is positive"))
                .collect(),
        }
    }

    /// `self^exponent` by repeated squaring; `pow(0)` is the constant 1.
    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = Self::one(self.prec());
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `D = q d/dq`: multiplies the coefficient of `q^k` by `k`. The
    /// precision is unchanged.
    pub fn d_operator(&self) -> Self {
        Self {
            coefficients: self
                .coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| c * &ExactRational::from(k as i64))
                .collect(),
        }
    }

    fn map(&self, f: impl Fn(&ExactRational) -> ExactRational) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(f).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&ExactRational, &ExactRational) -> ExactRational,
    ) -> Self {
        Self {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

/// Numerators over the least common denominator, and that denominator.
fn scaled_integers(coefficients: &[ExactRational]) -> (Vec<BigInt>, BigInt) {
    let lcm = coefficients
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denominator()));
    let scaled = coefficients
        .iter()
        .map(|c| {
            if c.denominator().is_one() {
                c.numerator() * &lcm
            } else {
                c.numerator() * (&lcm / c.denominator())
            }
        })
        .collect();
    (scaled, lcm)
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

impl fmt::Display for QSeries {
    /// Renders as e.g. `-1/24 + q + 3q^2 + O(q^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = ExactRational::one();
        let minus_one = -&one;
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.numerator().sign() == num_bigint::Sign::Minus;
            let magnitude = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = *c == one || *c == minus_one;
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}")?;
                    }
                    if k == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(q^{})", self.prec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational;

    fn ints(cs: &[i64]) -> QSeries {
        QSeries::from_integers(cs).unwrap()
    }

    // D G2 = sum k sigma(k) q^k, written out by hand from the divisor sums.
    fn dg2_by_hand() -> QSeries {
        ints(&[0, 1, 6, 12, 28, 30, 72, 56, 120])
    }

    #[test]
    fn add_truncates_to_min_prec() {
        let a = ints(&[1, 1]);
        let b = ints(&[2, 5, 1]);
        assert_eq!(&a + &b, ints(&[3, 6]));
    }

    #[test]
    fn additive_identity_and_inverse() {
        let f = dg2_by_hand();
        assert_eq!(&f + &QSeries::zero(f.prec()), f);
        let minus = f.scale(&(-1).into());
        assert!((&f + &minus).is_zero());
        assert_eq!(&f + &minus, QSeries::zero(f.prec()));
    }

    #[test]
    fn difference_of_squares() {
        let prod = &ints(&[1, 1, 0]) * &ints(&[1, -1, 0]);
        assert_eq!(prod, ints(&[1, 0, -1]));
    }

    #[test]
    fn square_of_dg2() {
        // q^4 in (DG2)^2: 2*(1*12) + 6*6 = 60
        let sq = dg2_by_hand().pow(2);
        assert_eq!(sq.coefficient(4).unwrap(), &ExactRational::from(60));
        assert_eq!(sq.coefficient(2).unwrap(), &ExactRational::from(1));
        assert_eq!(sq, &dg2_by_hand() * &dg2_by_hand());
    }

    #[test]
    fn multiplicative_identity() {
        let f = dg2_by_hand();
        assert_eq!(&f * &QSeries::one(5), f.truncate(5).unwrap());
    }

    #[test]
    fn pow_edge_cases() {
        assert_eq!(dg2_by_hand().pow(0), QSeries::one(9));
        assert_eq!(QSeries::monomial(1, 6).pow(3), QSeries::monomial(3, 6));
        assert!(QSeries::monomial(1, 3).pow(3).is_zero());
    }

    #[test]
    fn d_operator_examples() {
        let constant = QSeries::from_coefficients(vec![
            rational(-1, 24).unwrap(),
            ExactRational::zero(),
            ExactRational::zero(),
        ])
        .unwrap();
        assert_eq!(constant.d_operator(), QSeries::zero(3));
        // sigma(k) for k < 5, then D twice: coefficient of q^2 is 4 * 3.
        let g2 = QSeries::from_coefficients(vec![
            rational(-1, 24).unwrap(),
            1.into(),
            3.into(),
            4.into(),
            7.into(),
        ])
        .unwrap();
        assert_eq!(g2.d_operator(), ints(&[0, 1, 6, 12, 28]));
        assert_eq!(
            g2.d_operator().d_operator().coefficient(2).unwrap(),
            &12.into()
        );
    }

    #[test]
    fn coefficient_out_of_range() {
        let f = ints(&[1, 2, 3]);
        assert_eq!(
            f.coefficient(3),
            Err(Error::Precision { index: 3, prec: 3 })
        );
    }

    #[test]
    fn equality_requires_equal_prec() {
        assert_ne!(QSeries::zero(3), QSeries::zero(4));
    }

    #[test]
    fn empty_and_bad_truncation_rejected() {
        assert!(QSeries::from_coefficients(vec![]).is_err());
        assert!(ints(&[1, 2]).truncate(3).is_err());
        assert!(ints(&[1, 2]).truncate(0).is_err());
    }

    #[test]
    fn display() {
        let f = QSeries::from_coefficients(vec![
            rational(-1, 24).unwrap(),
            1.into(),
            3.into(),
            (-1).into(),
        ])
        .unwrap();
        assert_eq!(f.to_string(), "-1/24 + q + 3q^2 - q^3 + O(q^4)");
        assert_eq!(QSeries::zero(2).to_string(), "O(q^2)");
    }
}
