use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use super::{LaurentPoly, PolyError};

/// Rational function `numerator / (1 - t)^e`.
///
/// Kept reduced: when `e > 0`, `(1 - t)` does not divide the numerator.
/// Together with the sparse numerator this makes derived equality exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatFunc {
    numerator: LaurentPoly,
    onemtpow: u32,
}

impl RatFunc {
    /// Builds the reduced form of `num / (1 - t)^e`.
    pub fn normalize(num: LaurentPoly, e: u32) -> Self {
        let mut numerator = num;
        let mut onemtpow = e;
        if numerator.is_zero() {
            onemtpow = 0;
        }
        while onemtpow > 0 {
            match numerator.div_one_minus_t() {
                Some(q) => {
                    numerator = q;
                    onemtpow -= 1;
                }
                None => break,
            }
        }
        Self { numerator, onemtpow }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { numerator: p, onemtpow: 0 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn onemtpow(&self) -> u32 {
        self.onemtpow
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Returns the numerator when the value is a Laurent polynomial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        (self.onemtpow == 0).then_some(&self.numerator)
    }

    fn lifted(&self, e: u32) -> LaurentPoly {
        debug_assert!(e >= self.onemtpow);
        &self.numerator * &LaurentPoly::one_minus_t().pow(e - self.onemtpow)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let e = self.onemtpow.max(rhs.onemtpow);
        Self::normalize(&self.lifted(e) + &rhs.lifted(e), e)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let e = self.onemtpow.max(rhs.onemtpow);
        Self::normalize(&self.lifted(e) - &rhs.lifted(e), e)
    }

    pub fn neg(&self) -> Self {
        Self { numerator: -&self.numerator, onemtpow: self.onemtpow }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::normalize(&self.numerator * &rhs.numerator, self.onemtpow + rhs.onemtpow)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::normalize(&self.numerator * p, self.onemtpow)
    }

    /// Divides by `(1 - t)^k`.
    pub fn div_one_minus_t_pow(&self, k: u32) -> Self {
        Self::normalize(self.numerator.clone(), self.onemtpow + k)
    }

    /// Multiplicative inverse. Only values of the form `± t^k (1 - t)^m`
    /// (with `m` of either sign) have an inverse inside this class.
    pub fn inverse(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroConstantTerm);
        }
        let (rest, m) = self.numerator.split_one_minus_t();
        let (sign, k) = rest
            .as_unit()
            .ok_or_else(|| PolyError::OutsideRationalClass(self.to_string()))?;
        let num = &LaurentPoly::monomial(sign, -k) * &LaurentPoly::one_minus_t().pow(self.onemtpow);
        Ok(Self::normalize(num, m))
    }

    /// Coefficient of `t^j` in the expansion at `t = 0` (any integer `j`).
    pub fn coefficient(&self, j: i64) -> BigInt {
        if self.onemtpow == 0 {
            return self.numerator.coeff(j);
        }
        // [t^m] (1 - t)^-e = C(m + e - 1, e - 1)
        let e = BigInt::from(self.onemtpow);
        self.numerator
            .terms()
            .filter(|(k, _)| *k <= j)
            .map(|(k, c)| c * binomial(BigInt::from(j - k) + &e - 1, &e - 1))
            .sum()
    }

    /// Coefficients of `t^0 ..= t^j_max` of the power-series expansion.
    ///
    /// Fails when the expansion has terms of negative degree, since such a
    /// value is not the Hilbert series of an ideal.
    pub fn expand_t(&self, j_max: usize) -> Result<Vec<BigInt>, PolyError> {
        if let Some(lo) = self.numerator.min_exp() {
            if lo < 0 {
                return Err(PolyError::NegativeTail { lowest: lo });
            }
        }
        Ok((0..=j_max as i64).map(|j| self.coefficient(j)).collect())
    }

    /// Coefficients of `t^lo ..= t^hi`, allowing a Laurent tail.
    pub fn expand_range(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        (lo..=hi).map(|j| self.coefficient(j)).collect()
    }

    /// Exact equality by cross-multiplication; agrees with `==` on reduced
    /// values and is used to double-check normalization.
    pub fn value_eq(&self, rhs: &Self) -> bool {
        let e = self.onemtpow.max(rhs.onemtpow);
        (&self.lifted(e) - &rhs.lifted(e)).is_zero()
    }

    pub fn is_nonnegative_expansion(&self, j_max: usize) -> Result<bool, PolyError> {
        Ok(self.expand_t(j_max)?.iter().all(|c| c >= &BigInt::zero()))
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl RatFunc {
    pub fn to_latex(&self) -> String {
        match self.onemtpow {
            0 => self.numerator.to_latex(),
            1 => format!("\\frac{{{}}}{{1-t}}", self.numerator.to_latex()),
            e => format!("\\frac{{{}}}{{(1-t)^{{{e}}}}}", self.numerator.to_latex()),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.onemtpow == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / (1-t)^{}", self.numerator, self.onemtpow)
        }
    }
}
