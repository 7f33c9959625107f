use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::format::{write_terms, write_terms_latex};
use super::laurent::forward_owned;
use super::{LaurentPoly, PolyError, YSeries};

/// Laurent polynomial in `t` and `y` with big-integer coefficients.
///
/// Keys are `(t-exponent, y-exponent)`; iteration order is the canonical
/// ascending order used for printing. Negative `y` exponents are allowed so
/// that `y -> y^{-1}` substitutions stay inside the type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(i64, i64), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * t^a * y^b`
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, i64, C)>) -> Self {
        let mut p = Self::zero();
        for (a, b, c) in terms {
            p.add_term(a, b, c.into());
        }
        p
    }

    /// Embeds a Laurent polynomial in `t` as the `y^0` part.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        Self::from_terms(p.terms().map(|(a, c)| (a, 0, c.clone())))
    }

    /// `1 + c * t^a * y`
    pub fn one_plus(c: i64, a: i64) -> Self {
        Self::from_terms([(0, 0, 1), (a, 1, c)])
    }

    pub(crate) fn add_term(&mut self, a: i64, b: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((a, b)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_y(&self) -> Option<i64> {
        self.coeffs.keys().map(|k| k.1).min()
    }

    pub fn max_y(&self) -> Option<i64> {
        self.coeffs.keys().map(|k| k.1).max()
    }

    /// Coefficient of `y^b` as a Laurent polynomial in `t`.
    pub fn y_coeff(&self, b: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().filter(|(k, _)| k.1 == b).map(|(k, c)| (k.0, c.clone())))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, v)| (k.0, k.1, v * c)))
    }

    /// Multiplies by `t^a y^b`.
    pub fn shift(&self, a: i64, b: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| ((k.0 + a, k.1 + b), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Applies a monomial map: term `c t^a y^b` becomes `f(c, a, b)`.
    pub fn map_terms(&self, f: impl Fn(&BigInt, i64, i64) -> (BigInt, i64, i64)) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.coeffs {
            let (c2, a2, b2) = f(c, *a, *b);
            out.add_term(a2, b2, c2);
        }
        out
    }

    /// Substitutes `y -> c * t^k * y^s` for `s = ±1`.
    pub fn substitute_y(&self, c: i64, k: i64, s: i64) -> Self {
        let c = BigInt::from(c);
        assert!(
            c.is_one() || (-&c).is_one() || self.min_y().map_or(true, |m| m >= 0),
            "negative powers of a non-unit coefficient"
        );
        // for c = ±1, c^b = c^|b|
        self.map_terms(|v, a, b| {
            let factor = num_traits::pow::pow(c.clone(), b.unsigned_abs() as usize);
            (v * factor, a + k * b, s * b)
        })
    }

    /// Value at `t = 1`, as a Laurent polynomial in `y` (printed with `t`).
    pub fn eval_t_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(k, c)| (k.1, c.clone())))
    }

    /// Value at `y = -1`, as a Laurent polynomial in `t`.
    pub fn eval_y_minus_one(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .map(|(k, c)| (k.0, if k.1.rem_euclid(2) == 1 { -c } else { c.clone() })),
        )
    }

    /// Lossless conversion to a truncated series; requires no negative `y` powers.
    pub fn to_yseries(&self, truncation: usize) -> Result<YSeries, PolyError> {
        if let Some(lo) = self.min_y() {
            if lo < 0 {
                return Err(PolyError::PoleInY { order: -lo });
            }
        }
        Ok(YSeries::from_laurent_coeffs(
            truncation,
            (0..=truncation as i64).map(|b| self.y_coeff(b)),
        ))
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        write_terms_latex(&mut s, self.coeffs.iter().map(|((a, b), c)| (c, vec![("t", *a), ("y", *b)])))
            .expect("writing to a String cannot fail");
        s
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.coeffs {
            out.add_term(*a, *b, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.coeffs {
            out.add_term(*a, *b, -c);
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for ((a1, b1), c1) in &self.coeffs {
            for ((a2, b2), c2) in &rhs.coeffs {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

forward_owned!(BivariatePoly, Add add, Sub sub, Mul mul);

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|((a, b), c)| (c, vec![("t", *a), ("y", *b)])))
    }
}
