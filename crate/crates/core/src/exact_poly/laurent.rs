use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::format::{write_terms, write_terms_latex};

/// Univariate Laurent polynomial in `t` with big-integer coefficients.
///
/// Stored sparsely; no zero coefficient is ever kept, so structural
/// equality is value equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// `c * t^exp`
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `t^exp`
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// `1 - t`
    pub fn one_minus_t() -> Self {
        Self::from_terms([(0, 1), (1, -1)])
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `t = 1`.
    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        write_terms_latex(&mut s, self.coeffs.iter().map(|(e, c)| (c, vec![("t", *e)])))
            .expect("writing to a String cannot fail");
        s
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `P(t^{-1})`
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// If the polynomial is `± t^k`, returns `(sign, k)`.
    pub fn as_unit(&self) -> Option<(BigInt, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next()?;
        (c.abs().is_one()).then(|| (c.clone(), *e))
    }

    /// Exact quotient by `(1 - t)`, or `None` when `(1 - t)` does not divide.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.eval_one().is_zero() {
            return None;
        }
        // p = (1 - t) q  =>  q_k = p_k + q_{k-1}
        let lo = self.min_exp()?;
        let hi = self.max_exp()?;
        let mut q = Self::zero();
        let mut running = BigInt::zero();
        for k in lo..hi {
            running += self.coeff(k);
            q.add_term(k, running.clone());
        }
        Some(q)
    }

    /// Strips every `(1 - t)` factor, returning the cofactor and the multiplicity.
    pub fn split_one_minus_t(&self) -> (Self, u32) {
        let mut cur = self.clone();
        let mut m = 0;
        if cur.is_zero() {
            return (cur, 0);
        }
        while let Some(q) = cur.div_one_minus_t() {
            cur = q;
            m += 1;
        }
        (cur, m)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|(e, c)| (c, vec![("t", *e)])))
    }
}
