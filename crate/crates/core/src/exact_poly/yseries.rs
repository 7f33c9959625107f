use std::fmt;

use super::{LaurentPoly, PolyError, RatFunc};

/// Power series in `y` truncated after `y^P`, with coefficients in [`RatFunc`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YSeries {
    coeffs: Vec<RatFunc>,
}

impl YSeries {
    /// Builds a series of the given truncation; missing coefficients are
    /// zero and those past `y^truncation` are discarded.
    pub fn new(truncation: usize, coeffs: impl IntoIterator<Item = RatFunc>) -> Self {
        let mut c: Vec<RatFunc> = coeffs.into_iter().take(truncation + 1).collect();
        c.resize(truncation + 1, RatFunc::zero());
        Self { coeffs: c }
    }

    pub fn zero(truncation: usize) -> Self {
        Self::new(truncation, [])
    }

    pub fn one(truncation: usize) -> Self {
        Self::constant(truncation, RatFunc::one())
    }

    pub fn constant(truncation: usize, c: RatFunc) -> Self {
        Self::new(truncation, [c])
    }

    /// `Σ_b poly_b(t) y^b` from Laurent-polynomial coefficients indexed by `b`.
    pub fn from_laurent_coeffs(truncation: usize, coeffs: impl IntoIterator<Item = LaurentPoly>) -> Self {
        Self::new(truncation, coeffs.into_iter().map(RatFunc::from_poly))
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, p: usize) -> &RatFunc {
        &self.coeffs[p]
    }

    fn check(&self, rhs: &Self) -> Result<(), PolyError> {
        if self.truncation() != rhs.truncation() {
            return Err(PolyError::TruncationMismatch(self.truncation(), rhs.truncation()));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check(rhs)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check(rhs)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check(rhs)?;
        let p = self.truncation();
        let coeffs = (0..=p)
            .map(|k| {
                (0..=k).fold(RatFunc::zero(), |acc, i| acc.add(&self.coeffs[i].mul(&rhs.coeffs[k - i])))
            })
            .collect();
        Ok(Self { coeffs })
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Multiplicative inverse; requires an invertible constant coefficient.
    pub fn invert(&self) -> Result<Self, PolyError> {
        let inv0 = self.coeffs[0].inverse()?;
        let p = self.truncation();
        let mut out: Vec<RatFunc> = Vec::with_capacity(p + 1);
        out.push(inv0.clone());
        for k in 1..=p {
            let s = (1..=k).fold(RatFunc::zero(), |acc, i| acc.add(&self.coeffs[i].mul(&out[k - i])));
            out.push(s.mul(&inv0).neg());
        }
        Ok(Self { coeffs: out })
    }

    /// Substitutes `y -> c * t^k * y`.
    pub fn substitute_scaled_y(&self, c: i64, k: i64) -> Self {
        let step = LaurentPoly::monomial(c, k);
        let mut factor = LaurentPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul_poly(&factor));
            factor = &factor * &step;
        }
        Self { coeffs }
    }

    /// Divides every coefficient by `(1 - t)^k`.
    pub fn div_one_minus_t_pow(&self, k: u32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.div_one_minus_t_pow(k)).collect() }
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one(self.truncation())
    }
}

impl fmt::Display for YSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, c) in self.coeffs.iter().enumerate() {
            if p > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]*y^{p}")?;
        }
        write!(f, " + O(y^{})", self.coeffs.len())
    }
}
