use std::fmt;

use serde::Serialize;

use super::{BivariatePoly, LaurentPoly, PolyError, YSeries};

/// The factor kinds allowed in the denominator of a [`ClosedForm`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DenomFactor {
    /// `1 - t`
    OneMinusT,
    /// `1 - t^d y`
    OneMinusTdY,
    /// `1 - t^(d-1) y`
    OneMinusTd1Y,
    /// `t`
    Tpow,
    /// `y`
    Ypow,
}

impl DenomFactor {
    pub const ALL: [DenomFactor; 5] = [
        DenomFactor::OneMinusT,
        DenomFactor::OneMinusTdY,
        DenomFactor::OneMinusTd1Y,
        DenomFactor::Tpow,
        DenomFactor::Ypow,
    ];

    fn index(self) -> usize {
        self as usize
    }

    fn depends_on_d(self) -> bool {
        matches!(self, DenomFactor::OneMinusTdY | DenomFactor::OneMinusTd1Y)
    }

    /// The factor as a polynomial, for a given `d`.
    pub fn poly(self, d: u32) -> BivariatePoly {
        match self {
            DenomFactor::OneMinusT => BivariatePoly::from_terms([(0, 0, 1), (1, 0, -1)]),
            DenomFactor::OneMinusTdY => BivariatePoly::one_plus(-1, d as i64),
            DenomFactor::OneMinusTd1Y => BivariatePoly::one_plus(-1, d as i64 - 1),
            DenomFactor::Tpow => BivariatePoly::monomial(1, 1, 0),
            DenomFactor::Ypow => BivariatePoly::monomial(1, 0, 1),
        }
    }

    /// Text name with `d` substituted, e.g. `(1-t^3*y)`.
    pub fn name(self, d: u32) -> String {
        let ty = |e: i64| match e {
            0 => "(1-y)".to_string(),
            1 => "(1-t*y)".to_string(),
            _ => format!("(1-t^{e}*y)"),
        };
        match self {
            DenomFactor::OneMinusT => "(1-t)".into(),
            DenomFactor::OneMinusTdY => ty(d as i64),
            DenomFactor::OneMinusTd1Y => ty(d as i64 - 1),
            DenomFactor::Tpow => "t".into(),
            DenomFactor::Ypow => "y".into(),
        }
    }

    fn latex(self, d: u32) -> String {
        let ty = |e: i64| match e {
            0 => "(1-y)".to_string(),
            1 => "(1-ty)".to_string(),
            _ => format!("(1-t^{{{e}}}y)"),
        };
        match self {
            DenomFactor::OneMinusT => "(1-t)".into(),
            DenomFactor::OneMinusTdY => ty(d as i64),
            DenomFactor::OneMinusTd1Y => ty(d as i64 - 1),
            DenomFactor::Tpow => "t".into(),
            DenomFactor::Ypow => "y".into(),
        }
    }
}

/// A bivariate rational function `numerator / Π factor^multiplicity`.
///
/// Multiplicities are signed; a negative multiplicity places the factor in
/// the numerator. `d` fixes the meaning of the two `y`-dependent factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedForm {
    numerator: BivariatePoly,
    d: u32,
    mult: [i64; 5],
}

impl ClosedForm {
    pub fn new(numerator: BivariatePoly, d: u32) -> Self {
        Self { numerator, d, mult: [0; 5] }
    }

    /// Adds `m` to the multiplicity of `f` in the denominator.
    pub fn with_factor(mut self, f: DenomFactor, m: i64) -> Self {
        self.mult[f.index()] += m;
        self
    }

    pub fn numerator(&self) -> &BivariatePoly {
        &self.numerator
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn multiplicity(&self, f: DenomFactor) -> i64 {
        self.mult[f.index()]
    }

    fn uses_d(&self) -> bool {
        DenomFactor::ALL.iter().any(|f| f.depends_on_d() && self.multiplicity(*f) != 0)
    }

    /// Expands to a polynomial pair `(N, D)` with value `N / D`.
    pub fn fraction(&self) -> (BivariatePoly, BivariatePoly) {
        let mut num = self.numerator.clone();
        let mut den = BivariatePoly::one();
        for f in DenomFactor::ALL {
            let m = self.multiplicity(f);
            let p = f.poly(self.d).pow(m.unsigned_abs() as u32);
            if m > 0 {
                den = &den * &p;
            } else if m < 0 {
                num = &num * &p;
            }
        }
        (num, den)
    }

    /// Exact equality as rational functions, by cross-multiplication.
    pub fn value_eq(&self, rhs: &Self) -> bool {
        let (na, da) = self.fraction();
        let (nb, db) = rhs.fraction();
        &na * &db == &nb * &da
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        let d = match (self.uses_d(), rhs.uses_d()) {
            (true, true) if self.d != rhs.d => return Err(PolyError::DegreeMismatch(self.d, rhs.d)),
            (false, true) => rhs.d,
            _ => self.d,
        };
        let mut mult = [0; 5];
        for (i, m) in mult.iter_mut().enumerate() {
            *m = self.mult[i] + rhs.mult[i];
        }
        Ok(Self { numerator: &self.numerator * &rhs.numerator, d, mult })
    }

    /// Truncated expansion in `y` with [`RatFunc`](super::RatFunc) coefficients.
    pub fn to_yseries(&self, truncation: usize) -> Result<YSeries, PolyError> {
        let mut num = self.numerator.clone();
        for f in [DenomFactor::OneMinusT, DenomFactor::OneMinusTdY, DenomFactor::OneMinusTd1Y] {
            let m = self.multiplicity(f);
            if m < 0 {
                num = &num * &f.poly(self.d).pow(m.unsigned_abs() as u32);
            }
        }
        num = num.shift(-self.multiplicity(DenomFactor::Tpow), -self.multiplicity(DenomFactor::Ypow));
        let mut series = num.to_yseries(truncation).map_err(|_| PolyError::NotPowerSeries)?;
        for f in [DenomFactor::OneMinusTdY, DenomFactor::OneMinusTd1Y] {
            let m = self.multiplicity(f);
            if m > 0 {
                let inv = f.poly(self.d).pow(m as u32).to_yseries(truncation)?.invert()?;
                series = series.mul(&inv)?;
            }
        }
        let e = self.multiplicity(DenomFactor::OneMinusT).max(0) as u32;
        Ok(series.div_one_minus_t_pow(e))
    }

    /// The `y^0` coefficient, i.e. the value at `y = 0`.
    pub fn at_y_zero(&self) -> Result<super::RatFunc, PolyError> {
        Ok(self.to_yseries(0)?.coeff(0).clone())
    }

    pub fn to_latex(&self) -> String {
        let mut num_factors = Vec::new();
        let mut den = String::new();
        for f in DenomFactor::ALL {
            let m = self.multiplicity(f);
            let base = f.latex(self.d);
            let piece = match m.unsigned_abs() {
                0 => continue,
                1 => base,
                k => format!("{base}^{{{k}}}"),
            };
            if m > 0 {
                den.push_str(&piece);
            } else {
                num_factors.push(piece);
            }
        }
        let mut num = if num_factors.is_empty() || self.numerator != BivariatePoly::one() {
            self.numerator.to_latex()
        } else {
            String::new()
        };
        if !num_factors.is_empty() && !num.is_empty() {
            num = format!("({num})");
        }
        num.push_str(&num_factors.concat());
        if den.is_empty() {
            den.push('1');
        }
        format!("\\frac{{{num}}}{{{den}}}")
    }

    /// Denominator factors with nonzero multiplicity, keyed by text name.
    pub fn factor_list(&self) -> Vec<(String, i64)> {
        DenomFactor::ALL
            .iter()
            .filter(|f| self.multiplicity(**f) != 0)
            .map(|f| (f.name(self.d), self.multiplicity(*f)))
            .collect()
    }
}

impl From<LaurentPoly> for ClosedForm {
    fn from(p: LaurentPoly) -> Self {
        Self::new(BivariatePoly::from_laurent(&p), 1)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        let factors = self.factor_list();
        if factors.is_empty() {
            return Ok(());
        }
        f.write_str(" / (")?;
        for (i, (name, m)) in factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{name}^{m}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::RatFunc;

    fn snc(n: i64, d: u32) -> ClosedForm {
        ClosedForm::new(BivariatePoly::one(), d)
            .with_factor(DenomFactor::OneMinusT, n)
            .with_factor(DenomFactor::OneMinusTd1Y, d as i64)
            .with_factor(DenomFactor::OneMinusTdY, 1 - d as i64)
    }

    #[test]
    fn constant_denominator_only() {
        let cf = ClosedForm::new(BivariatePoly::one(), 1).with_factor(DenomFactor::OneMinusT, 3);
        let s = cf.to_yseries(4).unwrap();
        assert_eq!(s.coeff(0), &RatFunc::normalize(LaurentPoly::one(), 3));
        assert!(s.coeffs()[1..].iter().all(RatFunc::is_zero));
    }

    #[test]
    fn smooth_divisor_series() {
        let s = snc(1, 1).to_yseries(6).unwrap();
        for c in s.coeffs() {
            assert_eq!(c, &RatFunc::normalize(LaurentPoly::one(), 1));
        }
    }

    #[test]
    fn two_crossing_lines_first_order() {
        let s = snc(2, 2).to_yseries(1).unwrap();
        let want = RatFunc::normalize(LaurentPoly::from_terms([(1, 2), (2, -1)]), 2);
        assert_eq!(s.coeff(1), &want);
    }

    #[test]
    fn geometric_expansion_matches() {
        let d = 3;
        let cf = ClosedForm::new(BivariatePoly::one(), d).with_factor(DenomFactor::OneMinusTdY, 1);
        let s = cf.to_yseries(5).unwrap();
        for p in 0..=5 {
            assert_eq!(s.coeff(p), &RatFunc::from_poly(LaurentPoly::t_pow(3 * p as i64)));
        }
    }

    #[test]
    fn equivalent_fractions() {
        let a = ClosedForm::new(BivariatePoly::one(), 1).with_factor(DenomFactor::OneMinusT, 1);
        assert!(a.value_eq(&a));
        // (1 - t) t / (t (1 - t)^2)
        let b = ClosedForm::new(DenomFactor::OneMinusT.poly(1).shift(1, 0), 1)
            .with_factor(DenomFactor::OneMinusT, 2)
            .with_factor(DenomFactor::Tpow, 1);
        assert!(a.value_eq(&b));
        let c = ClosedForm::new(BivariatePoly::one(), 1).with_factor(DenomFactor::OneMinusT, 2);
        assert!(!a.value_eq(&c));
    }

    #[test]
    fn y_pole_is_rejected() {
        let cf = ClosedForm::new(BivariatePoly::one(), 1).with_factor(DenomFactor::Ypow, 1);
        assert_eq!(cf.to_yseries(2), Err(PolyError::NotPowerSeries));
        let ok = ClosedForm::new(BivariatePoly::monomial(1, 0, 2), 1).with_factor(DenomFactor::Ypow, 1);
        assert_eq!(ok.to_yseries(2).unwrap().coeff(1), &RatFunc::one());
    }

    #[test]
    fn renderings() {
        let cf = snc(2, 2);
        assert_eq!(cf.to_string(), "(1) / ((1-t)^2 * (1-t^2*y)^-1 * (1-t*y)^2)");
        assert_eq!(cf.to_latex(), "\\frac{(1-t^{2}y)}{(1-t)^{2}(1-ty)^{2}}");
    }
}
