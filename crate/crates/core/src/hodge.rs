//! Hilbert series of the Hodge ideals `I_p(D)` of an arrangement divisor.
//!
//! Two independent routes produce `Σ_p H_{I_p}(t) y^p`:
//! [`hodge_generating_function`] substitutes into the Poincaré polynomial
//! and returns a factored closed form, while [`hodge_generating_function_via_mc`]
//! assembles the series from the motivic Chern class of the complement,
//! the duality involution and the `λ`/`s` classes of the tangent bundle.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement::IntersectionLattice;
use crate::exact_poly::{BivariatePoly, ClosedForm, DenomFactor, LaurentPoly, PolyError, RatFunc, YSeries};
use crate::ktheory::{class_of_graded_free, mc_complement, phi_involution, s_y_graded};

pub const DEFAULT_P_MAX: usize = 6;
pub const DEFAULT_J_MAX: usize = 20;
pub const DEFAULT_Y_TRUNCATION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("the arrangement has no hyperplanes, so there is no divisor")]
    EmptyDivisor,
    #[error("general-position closed form needs 1 <= d <= n (got n = {n}, d = {d})")]
    NotGeneralPosition { n: usize, d: usize },
    #[error("dim I_{p} in degree {j} came out as {value}")]
    BadDimension { p: usize, j: usize, value: BigInt },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Closed form, truncated expansion and optional dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeSeriesResult {
    pub closed_form: ClosedForm,
    pub series: YSeries,
    pub dims: Option<Vec<Vec<u64>>>,
}

fn require_divisor(lat: &IntersectionLattice) -> Result<(), HodgeError> {
    if lat.d() == 0 {
        return Err(HodgeError::EmptyDivisor);
    }
    Ok(())
}

/// `t^d / ((1-t)^n (1-t^d y)) · π(A, (1-t) / (t (1-t^{d-1} y)))`, cleared
/// to a single fraction over `(1-t)^n (1-t^d y) t^r (1-t^{d-1} y)^r`
/// with `r = deg π`.
pub fn hodge_generating_function(lat: &IntersectionLattice) -> Result<ClosedForm, HodgeError> {
    require_divisor(lat)?;
    let n = lat.n() as i64;
    let d = lat.d() as u32;
    let pi = lat.poincare_polynomial();
    let r = pi.degree().unwrap_or(0) as u32;
    let one_minus_t = DenomFactor::OneMinusT.poly(d);
    let inner = DenomFactor::OneMinusTd1Y.poly(d);
    let mut num = BivariatePoly::zero();
    for (k, c) in pi.coeffs().iter().enumerate() {
        let k = k as u32;
        let term = &one_minus_t.pow(k) * &inner.pow(r - k);
        num = &num + &term.shift((r - k) as i64, 0).scale(c);
    }
    Ok(ClosedForm::new(num.shift(d as i64, 0), d)
        .with_factor(DenomFactor::OneMinusT, n)
        .with_factor(DenomFactor::OneMinusTdY, 1)
        .with_factor(DenomFactor::Tpow, r as i64)
        .with_factor(DenomFactor::OneMinusTd1Y, r as i64))
}

/// `(-1)^n a [ω^{-1}] (1 - a y)^{-1} s_{-ay}(T) · φ(mC_{-a^{-1} y^{-1}}(U ↪ V))`
/// with `a = t^d`, turned into Hilbert series by dividing by `(1 - t)^n`.
pub fn hodge_generating_function_via_mc(lat: &IntersectionLattice, truncation: usize) -> Result<YSeries, HodgeError> {
    require_divisor(lat)?;
    let n = lat.n();
    let d = lat.d() as i64;

    let mc = mc_complement(lat)?;
    let substituted = mc.substitute_y(-1, -d, -1);
    let dual = phi_involution(&substituted, n).to_yseries(truncation)?;

    let a = class_of_graded_free(-d, n).value;
    let omega_inv = class_of_graded_free(n as i64, n).value;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let prefactor = RatFunc::from_poly(&(&a * &omega_inv) * &LaurentPoly::constant(sign));

    let one_minus_ay = &BivariatePoly::one() - &BivariatePoly::from_laurent(&a).shift(0, 1);
    let geometric = one_minus_ay.to_yseries(truncation)?.invert()?;
    let tangent = s_y_graded(&vec![1; n], truncation).substitute_scaled_y(-1, d);

    let k_series = dual.mul(&geometric)?.mul(&tangent)?.scale(&prefactor);
    Ok(k_series.div_one_minus_t_pow(n as u32))
}

/// `H_{I_p}(t)`, the `y^p` coefficient of the closed form.
pub fn hilbert_series_of_ip(lat: &IntersectionLattice, p: usize) -> Result<RatFunc, HodgeError> {
    let h = hodge_generating_function(lat)?.to_yseries(p)?.coeff(p).clone();
    if let Some(lo) = h.numerator().min_exp() {
        if lo < 0 {
            return Err(PolyError::NegativeTail { lowest: lo }.into());
        }
    }
    Ok(h)
}

/// `t^d / (1-t)^n · π(A, t^{-1} - 1)`
pub fn multiplier_ideal_series(lat: &IntersectionLattice) -> Result<RatFunc, HodgeError> {
    require_divisor(lat)?;
    let pi = lat.poincare_polynomial();
    let num = pi.coeffs().iter().enumerate().fold(LaurentPoly::zero(), |acc, (k, c)| {
        &acc + &LaurentPoly::one_minus_t().pow(k as u32).shift(-(k as i64)).scale(c)
    });
    Ok(RatFunc::normalize(num.shift(lat.d() as i64), lat.n() as u32))
}

/// `(1 - t^d y)^{d-1} / ((1-t)^n (1-t^{d-1} y)^d)`
pub fn snc_closed_form(n: usize, d: usize) -> Result<ClosedForm, HodgeError> {
    if d < 1 || d > n {
        return Err(HodgeError::NotGeneralPosition { n, d });
    }
    Ok(ClosedForm::new(BivariatePoly::one(), d as u32)
        .with_factor(DenomFactor::OneMinusT, n as i64)
        .with_factor(DenomFactor::OneMinusTd1Y, d as i64)
        .with_factor(DenomFactor::OneMinusTdY, 1 - d as i64))
}

fn dims_of(series: &YSeries, p_max: usize, j_max: usize) -> Result<Vec<Vec<u64>>, HodgeError> {
    (0..=p_max)
        .into_par_iter()
        .map(|p| {
            series
                .coeff(p)
                .expand_t(j_max)?
                .into_iter()
                .enumerate()
                .map(|(j, v)| {
                    if v.is_negative() {
                        return Err(HodgeError::BadDimension { p, j, value: v });
                    }
                    v.to_u64().ok_or(HodgeError::BadDimension { p, j, value: v.clone() })
                })
                .collect()
        })
        .collect()
}

/// Entry `(p, j)` is `dim_C I_p(D)_j`.
pub fn dims_table(lat: &IntersectionLattice, p_max: usize, j_max: usize) -> Result<Vec<Vec<u64>>, HodgeError> {
    let series = hodge_generating_function(lat)?.to_yseries(p_max)?;
    dims_of(&series, p_max, j_max)
}

/// Closed form plus its expansion to `y^truncation`, and the dimension
/// table when `(p_max, j_max)` is given.
pub fn hodge_series(
    lat: &IntersectionLattice,
    truncation: usize,
    table: Option<(usize, usize)>,
) -> Result<HodgeSeriesResult, HodgeError> {
    let closed_form = hodge_generating_function(lat)?;
    let series = closed_form.to_yseries(truncation)?;
    let dims = match table {
        Some((p_max, j_max)) => {
            let s = if p_max == truncation { series.clone() } else { closed_form.to_yseries(p_max)? };
            Some(dims_of(&s, p_max, j_max)?)
        }
        None => None,
    };
    Ok(HodgeSeriesResult { closed_form, series, dims })
}

/// `H_{I_p}(t) - t^d H_{I_{p-1}}(t)` for `p >= 1`.
pub fn filtration_shift_difference(series: &YSeries, d: usize, p: usize) -> RatFunc {
    assert!(p >= 1 && p <= series.truncation());
    series.coeff(p).sub(&series.coeff(p - 1).mul_poly(&LaurentPoly::t_pow(d as i64)))
}
