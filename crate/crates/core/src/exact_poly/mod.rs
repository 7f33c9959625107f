//! Exact arithmetic kernel: Laurent polynomials in `t`, rational functions
//! with `(1 - t)`-power denominators, truncated `y`-series, bivariate
//! polynomials and factored closed forms. Nothing here ever rounds.

mod bivariate;
mod closed_form;
pub mod format;
mod intpoly;
mod laurent;
mod ratfunc;
mod yseries;

pub use bivariate::BivariatePoly;
pub use closed_form::{ClosedForm, DenomFactor};
pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;
pub use yseries::YSeries;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("series truncations differ ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("constant coefficient is zero; series is not invertible")]
    ZeroConstantTerm,
    #[error("value {0} has no inverse of the form numerator/(1-t)^e")]
    OutsideRationalClass(String),
    #[error("expansion has a term of negative degree t^{lowest}")]
    NegativeTail { lowest: i64 },
    #[error("polynomial has a pole of order {order} in y")]
    PoleInY { order: i64 },
    #[error("closed form is not a power series in y")]
    NotPowerSeries,
    #[error("closed forms use different d ({0} vs {1})")]
    DegreeMismatch(u32, u32),
}

/// Shorthand for `ratfunc_normalize`.
pub fn ratfunc_normalize(num: LaurentPoly, e: u32) -> RatFunc {
    RatFunc::normalize(num, e)
}
