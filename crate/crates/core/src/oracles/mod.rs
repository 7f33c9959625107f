//! Brute-force verifiers that recompute Hodge-ideal dimensions without going
//! through the generating function.

mod multiplier;
mod snc;

pub use multiplier::{flat_ideals, intersection_dims, monomials, multiplier_oracle_dims, FlatIdeal};
pub use snc::{snc_fp_dimension, snc_ideal_dims, MonomialConstraint};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the arrangement has no hyperplanes, so there is no divisor")]
    EmptyDivisor,
}

/// Element-wise comparison of oracle and series dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub passed: bool,
    /// First index where the lists differ (or where the shorter one ends).
    pub first_mismatch: Option<usize>,
    pub compared: usize,
}

pub fn compare_with_series(oracle: &[u64], series: &[u64]) -> ComparisonReport {
    let first_mismatch = oracle
        .iter()
        .zip(series)
        .position(|(a, b)| a != b)
        .or_else(|| (oracle.len() != series.len()).then(|| oracle.len().min(series.len())));
    ComparisonReport { passed: first_mismatch.is_none(), first_mismatch, compared: oracle.len().min(series.len()) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparison() {
        assert!(compare_with_series(&[0, 2, 3], &[0, 2, 3]).passed);
        let r = compare_with_series(&[0, 2, 3, 4], &[0, 2, 7, 4]);
        assert_eq!((r.passed, r.first_mismatch), (false, Some(2)));
        assert_eq!(compare_with_series(&[1, 2], &[1]).first_mismatch, Some(1));
    }
}
