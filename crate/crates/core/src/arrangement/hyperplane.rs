use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::ArrangementError;
use crate::linalg::{primitive_integer_row, to_rational};

/// A linear hyperplane, stored by its primitive integer normal vector whose
/// first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
}

impl Hyperplane {
    pub fn from_integers(v: &[i64]) -> Result<Self, ArrangementError> {
        canonicalize_hyperplane(&to_rational(&v.iter().map(|&x| x.into()).collect::<Vec<BigInt>>()))
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn normal_rational(&self) -> Vec<BigRational> {
        to_rational(&self.normal)
    }
}

/// Clears denominators, divides by the content and fixes the sign.
pub fn canonicalize_hyperplane(raw: &[BigRational]) -> Result<Hyperplane, ArrangementError> {
    if raw.iter().all(Zero::is_zero) {
        return Err(ArrangementError::ZeroNormal);
    }
    Ok(Hyperplane { normal: primitive_integer_row(raw) })
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.normal.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A central arrangement of distinct hyperplanes in an `n`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Validates dimensions and rejects repeated hyperplanes.
    pub fn new(n: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self, ArrangementError> {
        let mut seen: HashMap<&Hyperplane, usize> = HashMap::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != n {
                return Err(ArrangementError::DimensionMismatch { expected: n, got: h.dim() });
            }
            if let Some(j) = seen.insert(h, i) {
                return Err(ArrangementError::DuplicateHyperplane(j, i));
            }
        }
        Ok(Self { n, hyperplanes })
    }

    pub fn from_integer_rows(n: usize, rows: &[&[i64]]) -> Result<Self, ArrangementError> {
        let hs = rows.iter().map(|r| Hyperplane::from_integers(r)).collect::<Result<_, _>>()?;
        Self::new(n, hs)
    }

    pub fn empty(n: usize) -> Self {
        Self { n, hyperplanes: Vec::new() }
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperplanes.
    pub fn d(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Same hyperplanes in a different order.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self { n: self.n, hyperplanes: order.iter().map(|&i| self.hyperplanes[i].clone()).collect() }
    }
}
