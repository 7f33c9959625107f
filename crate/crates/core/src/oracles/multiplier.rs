//! Graded dimensions of `∩_W I_W^{e_W}` with `e_W = max(0, a_W - codim W)`,
//! where `I_W` is the ideal of the flat `W` and `a_W` counts the hyperplanes
//! through it. Each graded piece is computed by exact rank over the
//! rationals in the monomial basis.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::OracleError;
use crate::arrangement::IntersectionLattice;
use crate::linalg::{to_rational, Rref};

type Monomial = Vec<u32>;
type Poly = BTreeMap<Monomial, BigRational>;

/// The power `I^exponent` of the ideal generated by the linear `forms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatIdeal {
    pub forms: Vec<Vec<BigRational>>,
    pub exponent: usize,
}

/// Flat ideals with a positive exponent; flats with `e_W = 0` impose nothing.
pub fn flat_ideals(lat: &IntersectionLattice) -> Vec<FlatIdeal> {
    lat.flats()
        .iter()
        .filter(|f| f.codim() >= 1)
        .filter_map(|f| {
            let e = f.multiplicity().saturating_sub(f.codim());
            (e > 0).then(|| FlatIdeal {
                forms: f.basis_of_normals().iter().map(|r| to_rational(r)).collect(),
                exponent: e,
            })
        })
        .collect()
}

/// All exponent vectors of total degree `deg` in `n` variables, lex order.
pub fn monomials(n: usize, deg: u32) -> Vec<Monomial> {
    if n == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials(n - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn linear(form: &[BigRational]) -> Poly {
    let n = form.len();
    form.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mut m = vec![0; n];
            m[i] = 1;
            (m, c.clone())
        })
        .collect()
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Products of `e` forms, one per multiset of form indices.
fn form_products(forms: &[Vec<BigRational>], e: usize, n: usize) -> Vec<Poly> {
    fn rec(forms: &[Poly], start: usize, left: usize, acc: &Poly, out: &mut Vec<Poly>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..forms.len() {
            rec(forms, i, left - 1, &mul(acc, &forms[i]), out);
        }
    }
    let lin: Vec<Poly> = forms.iter().map(|f| linear(f)).collect();
    let one: Poly = [(vec![0; n], BigRational::one())].into_iter().collect();
    let mut out = Vec::new();
    rec(&lin, 0, e, &one, &mut out);
    out
}

/// Linear equations cutting out `(I^e)_j` inside `S_j`.
fn equations(ideal: &FlatIdeal, n: usize, j: u32, basis: &[Monomial], index: &HashMap<Monomial, usize>) -> Vec<Vec<BigRational>> {
    let e = ideal.exponent as u32;
    if e > j {
        // the piece is zero: every coordinate vanishes
        return (0..basis.len())
            .map(|k| {
                let mut v = vec![BigRational::zero(); basis.len()];
                v[k] = BigRational::one();
                v
            })
            .collect();
    }
    let cofactors = monomials(n, j - e);
    let mut span = Vec::new();
    for g in form_products(&ideal.forms, ideal.exponent, n) {
        for m in &cofactors {
            let mut v = vec![BigRational::zero(); basis.len()];
            for (mono, c) in &g {
                let shifted: Monomial = mono.iter().zip(m).map(|(a, b)| a + b).collect();
                v[index[&shifted]] += c;
            }
            span.push(v);
        }
    }
    Rref::new(span, basis.len()).nullspace()
}

/// `dim (∩ ideals)_j` for `0 <= j <= j_max`.
pub fn intersection_dims(n: usize, ideals: &[FlatIdeal], j_max: usize) -> Vec<u64> {
    (0..=j_max as u32)
        .into_par_iter()
        .map(|j| {
            let basis = monomials(n, j);
            let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            let eqs: Vec<Vec<BigRational>> =
                ideals.iter().flat_map(|ideal| equations(ideal, n, j, &basis, &index)).collect();
            (basis.len() - Rref::new(eqs, basis.len()).rank()) as u64
        })
        .collect()
}

/// Dimensions of the multiplier ideal `I((1 - ε) D)` in degrees `0..=j_max`.
pub fn multiplier_oracle_dims(lat: &IntersectionLattice, j_max: usize) -> Result<Vec<u64>, OracleError> {
    if lat.d() == 0 {
        return Err(OracleError::EmptyDivisor);
    }
    Ok(intersection_dims(lat.n(), &flat_ideals(lat), j_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_lattice, builtin_family, Family, DEFAULT_MAX_FLATS};

    fn lat(f: Family) -> IntersectionLattice {
        build_lattice(&builtin_family(f).unwrap(), DEFAULT_MAX_FLATS).unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(2, 4).len(), 5);
        assert_eq!(monomials(3, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn maximal_ideal_for_three_lines() {
        let l = lat(Family::ConcurrentLines(3));
        assert_eq!(flat_ideals(&l).len(), 1);
        assert_eq!(multiplier_oracle_dims(&l, 5).unwrap(), vec![0, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn squared_maximal_ideal_for_four_lines() {
        let l = lat(Family::ConcurrentLines(4));
        assert_eq!(multiplier_oracle_dims(&l, 5).unwrap(), vec![0, 0, 3, 4, 5, 6]);
    }

    #[test]
    fn boolean_is_trivial() {
        let l = lat(Family::Boolean(3));
        assert!(flat_ideals(&l).is_empty());
        assert_eq!(multiplier_oracle_dims(&l, 4).unwrap(), vec![1, 3, 6, 10, 15]);
    }

    #[test]
    fn braid_line_ideal() {
        let l = lat(Family::Braid(3));
        assert_eq!(multiplier_oracle_dims(&l, 3).unwrap(), vec![0, 2, 5, 9]);
    }
}
