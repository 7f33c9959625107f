//! Exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Row = Vec<BigRational>;

/// Reduced row echelon form: nonzero rows only, each with a leading 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    rows: Vec<Row>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl Rref {
    /// Row-reduces the given rows, which must all have length `ncols`.
    pub fn new(rows: Vec<Row>, ncols: usize) -> Self {
        let mut m = rows;
        debug_assert!(m.iter().all(|r| r.len() == ncols));
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for v in m[r].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        Self { rows: m, pivots, ncols }
    }

    pub fn from_integer_rows(rows: &[Vec<BigInt>], ncols: usize) -> Self {
        Self::new(rows.iter().map(|r| to_rational(r)).collect(), ncols)
    }

    pub fn empty(ncols: usize) -> Self {
        Self { rows: Vec::new(), pivots: Vec::new(), ncols }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` against the rows; the result is zero iff `v` is in the row space.
    pub fn reduce(&self, v: &[BigRational]) -> Row {
        let mut out = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if out[c].is_zero() {
                continue;
            }
            let f = out[c].clone();
            for (o, rv) in out.iter_mut().zip(row) {
                *o -= &f * rv;
            }
        }
        out
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Whether this row space is contained in `other`'s.
    pub fn is_subspace_of(&self, other: &Rref) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Adds a row, returning the new reduced form.
    pub fn with_row(&self, v: Row) -> Self {
        let mut rows = self.rows.clone();
        rows.push(v);
        Self::new(rows, self.ncols)
    }

    /// Basis of `{x : A x = 0}` where `A` has these rows.
    pub fn nullspace(&self) -> Vec<Row> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![BigRational::zero(); self.ncols];
                x[f] = BigRational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }

    /// Rows scaled to primitive integer vectors with positive leading entry.
    /// Two row spaces are equal iff these matrices are identical.
    pub fn canonical_integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|r| primitive_integer_row(r)).collect()
    }
}

pub fn to_rational(v: &[BigInt]) -> Row {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

pub fn rank(rows: Vec<Row>, ncols: usize) -> usize {
    Rref::new(rows, ncols).rank()
}

/// Clears denominators, divides by the content and makes the first nonzero
/// entry positive. The zero vector maps to itself.
pub fn primitive_integer_row(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    let div = content * sign;
    ints.into_iter().map(|x| x / &div).collect()
}
