use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{Arrangement, ArrangementError};
use crate::exact_poly::IntPoly;
use crate::linalg::Rref;

pub const DEFAULT_MAX_FLATS: usize = 100_000;

/// Fixed-width set of hyperplane indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct IndexSet(Vec<u64>);

impl IndexSet {
    fn new(d: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut words = vec![0u64; d.div_ceil(64)];
        for i in members {
            words[i / 64] |= 1 << (i % 64);
        }
        Self(words)
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// A flat of the arrangement, identified by the canonical basis of the span
/// of normals of the hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    basis: Vec<Vec<BigInt>>,
    hyperplanes: Vec<usize>,
    set: IndexSet,
}

impl Flat {
    /// Primitive integer rows of the RREF of the normal span. These are
    /// `codim` independent linear forms cutting out the flat.
    pub fn basis_of_normals(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn codim(&self) -> usize {
        self.basis.len()
    }

    /// Indices of the hyperplanes containing the flat.
    pub fn contained_hyperplanes(&self) -> &[usize] {
        &self.hyperplanes
    }

    /// Number of hyperplanes containing the flat.
    pub fn multiplicity(&self) -> usize {
        self.hyperplanes.len()
    }
}

/// The poset of flats ordered by reverse inclusion, with Möbius values
/// `mu(W) = mu(V, W)`.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    n: usize,
    d: usize,
    flats: Vec<Flat>,
    mu: Vec<BigInt>,
}

/// Builds the lattice by closure from `V`, failing once more than
/// `max_flats` flats are found.
pub fn build_lattice(arr: &Arrangement, max_flats: usize) -> Result<IntersectionLattice, ArrangementError> {
    let n = arr.n();
    let d = arr.d();
    let normals: Vec<_> = arr.hyperplanes().iter().map(|h| h.normal_rational()).collect();

    let make_flat = |rref: &Rref| {
        let hyperplanes: Vec<usize> = (0..d).filter(|&i| rref.contains(&normals[i])).collect();
        Flat { basis: rref.canonical_integer_rows(), set: IndexSet::new(d, hyperplanes.iter().copied()), hyperplanes }
    };

    let root = Rref::empty(n);
    let mut flats = vec![make_flat(&root)];
    if flats.len() > max_flats {
        return Err(ArrangementError::FlatLimit(max_flats));
    }
    let mut layer = vec![root];
    let mut layer_flats = vec![0usize];

    while !layer.is_empty() {
        let candidates: Vec<(Vec<Vec<BigInt>>, Rref)> = layer
            .par_iter()
            .zip(layer_flats.par_iter())
            .flat_map_iter(|(rref, &fi)| {
                let set = &flats[fi].set;
                (0..d)
                    .filter(move |&h| !set.contains(h))
                    .map(|h| {
                        let r = rref.with_row(normals[h].clone());
                        (r.canonical_integer_rows(), r)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let next: BTreeMap<Vec<Vec<BigInt>>, Rref> = candidates.into_iter().collect();
        if flats.len() + next.len() > max_flats {
            return Err(ArrangementError::FlatLimit(max_flats));
        }
        let new_flats: Vec<Flat> = next.values().collect::<Vec<_>>().par_iter().map(|r| make_flat(r)).collect();
        let start = flats.len();
        flats.extend(new_flats);
        layer_flats = (start..flats.len()).collect();
        layer = next.into_values().collect();
    }

    let mu = mobius_values(&flats);
    Ok(IntersectionLattice { n, d, flats, mu })
}

/// `mu(W) = -Σ_{Z < W} mu(Z)`, processed by increasing codimension.
fn mobius_values(flats: &[Flat]) -> Vec<BigInt> {
    let mut mu = vec![BigInt::zero(); flats.len()];
    let mut start = 0;
    while start < flats.len() {
        let c = flats[start].codim();
        let end = flats[start..].iter().position(|f| f.codim() != c).map_or(flats.len(), |k| start + k);
        let done = &mu[..start];
        let vals: Vec<BigInt> = flats[start..end]
            .par_iter()
            .map(|w| {
                if c == 0 {
                    return BigInt::one();
                }
                let s: BigInt = flats[..start]
                    .iter()
                    .zip(done)
                    .filter(|(z, _)| z.set.is_subset(&w.set))
                    .map(|(_, m)| m)
                    .sum();
                -s
            })
            .collect();
        mu[start..end].clone_from_slice(&vals);
        start = end;
    }
    mu
}

impl IntersectionLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Flats sorted by codimension, then by canonical basis; `flats()[0]` is `V`.
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn mu(&self, i: usize) -> &BigInt {
        &self.mu[i]
    }

    pub fn mu_values(&self) -> &[BigInt] {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// `Z ≤ W` in the lattice order, i.e. `W ⊆ Z` as subspaces.
    pub fn leq(&self, z: usize, w: usize) -> bool {
        self.flats[z].set.is_subset(&self.flats[w].set)
    }

    /// Index of the flat with the given canonical basis.
    pub fn find(&self, basis: &[Vec<BigInt>]) -> Option<usize> {
        self.flats.iter().position(|f| f.basis == basis)
    }

    /// Re-checks that every interval `[V, W]` with `W > V` has zero Möbius sum.
    pub fn verify_mobius(&self) -> bool {
        self.mu[0].is_one()
            && (1..self.len()).all(|w| {
                (0..self.len()).filter(|&z| self.leq(z, w)).map(|z| &self.mu[z]).sum::<BigInt>().is_zero()
            })
    }

    /// The full two-argument Möbius function, computed independently from the
    /// order relation alone. Quadratic memory; meant for small lattices.
    pub fn mobius_matrix(&self) -> Vec<Vec<BigInt>> {
        let k = self.len();
        let mut m = vec![vec![BigInt::zero(); k]; k];
        for a in 0..k {
            m[a][a] = BigInt::one();
            // flats are sorted by codim, so every Z strictly between a and b precedes b
            for b in 0..k {
                if b == a || !self.leq(a, b) {
                    continue;
                }
                let s: BigInt = (0..k)
                    .filter(|&z| z != b && self.leq(a, z) && self.leq(z, b))
                    .map(|z| m[a][z].clone())
                    .sum();
                m[a][b] = -s;
            }
        }
        m
    }

    /// `π(A, x) = Σ_W mu(W) (-x)^codim(W)`
    pub fn poincare_polynomial(&self) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.n + 1];
        for (f, m) in self.flats.iter().zip(&self.mu) {
            let c = f.codim();
            if c % 2 == 0 {
                coeffs[c] += m;
            } else {
                coeffs[c] -= m;
            }
        }
        IntPoly::new(coeffs)
    }

    /// `χ(A, x) = x^n π(A, -1/x)`
    pub fn char_polynomial(&self) -> IntPoly {
        let pi = self.poincare_polynomial();
        let mut coeffs = vec![BigInt::zero(); self.n + 1];
        for (k, c) in pi.coeffs().iter().enumerate() {
            coeffs[self.n - k] = if k % 2 == 0 { c.clone() } else { -c };
        }
        IntPoly::new(coeffs)
    }
}
