//! `C^*`-equivariant K-theory of affine space, identified with `Z[t, t^-1]`
//! by sending a graded module `M` to `(1 - t)^n H_M(t)`. The free module
//! `S(q)` has class `t^-q`.
//!
//! Classes carrying a `y` are polynomials (λ-classes, motivic Chern classes)
//! or truncated series (s-classes and inverses); see [`KClassY`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arrangement::IntersectionLattice;
use crate::exact_poly::{BivariatePoly, LaurentPoly, PolyError, RatFunc, YSeries};

/// An element of `K_0^T(A^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    pub value: LaurentPoly,
    pub n: usize,
}

/// A `y`-dependent class, either polynomial or truncated series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KClassY {
    Poly(BivariatePoly),
    Series(YSeries),
}

impl KClassY {
    /// Series form at the given truncation; lossless for polynomials whose
    /// `y`-degree does not exceed it.
    pub fn to_series(&self, truncation: usize) -> Result<YSeries, PolyError> {
        match self {
            KClassY::Poly(p) => p.to_yseries(truncation),
            KClassY::Series(s) if s.truncation() == truncation => Ok(s.clone()),
            KClassY::Series(s) => Err(PolyError::TruncationMismatch(s.truncation(), truncation)),
        }
    }

    pub fn mul(&self, rhs: &KClassY, truncation: usize) -> Result<KClassY, PolyError> {
        match (self, rhs) {
            (KClassY::Poly(a), KClassY::Poly(b)) => Ok(KClassY::Poly(a * b)),
            _ => Ok(KClassY::Series(self.to_series(truncation)?.mul(&rhs.to_series(truncation)?)?)),
        }
    }
}

impl From<BivariatePoly> for KClassY {
    fn from(p: BivariatePoly) -> Self {
        KClassY::Poly(p)
    }
}

impl From<YSeries> for KClassY {
    fn from(s: YSeries) -> Self {
        KClassY::Series(s)
    }
}

/// A class `Σ c_i η^i` in the Grothendieck group of varieties over `V`,
/// where `η` is the class of a hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaPoly {
    pub coeffs: Vec<BigInt>,
}

/// `[S(q)] = t^{-q}`
pub fn class_of_graded_free(q: i64, n: usize) -> KClass {
    KClass { value: LaurentPoly::t_pow(-q), n }
}

/// `λ_y` of `⊕ S(q_i)`: the product of `(1 + t^{-q_i} y)`.
pub fn lambda_y_graded(degrees: &[i64]) -> BivariatePoly {
    degrees.iter().fold(BivariatePoly::one(), |acc, &q| &acc * &BivariatePoly::one_plus(1, -q))
}

/// `s_y` of `⊕ S(q_i)`: coefficient of `y^i` is `(-1)^i [Sym^i]`, accumulated
/// as a product of the single-summand series `Σ_i (-1)^i t^{-iq} y^i`.
pub fn s_y_graded(degrees: &[i64], truncation: usize) -> YSeries {
    degrees.iter().fold(YSeries::one(truncation), |acc, &q| {
        let single = YSeries::from_laurent_coeffs(
            truncation,
            (0..=truncation as i64).map(|i| LaurentPoly::monomial(if i % 2 == 0 { 1 } else { -1 }, -q * i)),
        );
        acc.mul(&single).expect("equal truncations")
    })
}

/// The duality involution `P(t, y) -> (-1)^n t^n P(t^-1, y^-1)`.
pub fn phi_involution(p: &BivariatePoly, n: usize) -> BivariatePoly {
    let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
    p.map_terms(|c, a, b| (c * &sign, n as i64 - a, -b))
}

/// `mC_y` of a linear subspace of dimension `m`: `(1 - t)^{n-m} (1 + t y)^m`.
pub fn mc_linear_subspace(n: usize, m: usize) -> BivariatePoly {
    assert!(m <= n, "subspace dimension exceeds ambient dimension");
    let one_minus_t = BivariatePoly::from_laurent(&LaurentPoly::one_minus_t());
    &one_minus_t.pow((n - m) as u32) * &BivariatePoly::one_plus(1, 1).pow(m as u32)
}

/// `[U ↪ V] = π(A, -η)`
pub fn grothendieck_class_complement(lat: &IntersectionLattice) -> EtaPoly {
    EtaPoly { coeffs: lat.poincare_polynomial().negate_variable().coeffs().to_vec() }
}

/// Sends `η^i` to `(1 - t)^i (1 + t y)^{n-i}`.
pub fn mc_from_eta_poly(ep: &EtaPoly, n: usize) -> BivariatePoly {
    ep.coeffs.iter().enumerate().fold(BivariatePoly::zero(), |acc, (i, c)| {
        &acc + &mc_linear_subspace(n, n - i).scale(c)
    })
}

/// `(1 - t)^n χ(A, (1 + t y)/(1 - t))`, evaluated by Horner's rule with
/// rational-function coefficients; every `(1 - t)` denominator must cancel.
pub fn mc_complement(lat: &IntersectionLattice) -> Result<BivariatePoly, PolyError> {
    let n = lat.n();
    let chi = lat.char_polynomial();
    // X = (1 + t y)/(1 - t) as a polynomial in y of degree 1
    let x = YSeries::new(
        n,
        [RatFunc::normalize(LaurentPoly::one(), 1), RatFunc::normalize(LaurentPoly::t_pow(1), 1)],
    );
    let mut acc = YSeries::zero(n);
    for c in chi.coeffs().iter().rev() {
        acc = acc.mul(&x)?.add(&YSeries::constant(n, RatFunc::from_poly(LaurentPoly::constant(c.clone()))))?;
    }
    let scaled = acc.scale(&RatFunc::from_poly(LaurentPoly::one_minus_t().pow(n as u32)));
    let mut out = BivariatePoly::zero();
    for (b, coeff) in scaled.coeffs().iter().enumerate() {
        let p = coeff
            .as_poly()
            .ok_or_else(|| PolyError::OutsideRationalClass(format!("uncancelled denominator in mC: {coeff}")))?;
        for (a, v) in p.terms() {
            out = &out + &BivariatePoly::monomial(v.clone(), a, b as i64);
        }
    }
    Ok(out)
}

/// `Σ_W mu(W) mC(W ↪ V)`: the complement class assembled flat by flat,
/// since `π(A, -η) = Σ_W mu(W) η^codim(W)` and `η^c` is a codim-`c` subspace.
pub fn mc_complement_by_flats(lat: &IntersectionLattice) -> BivariatePoly {
    let n = lat.n();
    lat.flats().iter().zip(lat.mu_values()).fold(BivariatePoly::zero(), |acc, (f, m)| {
        if m.is_zero() {
            return acc;
        }
        &acc + &mc_linear_subspace(n, n - f.codim()).scale(m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_lattice, Arrangement, DEFAULT_MAX_FLATS};

    fn lattice(n: usize, rows: &[&[i64]]) -> IntersectionLattice {
        build_lattice(&Arrangement::from_integer_rows(n, rows).unwrap(), DEFAULT_MAX_FLATS).unwrap()
    }

    #[test]
    fn free_module_classes() {
        assert_eq!(class_of_graded_free(0, 2).value, LaurentPoly::one());
        assert_eq!(class_of_graded_free(-3, 2).value, LaurentPoly::t_pow(3));
        assert_eq!(class_of_graded_free(2, 2).value, LaurentPoly::t_pow(-2));
    }

    #[test]
    fn lambda_classes() {
        assert_eq!(lambda_y_graded(&[-1, -1, -1]), BivariatePoly::one_plus(1, 1).pow(3));
        assert_eq!(lambda_y_graded(&[]), BivariatePoly::one());
        assert_eq!(
            lambda_y_graded(&[1, -1]),
            &BivariatePoly::one_plus(1, -1) * &BivariatePoly::one_plus(1, 1)
        );
    }

    #[test]
    fn s_classes() {
        let p = 6;
        let s = s_y_graded(&[1, 1], p);
        let inv = BivariatePoly::one_plus(1, -1).pow(2).to_yseries(p).unwrap().invert().unwrap();
        assert_eq!(s, inv);
        // y -> -t^d y turns 1/(1 + t^-1 y)^n into 1/(1 - t^{d-1} y)^n
        let d = 3;
        let sub = s.substitute_scaled_y(-1, d);
        let want = BivariatePoly::one_plus(-1, d - 1).pow(2).to_yseries(p).unwrap().invert().unwrap();
        assert_eq!(sub, want);
        assert!(s_y_graded(&[], p).is_one());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_involution(&BivariatePoly::one(), 2), BivariatePoly::monomial(1, 2, 0));
        let m = BivariatePoly::monomial(1, -4, 3);
        assert_eq!(phi_involution(&m, 3), BivariatePoly::monomial(-1, 7, -3));
        assert_eq!(phi_involution(&phi_involution(&m, 3), 3), m);
    }

    #[test]
    fn subspace_classes() {
        assert_eq!(mc_linear_subspace(3, 3), BivariatePoly::one_plus(1, 1).pow(3));
        assert_eq!(mc_linear_subspace(3, 0), BivariatePoly::from_laurent(&LaurentPoly::one_minus_t().pow(3)));
        // C^* inside C: (1 + t y) - (1 - t) = t (1 + y)
        let diff = &mc_linear_subspace(1, 1) - &mc_linear_subspace(1, 0);
        assert_eq!(diff, BivariatePoly::from_terms([(1, 0, 1), (1, 1, 1)]));
    }

    #[test]
    fn eta_classes() {
        let single = lattice(2, &[&[1, 0]]);
        assert_eq!(grothendieck_class_complement(&single).coeffs, vec![BigInt::from(1), BigInt::from(-1)]);
        let boolean = lattice(2, &[&[1, 0], &[0, 1]]);
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(grothendieck_class_complement(&boolean).coeffs, ints(&[1, -2, 1]));
        let conc = lattice(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(grothendieck_class_complement(&conc).coeffs, ints(&[1, -3, 2]));
    }

    #[test]
    fn eta_to_mc() {
        let one = EtaPoly { coeffs: vec![BigInt::from(1)] };
        assert_eq!(mc_from_eta_poly(&one, 2), BivariatePoly::one_plus(1, 1).pow(2));
        let ep = EtaPoly { coeffs: vec![BigInt::from(1), BigInt::from(-1)] };
        assert_eq!(mc_from_eta_poly(&ep, 1), BivariatePoly::from_terms([(1, 0, 1), (1, 1, 1)]));
        let top = EtaPoly { coeffs: vec![0.into(), 0.into(), 1.into()] };
        assert_eq!(mc_from_eta_poly(&top, 2), mc_linear_subspace(2, 0));
    }

    #[test]
    fn complement_classes() {
        // boolean(3): t^3 (1 + y)^3
        let b3 = lattice(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let want = BivariatePoly::from_terms([(1, 0, 1), (1, 1, 1)]).pow(3);
        assert_eq!(mc_complement(&b3).unwrap(), want);

        let empty = build_lattice(&Arrangement::empty(2), DEFAULT_MAX_FLATS).unwrap();
        assert_eq!(mc_complement(&empty).unwrap(), BivariatePoly::one_plus(1, 1).pow(2));

        let conc = lattice(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let a = BivariatePoly::one_plus(1, 1);
        let b = BivariatePoly::from_laurent(&LaurentPoly::one_minus_t());
        let want = &(&a.pow(2) - &(&a * &b).scale(&BigInt::from(3))) + &b.pow(2).scale(&BigInt::from(2));
        assert_eq!(mc_complement(&conc).unwrap(), want);
        assert_eq!(mc_complement_by_flats(&conc), want);
    }
}
