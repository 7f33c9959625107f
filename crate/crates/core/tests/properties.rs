use std::collections::BTreeSet;

use arrhodge::arrangement::{build_lattice, deletion_restriction, Arrangement, Hyperplane, DEFAULT_MAX_FLATS};
use arrhodge::hodge::{hodge_generating_function, hodge_generating_function_via_mc, multiplier_ideal_series};
use arrhodge::ktheory::{
    grothendieck_class_complement, lambda_y_graded, mc_complement, mc_complement_by_flats, mc_from_eta_poly,
    phi_involution, s_y_graded,
};
use arrhodge::oracles::{flat_ideals, intersection_dims, multiplier_oracle_dims, FlatIdeal};
use arrhodge::{BivariatePoly, IntersectionLattice, LaurentPoly, RatFunc, YSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn polynomial() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((0i64..=4, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (polynomial(), 0u32..4).prop_map(|(p, e)| RatFunc::normalize(p, e))
}

fn bivariate() -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec((-3i64..=3, -2i64..=2, -4i64..=4), 0..6).prop_map(BivariatePoly::from_terms)
}

fn yseries(trunc: usize) -> impl Strategy<Value = YSeries> {
    prop::collection::vec(ratfunc(), trunc + 1).prop_map(move |c| YSeries::new(trunc, c))
}

/// Random central arrangement in dimension `1..=3` with small normals.
fn arrangement() -> impl Strategy<Value = Arrangement> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, n), 1..6).prop_map(move |rows| {
            let mut seen = BTreeSet::new();
            let hyps: Vec<Hyperplane> = rows
                .iter()
                .filter_map(|r| Hyperplane::from_integers(r).ok())
                .filter(|h| seen.insert(h.clone()))
                .collect();
            Arrangement::new(n, hyps).unwrap()
        })
    })
    .prop_filter("need a hyperplane", |a| a.d() > 0)
}

fn lattice(arr: &Arrangement) -> IntersectionLattice {
    build_lattice(arr, DEFAULT_MAX_FLATS).unwrap()
}

fn flat_profile(lat: &IntersectionLattice) -> Vec<(usize, usize, BigInt)> {
    let mut v: Vec<_> =
        lat.flats().iter().zip(lat.mu_values()).map(|(f, m)| (f.codim(), f.multiplicity(), m.clone())).collect();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn normalize_is_canonical(p in polynomial(), e in 0u32..4, k in 0u32..3) {
        let a = RatFunc::normalize(p.clone(), e);
        let b = RatFunc::normalize(&p * &LaurentPoly::one_minus_t().pow(k), e + k);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(RatFunc::normalize(a.numerator().clone(), a.onemtpow()), a.clone());
        if a.onemtpow() > 0 {
            prop_assert!(a.numerator().div_one_minus_t().is_none());
        }
    }

    #[test]
    fn expansion_is_multiplicative(a in ratfunc(), b in ratfunc()) {
        let j = 10;
        let ea = a.expand_t(j).unwrap();
        let eb = b.expand_t(j).unwrap();
        let eab = a.mul(&b).expand_t(j).unwrap();
        for k in 0..=j {
            let conv: BigInt = (0..=k).map(|i| &ea[i] * &eb[k - i]).sum();
            prop_assert_eq!(&eab[k], &conv);
        }
        let esum = a.add(&b).expand_t(j).unwrap();
        for k in 0..=j {
            prop_assert_eq!(&esum[k], &(&ea[k] + &eb[k]));
        }
    }

    #[test]
    fn yseries_ring(a in yseries(4), b in yseries(4), c in yseries(4)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        let lhs = a.add(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn yseries_inverse(tail in yseries(5), sign in prop::bool::ANY, k in -3i64..=3, m in 0u32..3) {
        let unit = RatFunc::from_poly(LaurentPoly::monomial(if sign { 1 } else { -1 }, k))
            .mul(&RatFunc::from_poly(LaurentPoly::one_minus_t().pow(m)));
        let mut coeffs = tail.coeffs().to_vec();
        coeffs[0] = unit;
        let s = YSeries::new(5, coeffs);
        prop_assert!(s.mul(&s.invert().unwrap()).unwrap().is_one());
    }

    #[test]
    fn phi_is_additive_involution(a in bivariate(), b in bivariate(), n in 0usize..5) {
        prop_assert_eq!(phi_involution(&phi_involution(&a, n), n), a.clone());
        prop_assert_eq!(phi_involution(&(&a + &b), n), &phi_involution(&a, n) + &phi_involution(&b, n));
    }

    #[test]
    fn lambda_times_s_is_one(degs in prop::collection::vec(-3i64..=3, 0..=5)) {
        let lambda = lambda_y_graded(&degs).to_yseries(8).unwrap();
        prop_assert!(lambda.mul(&s_y_graded(&degs, 8)).unwrap().is_one());
    }

    #[test]
    fn lattice_is_order_independent(arr in arrangement(), seed in any::<u64>()) {
        let d = arr.d();
        let mut order: Vec<usize> = (0..d).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..d).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = lattice(&arr);
        let b = lattice(&arr.permuted(&order));
        prop_assert_eq!(a.poincare_polynomial(), b.poincare_polynomial());
        prop_assert_eq!(flat_profile(&a), flat_profile(&b));
    }

    #[test]
    fn mobius_axioms(arr in arrangement()) {
        let lat = lattice(&arr);
        prop_assert!(lat.verify_mobius());
        let m = lat.mobius_matrix();
        prop_assert_eq!(&m[0][..], lat.mu_values());
        // the dual recursion sums over the lower end of each interval
        for a in 0..lat.len() {
            for b in 0..lat.len() {
                if a != b && lat.leq(a, b) {
                    let s: BigInt = (0..lat.len()).filter(|&u| lat.leq(a, u) && lat.leq(u, b)).map(|u| m[u][b].clone()).sum();
                    prop_assert_eq!(s, BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn deletion_restriction_holds(arr in arrangement(), pick in any::<prop::sample::Index>()) {
        let h = pick.index(arr.d());
        let (del, res) = deletion_restriction(&arr, h).unwrap();
        let pi = lattice(&arr).poincare_polynomial();
        let rhs = &lattice(&del).poincare_polynomial() + &(&arrhodge::IntPoly::x() * &lattice(&res).poincare_polynomial());
        prop_assert_eq!(pi.clone(), rhs);
        prop_assert!(pi.div_one_plus_x().is_some());
    }

    #[test]
    fn complement_class(arr in arrangement()) {
        let lat = lattice(&arr);
        let n = lat.n();
        let mc = mc_complement(&lat).unwrap();
        prop_assert_eq!(&mc, &mc_from_eta_poly(&grothendieck_class_complement(&lat), n));
        prop_assert_eq!(&mc, &mc_complement_by_flats(&lat));
        prop_assert_eq!(mc.eval_t_one(), (&LaurentPoly::one() + &LaurentPoly::t_pow(1)).pow(n as u32));
        prop_assert!(mc.eval_y_minus_one().is_zero());
    }

    #[test]
    fn two_routes_agree(arr in arrangement()) {
        let lat = lattice(&arr);
        let closed = hodge_generating_function(&lat).unwrap();
        prop_assert_eq!(closed.to_yseries(3).unwrap(), hodge_generating_function_via_mc(&lat, 3).unwrap());
        prop_assert_eq!(closed.at_y_zero().unwrap(), multiplier_ideal_series(&lat).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplier_oracle_matches_series(arr in arrangement()) {
        let lat = lattice(&arr);
        let j = if lat.n() == 3 { 4 } else { 6 };
        let oracle = multiplier_oracle_dims(&lat, j).unwrap();
        let series: Vec<u64> = multiplier_ideal_series(&lat).unwrap().expand_t(j).unwrap()
            .iter().map(|v| u64::try_from(v).unwrap()).collect();
        prop_assert_eq!(oracle, series);
    }

    #[test]
    fn multiplier_oracle_ignores_basis(arr in arrangement(), c in -3i64..=3) {
        let lat = lattice(&arr);
        let j = if lat.n() == 3 { 4 } else { 6 };
        let ideals = flat_ideals(&lat);
        // f_0 -> f_0 + c f_last and reverse the rest: still a basis of the same span
        let changed: Vec<FlatIdeal> = ideals.iter().map(|ideal| {
            let mut forms = ideal.forms.clone();
            let last = forms.len() - 1;
            if last > 0 {
                let extra: Vec<BigRational> = forms[last].iter().map(|x| x * BigRational::from_integer(c.into())).collect();
                for (a, b) in forms[0].iter_mut().zip(extra) {
                    *a += b;
                }
            }
            forms.reverse();
            FlatIdeal { forms, exponent: ideal.exponent }
        }).collect();
        prop_assert_eq!(intersection_dims(lat.n(), &ideals, j), intersection_dims(lat.n(), &changed, j));
    }
}
