use std::collections::BTreeSet;

use aluffi_core::groebner::{buchberger, LiftData};
use aluffi_core::poly::int;
use aluffi_core::syzygy::syzygies;
use aluffi_core::{parse_polynomial, parse_polynomial_list, GroebnerBasis, Ideal, Monomial, MonomialOrder, Polynomial, RingContext};
use proptest::prelude::*;

fn ring() -> RingContext {
    RingContext::geometric(&["x", "y", "z"]).unwrap()
}

fn small_poly(max_terms: usize, max_deg: u16) -> impl Strategy<Value = Vec<([u16; 3], i64)>> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg, 0..=max_deg).prop_map(|(a, b, c)| [a, b, c]), -3i64..=3), 1..=max_terms)
}

fn build(r: &RingContext, t: &[([u16; 3], i64)]) -> Polynomial {
    Polynomial::from_terms(r, t.iter().map(|(e, c)| (Monomial::from_exponents(e), int(*c))))
}

fn gens(n: usize) -> impl Strategy<Value = Vec<Vec<([u16; 3], i64)>>> {
    prop::collection::vec(small_poly(3, 2), 1..=n)
}

fn as_set(gb: &GroebnerBasis) -> BTreeSet<String> {
    gb.elements().iter().map(|g| g.to_string()).collect()
}

// Monomial ideals as exponent vectors, checked by divisibility alone.

fn mono_ideal() -> impl Strategy<Value = Vec<[u16; 3]>> {
    prop::collection::vec((0u16..=3, 0u16..=3, 0u16..=3).prop_map(|(a, b, c)| [a, b, c]), 1..=4)
        .prop_filter("nonconstant", |v| v.iter().all(|e| e.iter().any(|&x| x > 0)))
}

fn divides(a: &[u16; 3], b: &[u16; 3]) -> bool {
    (0..3).all(|i| a[i] <= b[i])
}

fn in_mono(gens: &[[u16; 3]], m: &[u16; 3]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

fn mul(a: &[u16; 3], b: &[u16; 3], k: u16) -> [u16; 3] {
    [a[0] + k * b[0], a[1] + k * b[1], a[2] + k * b[2]]
}

fn mono_polys(r: &RingContext, gens: &[[u16; 3]]) -> Vec<Polynomial> {
    gens.iter().map(|e| Polynomial::monomial(r, Monomial::from_exponents(e), int(1))).collect()
}

fn grid(top: u16) -> Vec<[u16; 3]> {
    let mut out = Vec::new();
    for a in 0..=top {
        for b in 0..=top {
            for c in 0..=top {
                out.push([a, b, c]);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reduced_basis_ignores_generator_order(g in gens(3), seed in any::<u64>()) {
        let r = ring();
        let mut ps: Vec<Polynomial> = g.iter().map(|t| build(&r, t)).collect();
        let a = GroebnerBasis::compute(&r, &ps).unwrap();
        let n = ps.len();
        ps.rotate_left((seed as usize) % n);
        if seed % 2 == 0 {
            ps.reverse();
        }
        let b = GroebnerBasis::compute(&r, &ps).unwrap();
        prop_assert_eq!(as_set(&a), as_set(&b));
        prop_assert!(a.is_reduced() && a.satisfies_buchberger_criterion());
    }

    #[test]
    fn monomial_operations_match_divisibility(i in mono_ideal(), j in mono_ideal()) {
        let r = ring();
        let ii = Ideal::new(&r, mono_polys(&r, &i)).unwrap();
        let jj = Ideal::new(&r, mono_polys(&r, &j)).unwrap();
        let meet = ii.intersect(&jj).unwrap();
        let quot = ii.quotient(&jj).unwrap();
        let (sat, _) = ii.saturate(&jj).unwrap();
        for m in grid(4) {
            let p = Polynomial::monomial(&r, Monomial::from_exponents(&m), int(1));
            prop_assert_eq!(meet.contains(&p).unwrap(), in_mono(&i, &m) && in_mono(&j, &m));
            prop_assert_eq!(quot.contains(&p).unwrap(), j.iter().all(|g| in_mono(&i, &mul(&m, g, 1))));
            // Exponents of I are at most 3, so g^4 suffices.
            prop_assert_eq!(sat.contains(&p).unwrap(), j.iter().all(|g| in_mono(&i, &mul(&m, g, 4))));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn normal_form_is_idempotent_and_linear(g in gens(3), f in small_poly(4, 3), h in small_poly(4, 3), c in -4i64..=4) {
        let r = ring();
        let ps: Vec<Polynomial> = g.iter().map(|t| build(&r, t)).collect();
        let gb = GroebnerBasis::compute(&r, &ps).unwrap();
        let (f, h) = (build(&r, &f), build(&r, &h));
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.contains(&(&f - &nf)));
        let comb = &f.scale(&int(c)) + &h;
        prop_assert_eq!(gb.normal_form(&comb), &nf.scale(&int(c)) + &gb.normal_form(&h));
        // No term of the remainder is divisible by a leading monomial.
        let lead = gb.leading_monomials();
        prop_assert!(nf.terms().iter().all(|(m, _)| lead.iter().all(|l| !l.divides(m))));
    }

    #[test]
    fn lift_reproduces_members(g in gens(3), coeffs in prop::collection::vec(small_poly(2, 1), 3)) {
        let r = ring();
        let ps: Vec<Polynomial> = g.iter().map(|t| build(&r, t)).collect();
        let mut f = Polynomial::zero(&r);
        for (p, c) in ps.iter().zip(&coeffs) {
            f = &f + &(p * &build(&r, c));
        }
        let lift = LiftData::new(&r, &ps).unwrap();
        let c = lift.lift(&f).unwrap();
        let mut back = Polynomial::zero(&r);
        for (p, ci) in ps.iter().zip(&c) {
            back = &back + &(p * ci);
        }
        prop_assert_eq!(back, f);
    }

    #[test]
    fn syzygy_columns_annihilate_and_cut_out_the_colon(g in gens(3)) {
        let r = ring();
        let ps: Vec<Polynomial> = g.iter().map(|t| build(&r, t)).collect();
        prop_assume!(ps.iter().all(|p| !p.is_zero()));
        let phi = syzygies(&r, &ps).unwrap();
        for col in phi.columns() {
            let mut s = Polynomial::zero(&r);
            for (p, c) in ps.iter().zip(&col) {
                s = &s + &(p * c);
            }
            prop_assert!(s.is_zero());
        }
        if ps.len() >= 2 {
            let firsts: Vec<Polynomial> = phi.columns().iter().map(|c| c[0].clone()).collect();
            let first_ideal = Ideal::new(&r, firsts).unwrap();
            // The first entries of syzygies form (g_2, ..., g_n) : g_1.
            let others = Ideal::new(&r, ps[1..].to_vec()).unwrap();
            let expected = others.quotient_by(&ps[0]).unwrap();
            prop_assert!(first_ideal.equals(&expected).unwrap());
        }
    }

    #[test]
    fn intersection_routes_agree(a in gens(2), b in gens(2)) {
        let r = ring();
        let i = Ideal::new(&r, a.iter().map(|t| build(&r, t)).collect()).unwrap();
        let j = Ideal::new(&r, b.iter().map(|t| build(&r, t)).collect()).unwrap();
        let m1 = i.intersect(&j).unwrap();
        let m2 = i.intersect_by_elimination(&j).unwrap();
        prop_assert!(m1.equals(&m2).unwrap());
        prop_assert!(i.contains_ideal(&m1).unwrap() && j.contains_ideal(&m1).unwrap());
        prop_assert!(m1.contains_ideal(&i.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn dimension_does_not_depend_on_order(g in gens(3)) {
        let r = ring();
        let i = Ideal::new(&r, g.iter().map(|t| build(&r, t)).collect()).unwrap();
        let a = i.dimension_in_order(MonomialOrder::Grevlex).unwrap();
        let b = i.dimension_in_order(MonomialOrder::Lex).unwrap();
        let c = i.dimension_in_order(MonomialOrder::WeightedGrevlex(vec![3, 1, 2])).unwrap();
        prop_assert_eq!(a.dim(), b.dim());
        prop_assert_eq!(a.dim(), c.dim());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn saturation_routes_agree(g in gens(2), h in small_poly(2, 1), extra in prop::bool::ANY) {
        let r = ring();
        let x = Polynomial::var_at(&r, 0);
        let i = Ideal::new(&r, g.iter().map(|t| &build(&r, t) * &x).collect()).unwrap();
        let h = build(&r, &h);
        prop_assume!(!h.is_constant());
        let j = if extra {
            Ideal::new(&r, vec![x.clone(), Polynomial::var_at(&r, 1)]).unwrap()
        } else {
            Ideal::principal(&h)
        };
        let (s1, _) = i.saturate(&j).unwrap();
        let (s2, _) = i.saturate_iterated(&j).unwrap();
        let (s3, _) = i.saturate_by_intersection(&j).unwrap();
        prop_assert!(s1.equals(&s2).unwrap());
        prop_assert!(s1.equals(&s3).unwrap());
        if !extra {
            prop_assert!(s1.equals(&i.saturate_principal(&h).unwrap()).unwrap());
        }
    }
}

#[test]
fn elimination_implicitizes_a_cuspidal_cubic() {
    let r = RingContext::new(&[("aux", vec!["t"]), ("geom", vec!["x", "y"])], MonomialOrder::Grevlex).unwrap();
    let i = Ideal::new(&r, parse_polynomial_list(&r, "x - t^2, y - t^3").unwrap()).unwrap();
    let e = i.eliminate("aux").unwrap();
    let target = Ideal::new(e.ring(), vec![parse_polynomial(e.ring(), "x^3 - y^2").unwrap()]).unwrap();
    assert!(e.equals(&target).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    /// Eliminating `t` from `(x - p(t), y - q(t))` gives polynomials vanishing on the curve.
    #[test]
    fn elimination_vanishes_on_the_parametrization(p in prop::collection::vec(-3i64..=3, 1..=3), q in prop::collection::vec(-3i64..=3, 1..=3)) {
        let r = RingContext::new(&[("aux", vec!["t"]), ("geom", vec!["x", "y"])], MonomialOrder::Grevlex).unwrap();
        let t = Polynomial::var_at(&r, 0);
        let poly_in_t = |c: &[i64]| {
            let mut acc = Polynomial::zero(&r);
            for (k, a) in c.iter().enumerate() {
                acc = &acc + &t.pow(k as u32 + 1).scale(&int(*a));
            }
            acc
        };
        let (pt, qt) = (poly_in_t(&p), poly_in_t(&q));
        let gens = vec![&Polynomial::var_at(&r, 1) - &pt, &Polynomial::var_at(&r, 2) - &qt];
        let e = Ideal::new(&r, gens).unwrap().eliminate("aux").unwrap();
        prop_assert!(!e.is_zero());
        for g in e.generators() {
            let back = g.embed(&r).unwrap().substitute(&[1, 2], &[pt.clone(), qt.clone()]);
            prop_assert!(back.is_zero());
        }
    }
}

#[test]
fn buchberger_matches_cached_basis_under_lex() {
    let r = ring();
    let ps = parse_polynomial_list(&r, "x^2 - y, x*y - z, y^2 - x*z").unwrap();
    let lex = r.with_order(MonomialOrder::Lex).unwrap();
    let moved: Vec<Polynomial> = ps.iter().map(|p| p.embed(&lex).unwrap()).collect();
    let a = buchberger(&ps, &r, MonomialOrder::Lex).unwrap();
    let b = GroebnerBasis::compute(&lex, &moved).unwrap();
    assert_eq!(as_set(&a), as_set(&b));
}
