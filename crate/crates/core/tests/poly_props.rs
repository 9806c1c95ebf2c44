use aluffi_core::poly::{int, rat};
use aluffi_core::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational, RingContext};
use proptest::prelude::*;

fn ring() -> RingContext {
    RingContext::geometric(&["x", "y", "z"]).unwrap()
}

fn terms(max_terms: usize, max_deg: u16) -> impl Strategy<Value = Vec<([u16; 3], i64, i64)>> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg, 0..=max_deg).prop_map(|(a, b, c)| [a, b, c]), -20i64..=20, 1i64..=6), 0..=max_terms)
}

fn build(r: &RingContext, t: &[([u16; 3], i64, i64)]) -> Polynomial {
    Polynomial::from_terms(r, t.iter().map(|(e, n, d)| (Monomial::from_exponents(e), rat(*n, *d))))
}

fn poly(max_terms: usize, max_deg: u16) -> impl Strategy<Value = Polynomial> {
    terms(max_terms, max_deg).prop_map(|t| build(&ring(), &t))
}

/// A homogeneous polynomial of degree `d` in x, y, z.
fn form(d: u16) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..=d, 0..=d, -9i64..=9), 1..6).prop_map(move |v| {
        let r = ring();
        Polynomial::from_terms(
            &r,
            v.into_iter().map(|(a, b, c)| {
                let a = a.min(d);
                let b = b.min(d - a);
                (Monomial::from_exponents(&[a, b, d - a - b]), int(c))
            }),
        )
    })
}

/// Evaluates by expanding every term with exact rationals.
fn eval(p: &Polynomial, pt: &[Rational]) -> Rational {
    let mut acc = int(0);
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                v *= &pt[i];
            }
        }
        acc += v;
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(4, 3), b in poly(4, 3), c in poly(4, 3)) {
        let zero = Polynomial::zero(&ring());
        let one = Polynomial::one(&ring());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &zero, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&a), zero);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn display_parses_back(a in poly(6, 4)) {
        let r = ring();
        prop_assert_eq!(parse_polynomial(&r, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn display_parses_back_in_other_orders(t in terms(6, 4)) {
        for order in [MonomialOrder::Lex, MonomialOrder::WeightedGrevlex(vec![1, 2, 3])] {
            let r = RingContext::new(&[("geom", vec!["x", "y", "z"])], order).unwrap();
            let a = build(&r, &t);
            prop_assert_eq!(parse_polynomial(&r, &a.to_string()).unwrap(), a);
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(4, 3), b in poly(4, 3), pt in prop::collection::vec((-5i64..=5, 1i64..=3), 3)) {
        let pt: Vec<Rational> = pt.into_iter().map(|(n, d)| rat(n, d)).collect();
        let vars = [0, 1, 2];
        let at = |p: &Polynomial| p.substitute_values(&vars, &pt).constant_term();
        prop_assert_eq!(at(&(&a + &b)), at(&a) + at(&b));
        prop_assert_eq!(at(&(&a * &b)), at(&a) * at(&b));
        prop_assert_eq!(at(&a), eval(&a, &pt));
    }

    #[test]
    fn euler_identity(d in 1u16..=5, f0 in form(5)) {
        let r = ring();
        // Reuse the random coefficients at degree d.
        let f = Polynomial::from_terms(&r, f0.terms().iter().map(|(m, c)| {
            let e = m.exponents();
            let a = e[0].min(d);
            let b = e[1].min(d - a);
            (Monomial::from_exponents(&[a, b, d - a - b]), c.clone())
        }));
        let mut acc = Polynomial::zero(&r);
        for i in 0..3 {
            acc = &acc + &(&Polynomial::var_at(&r, i) * &f.derivative_at(i));
        }
        prop_assert_eq!(acc, f.scale(&int(d as i64)));
    }

    #[test]
    fn derivative_is_a_derivation(a in poly(4, 3), b in poly(4, 3), i in 0usize..3) {
        let lhs = (&a * &b).derivative_at(i);
        let rhs = &(&a.derivative_at(i) * &b) + &(&a * &b.derivative_at(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(4, 3), b in poly(3, 2)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }
}

#[test]
fn parse_accepts_the_documented_syntax() {
    let r = ring();
    let p = parse_polynomial(&r, "3/2*x^2*y - (y - z)^2 + 7").unwrap();
    let q = parse_polynomial(&r, "3/2 x^2 y - y^2 + 2*y*z - z^2 + 7").unwrap();
    assert_eq!(p, q);
    assert_eq!(p.degree(), Some(3));
    assert!(parse_polynomial(&r, "x^^2").is_err());
    assert!(parse_polynomial(&r, "w + 1").is_err());
}
