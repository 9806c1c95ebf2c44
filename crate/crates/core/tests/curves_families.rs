use aluffi_core::blowup::{aluffi_dimension, aluffi_ideal, analytic_spread, is_linear_type, relative_rees_ideal, vv_pieces};
use aluffi_core::fixtures::{curve, family, CURVES, FAMILIES, QUINTIC_FAMILY};
use aluffi_core::gradient::*;
use aluffi_core::groebner::radical_member;
use aluffi_core::poly::int;
use aluffi_core::{parse_polynomial, MonomialOrder};

#[test]
fn three_node_quartic_is_of_linear_type() {
    let gp = gradient_pair(&curve("three-nodes").unwrap().polynomial()).unwrap();
    let cert = linear_type_certificate(&gp).unwrap();
    assert_eq!(cert.verdict, Verdict::LinearType);
    assert_eq!(cert.entries_codim, Some(3));
    assert_eq!(gp.gradient_ideal().dimension().unwrap().codim(), Some(2));
    let phi = cert.syzygy_matrix.as_ref().unwrap();
    assert_eq!(phi.rows(), 3);
    assert!(is_linear_type(&gp.pair).unwrap());
}

/// The entry-ideal criterion and the direct comparison of the Rees ideal with the symmetric
/// ideal must agree whenever the criterion is conclusive.
#[test]
fn certificate_agrees_with_the_presentation() {
    let mut polys: Vec<(String, _)> = CURVES.iter().map(|c| (c.name.to_string(), c.polynomial())).collect();
    for fam in FAMILIES.iter().filter(|f| f.params.is_empty()) {
        let r = aluffi_core::RingContext::geometric(&["x", "y", "z"]).unwrap();
        polys.push((format!("({})", fam.key), parse_polynomial(&r, fam.polynomial).unwrap()));
    }
    for (name, p) in polys {
        let gp = gradient_pair(&p).unwrap();
        let cert = linear_type_certificate(&gp).unwrap();
        let direct = is_linear_type(&gp.pair).unwrap();
        match cert.verdict {
            Verdict::LinearType => assert!(direct, "{}", name),
            Verdict::NotLinearType => assert!(!direct, "{}", name),
            Verdict::Inconclusive => panic!("{}: {}", name, cert.reason),
        }
        // The Aluffi algebra of a plane curve has dimension 3, also under a weighted order.
        let pres = aluffi_ideal(&gp.pair).unwrap();
        let weighted = MonomialOrder::WeightedGrevlex(vec![3, 1, 2, 2, 3, 1]);
        assert_eq!(pres.aluffi_ideal.dimension_in_order(weighted).unwrap().dim(), Some(3), "{}", name);
        assert_eq!(aluffi_dimension(&pres).unwrap().dim(), Some(3), "{}", name);
        if direct {
            assert_eq!(analytic_spread(&gp.pair).unwrap(), 3, "{}", name);
        }
        assert_eq!(pres.sym_ideal.equals(&pres.aluffi_ideal).unwrap(), direct, "{}", name);
    }
}

/// `((f) ∩ I_f^2) / f I_f` is nonzero for every curve fixture, so the Aluffi algebra always
/// differs from the Rees algebra of `I_f / (f)`, linear type or not.
#[test]
fn gradient_pairs_carry_torsion_in_degree_two() {
    let mut polys: Vec<(String, _)> = CURVES.iter().map(|c| (c.name.to_string(), c.polynomial())).collect();
    for fam in FAMILIES.iter().filter(|f| f.params.is_empty()) {
        let r = aluffi_core::RingContext::geometric(&["x", "y", "z"]).unwrap();
        polys.push((format!("({})", fam.key), parse_polynomial(&r, fam.polynomial).unwrap()));
    }
    for (name, p) in polys {
        let gp = gradient_pair(&p).unwrap();
        let piece = &vv_pieces(&gp.pair, 2).unwrap().pieces[0];
        assert_eq!(piece.t, 2);
        assert!(!piece.is_zero(), "{}", name);
        let pres = aluffi_ideal(&gp.pair).unwrap();
        assert!(!pres.aluffi_ideal.equals(&relative_rees_ideal(&gp.pair).unwrap()).unwrap(), "{}", name);
    }
}

#[test]
fn bad_quintic_entries_have_codimension_two() {
    let gp = gradient_pair(&curve("bad-quintic").unwrap().polynomial()).unwrap();
    let cert = linear_type_certificate(&gp).unwrap();
    assert_eq!(cert.verdict, Verdict::NotLinearType);
    assert_eq!(cert.entries_codim, Some(2));
}

#[test]
fn fermat_quartic_takes_the_regular_sequence_route() {
    let gp = gradient_pair(&curve("fermat-quartic").unwrap().polynomial()).unwrap();
    let cert = linear_type_certificate(&gp).unwrap();
    assert_eq!(cert.verdict, Verdict::LinearType);
    assert!(cert.entries_ideal.is_none());
    assert_eq!(cert.gradient_dimension.codim(), Some(3));
}

#[test]
fn quintic_family_degenerates_at_the_origin() {
    let f = QUINTIC_FAMILY.polynomial();
    let rep = analyze_family(&f, &[], &FamilyOptions::default()).unwrap();
    assert_eq!(rep.codim_entries, Some(2));
    assert_eq!(rep.generic_verdict(), Verdict::NotLinearType);
    assert!(!rep.contraction_nonzero);
    assert!(rep.consistent());
    let special = evaluate_member(&f, &[int(0)]).unwrap();
    assert_eq!(special.certificate.verdict, Verdict::LinearType);
    for u in [1, -2, 5] {
        assert_eq!(evaluate_member(&f, &[int(u)]).unwrap().certificate.verdict, Verdict::NotLinearType, "u = {}", u);
    }
}

#[test]
fn catalog_columns_that_annihilate() {
    for fam in FAMILIES {
        for (k, col) in fam.columns.iter().enumerate() {
            let known_bad = matches!((fam.key, k), ("b", 0) | ("c", 0) | ("c", 1) | ("g", 0));
            let zero = fam.column_residual(col).unwrap().is_zero();
            assert_eq!(zero, !known_bad, "({}) column {}", fam.key, k + 1);
        }
    }
}

#[test]
fn catalog_families_satisfy_the_equivalence() {
    for fam in FAMILIES {
        let rep = analyze_family(&fam.polynomial(), &fam.constraint_polynomials(), &FamilyOptions::default()).unwrap();
        assert!(
            rep.consistent(),
            "({}) full {} contraction {} sampled {:?}",
            fam.key,
            rep.entries_full(),
            rep.contraction_nonzero,
            rep.sampled_linear_type()
        );
        assert!(rep.syzygies_in_maximal_ideal, "({})", fam.key);
        for m in &rep.members {
            // Sampled members avoid the constraints, so their gradient ideal has codim 2.
            assert_eq!(m.certificate.gradient_dimension.codim(), Some(2), "({})", fam.key);
        }
    }
}

#[test]
fn contractions_of_the_one_parameter_families() {
    for (key, element) in [("g", "u2^2"), ("i", "u3")] {
        let fam = family(key).unwrap();
        let rep = analyze_family(&fam.polynomial(), &fam.constraint_polynomials(), &FamilyOptions::default()).unwrap();
        let e = parse_polynomial(rep.contraction.ring(), element).unwrap();
        assert!(rep.contraction.contains(&e).unwrap(), "({}) {}", key, rep.contraction);
        // Members away from the parameter origin are of linear type.
        let m = evaluate_member(&fam.polynomial(), &[int(3)]).unwrap();
        assert_eq!(m.certificate.verdict, Verdict::LinearType, "({})", key);
    }
}

#[test]
fn tacnode_node_locus_carries_the_factor_two() {
    let fam = family("f").unwrap();
    let rep = analyze_family(&fam.polynomial(), &fam.constraint_polynomials(), &FamilyOptions::default()).unwrap();
    let r = rep.contraction.ring().clone();
    let expected = parse_polynomial(&r, "(2*u5 - 1)*(2*u5 + 1)*(u4^2 + 4*u5^2 - 1)").unwrap();
    assert!(radical_member(&expected, rep.contraction.generators()).unwrap());
    for g in rep.contraction.generators() {
        assert!(radical_member(g, std::slice::from_ref(&expected)).unwrap(), "{}", g);
    }
    assert_eq!(rep.degeneration_comparison, Some((false, false)));
}
