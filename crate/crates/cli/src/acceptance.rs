//! The acceptance suite: nine criteria, each reported as one pass/fail line.

use std::time::{Duration, Instant};

use aluffi_core::blowup::{
    aluffi_dimension, aluffi_ideal, analytic_spread, artin_rees_number, is_linear_type, relative_rees_ideal,
    sym_ideal, vv_pieces, PairInput,
};
use aluffi_core::fixtures::{self, FAMILIES, PAIRS, QUINTIC_FAMILY};
use aluffi_core::gradient::{analyze_family, evaluate_member, gradient_pair, linear_type_certificate, FamilyOptions, Verdict};
use aluffi_core::groebner::GroebnerBasis;
use aluffi_core::poly::int;
use aluffi_core::ring::GEOM;
use aluffi_core::syzygy::syzygies;
use aluffi_core::{parse_polynomial, parse_polynomial_list, Error, Homogeneity, Ideal, Polynomial, Result, RingContext};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::oracle;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub tags: Vec<&'static str>,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Individual checks that failed, in a stable textual form.
    pub failures: Vec<String>,
    pub elapsed_ms: f64,
    pub budget_s: u64,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {}: {} ({:.0} ms, budget {} s) {}",
            self.id,
            self.tags.join(","),
            self.title,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed_ms,
            self.budget_s,
            self.detail
        )
    }
}

/// Fixture data the suite reads, replaceable for fault injection.
#[derive(Clone, Debug)]
pub struct SuiteInputs {
    pub four_points_i: String,
    pub four_points_j: String,
    pub four_points_witnesses: Vec<String>,
    pub seed: u64,
}

impl Default for SuiteInputs {
    fn default() -> Self {
        let p = fixtures::pair_fixture("four-points").expect("fixture");
        SuiteInputs {
            four_points_i: p.i_gens.to_string(),
            four_points_j: p.j_gens.to_string(),
            four_points_witnesses: p.witnesses.iter().map(|w| w.to_string()).collect(),
            seed: 1,
        }
    }
}

struct Criterion {
    id: u32,
    tags: &'static [&'static str],
    title: &'static str,
    budget_s: u64,
    check: fn(&SuiteInputs) -> Result<Vec<String>>,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, tags: &["vv", "torsion", "four-points"], title: "four-points torsion", budget_s: 5, check: four_points },
    Criterion { id: 2, tags: &["linear-type", "three-nodes"], title: "three-node quartic", budget_s: 30, check: three_nodes },
    Criterion { id: 3, tags: &["presentation", "bad-quintic"], title: "bad quintic presentations", budget_s: 60, check: bad_quintic },
    Criterion { id: 4, tags: &["family", "quintic-family"], title: "quintic family degeneration", budget_s: 60, check: quintic_family },
    Criterion { id: 5, tags: &["family", "contraction"], title: "saturation contractions", budget_s: 240, check: contractions },
    Criterion { id: 6, tags: &["family", "catalog"], title: "quartic catalog", budget_s: 900, check: catalog },
    Criterion { id: 7, tags: &["vv", "torsion", "monomial"], title: "torsion-free monomial pairs", budget_s: 120, check: monomial_pairs },
    Criterion { id: 8, tags: &["properties"], title: "property suites", budget_s: 600, check: properties },
    Criterion { id: 9, tags: &["dimension", "spread"], title: "dimension bounds", budget_s: 300, check: dimension_bounds },
];

/// Whether `only` selects criterion `id` (by number or by tag).
fn selected(c: &Criterion, only: Option<&str>) -> bool {
    match only {
        None => true,
        Some(s) => s.split(',').map(str::trim).any(|t| t == c.id.to_string() || c.tags.contains(&t)),
    }
}

pub fn run_acceptance_suite(only: Option<&str>) -> Vec<Outcome> {
    run_with(only, &SuiteInputs::default())
}

pub fn run_with(only: Option<&str>, inputs: &SuiteInputs) -> Vec<Outcome> {
    CRITERIA.iter().filter(|c| selected(c, only)).map(|c| evaluate(c, inputs)).collect()
}

fn evaluate(c: &Criterion, inputs: &SuiteInputs) -> Outcome {
    let start = Instant::now();
    let result = (c.check)(inputs);
    let elapsed = start.elapsed();
    let mut failures = match result {
        Ok(f) => f,
        Err(e) => vec![format!("error: {}", e)],
    };
    if elapsed > Duration::from_secs(c.budget_s) {
        failures.push(format!("took {:.1} s, over the {} s budget", elapsed.as_secs_f64(), c.budget_s));
    }
    let detail = if failures.is_empty() { "all checks hold".to_string() } else { failures.join("; ") };
    Outcome {
        id: c.id,
        tags: c.tags.to_vec(),
        title: c.title,
        passed: failures.is_empty(),
        detail,
        failures,
        elapsed_ms: elapsed.as_secs_f64() * 1e3,
        budget_s: c.budget_s,
    }
}

fn expect(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn xyz() -> RingContext {
    RingContext::geometric(&["x", "y", "z"]).expect("ring")
}

fn four_points(inputs: &SuiteInputs) -> Result<Vec<String>> {
    let r = xyz();
    let i = parse_polynomial_list(&r, &inputs.four_points_i)?;
    let j = parse_polynomial_list(&r, &inputs.four_points_j)?;
    let pair = PairInput::new(&r, i, j)?;
    let mut f = Vec::new();
    let report = vv_pieces(&pair, 2)?;
    let piece = report.pieces.iter().find(|p| p.t == 2);
    expect(&mut f, piece.is_some_and(|p| !p.is_zero()), "piece t=2 is zero");
    let ii = pair.i_ideal();
    let jj = pair.j_ideal();
    let meet = jj.intersect(&ii.power(2))?;
    let ji = jj.product(&ii)?;
    for w in &inputs.four_points_witnesses {
        let w = parse_polynomial(&r, w)?;
        expect(&mut f, meet.contains(&w)?, format!("{} not in J∩I^2", w));
        expect(&mut f, !ji.contains(&w)?, format!("{} in J·I", w));
    }
    Ok(f)
}

fn curve_pair(name: &str) -> Result<aluffi_core::gradient::GradientPair> {
    let c = fixtures::curve(name).ok_or_else(|| Error::InvalidArgument(format!("no curve {}", name)))?;
    gradient_pair(&c.polynomial())
}

fn three_nodes(_: &SuiteInputs) -> Result<Vec<String>> {
    let gp = curve_pair("three-nodes")?;
    let cert = linear_type_certificate(&gp)?;
    let mut f = Vec::new();
    expect(&mut f, cert.verdict == Verdict::LinearType, format!("verdict {:?}", cert.verdict));
    expect(&mut f, cert.entries_codim == Some(3), format!("codim I1(phi) = {:?}", cert.entries_codim));
    expect(&mut f, is_linear_type(&gp.pair)?, "Rees ideal differs from the symmetric ideal");
    let d = aluffi_dimension(&aluffi_ideal(&gp.pair)?)?;
    expect(&mut f, d.dim() == Some(3), format!("aluffi dimension {}", d));
    Ok(f)
}

fn bad_quintic(_: &SuiteInputs) -> Result<Vec<String>> {
    let gp = curve_pair("bad-quintic")?;
    let cert = linear_type_certificate(&gp)?;
    let mut f = Vec::new();
    expect(&mut f, cert.verdict == Verdict::NotLinearType, format!("verdict {:?}", cert.verdict));
    expect(&mut f, cert.entries_codim == Some(2), format!("codim I1(phi) = {:?}", cert.entries_codim));
    let named = [
        ("sym", sym_ideal(&gp.pair)?),
        ("aluffi", aluffi_ideal(&gp.pair)?.aluffi_ideal),
        ("relative rees", relative_rees_ideal(&gp.pair)?),
    ];
    for a in 0..named.len() {
        for b in a + 1..named.len() {
            expect(&mut f, !named[a].1.equals(&named[b].1)?, format!("{} ideal equals {} ideal", named[a].0, named[b].0));
        }
    }
    for (name, ideal) in &named {
        let d = ideal.dimension()?;
        expect(&mut f, d.dim() == Some(3), format!("{} quotient has dimension {}", name, d));
    }
    Ok(f)
}

fn quintic_family(inputs: &SuiteInputs) -> Result<Vec<String>> {
    let fam = &QUINTIC_FAMILY;
    let opts = FamilyOptions { seed: inputs.seed, ..FamilyOptions::default() };
    let rep = analyze_family(&fam.polynomial(), &[], &opts)?;
    let mut f = Vec::new();
    expect(&mut f, rep.codim_entries == Some(2), format!("codim of the entry ideal = {:?}", rep.codim_entries));
    let m = evaluate_member(&fam.polynomial(), &[int(0)])?;
    expect(&mut f, m.certificate.verdict == Verdict::LinearType, format!("member u=0: {:?}", m.certificate.verdict));
    Ok(f)
}

fn contraction_of(key: &str, seed: u64) -> Result<(RingContext, Ideal)> {
    let fam = fixtures::family(key).ok_or_else(|| Error::InvalidArgument(format!("no family {}", key)))?;
    let opts = FamilyOptions { seed, ..FamilyOptions::default() };
    let rep = analyze_family(&fam.polynomial(), &fam.constraint_polynomials(), &opts)?;
    Ok((rep.contraction.ring().clone(), rep.contraction))
}

fn contractions(inputs: &SuiteInputs) -> Result<Vec<String>> {
    let mut f = Vec::new();
    for (key, element) in [("g", "u2^2"), ("i", "u3")] {
        let start = Instant::now();
        let (ring, c) = contraction_of(key, inputs.seed)?;
        let e = parse_polynomial(&ring, element)?;
        expect(&mut f, c.contains(&e)?, format!("({}) {} not in the contraction {}", key, element, c));
        let secs = start.elapsed().as_secs_f64();
        expect(&mut f, secs <= 120.0, format!("({}) took {:.1} s, over 120 s", key, secs));
    }
    Ok(f)
}

fn catalog(inputs: &SuiteInputs) -> Result<Vec<String>> {
    let mut f = Vec::new();
    for fam in FAMILIES {
        for (k, col) in fam.columns.iter().enumerate() {
            let residual = fam.column_residual(col)?;
            expect(&mut f, residual.is_zero(), format!("({}) column {} does not annihilate the gradient", fam.key, k + 1));
        }
        let opts = FamilyOptions { seed: inputs.seed, ..FamilyOptions::default() };
        let rep = analyze_family(&fam.polynomial(), &fam.constraint_polynomials(), &opts)?;
        expect(
            &mut f,
            rep.consistent(),
            format!(
                "({}) equivalence broken: codim full {}, contraction nonzero {}, sampled {:?}",
                fam.key,
                rep.entries_full(),
                rep.contraction_nonzero,
                rep.sampled_linear_type()
            ),
        );
    }
    Ok(f)
}

fn monomial_pairs(_: &SuiteInputs) -> Result<Vec<String>> {
    let mut f = Vec::new();
    for name in ["monomial-partials", "coordinate-points"] {
        let start = Instant::now();
        let p = fixtures::pair_fixture(name).ok_or_else(|| Error::InvalidArgument(name.into()))?;
        let report = vv_pieces(&p.pair()?, 4)?;
        for piece in &report.pieces {
            expect(&mut f, piece.is_zero(), format!("{}: piece t={} is nonzero", name, piece.t));
        }
        expect(&mut f, report.pieces.iter().any(|p| p.t == 4), format!("{}: no piece t=4", name));
        let secs = start.elapsed().as_secs_f64();
        expect(&mut f, secs <= 60.0, format!("{} took {:.1} s, over 60 s", name, secs));
    }
    Ok(f)
}

fn properties(inputs: &SuiteInputs) -> Result<Vec<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(inputs.seed);
    let mut f = Vec::new();
    regular_pairs(&mut rng, 10, &mut f)?;
    monomial_oracle(&mut rng, 100, &mut f)?;
    permutation_uniqueness(&mut rng, 100, &mut f)?;
    euler_identity(&mut f)?;
    lift_independence(&mut rng, &mut f)?;
    Ok(f)
}

pub fn regular_pairs(rng: &mut ChaCha8Rng, count: usize, f: &mut Vec<String>) -> Result<()> {
    let r = xyz();
    for _ in 0..count {
        let (i, j) = oracle::random_regular_pair(rng, &r);
        let label = format!("I=({}) J=({})", join(&i), join(&j));
        let pair = PairInput::new(&r, i, j)?;
        expect(f, vv_pieces(&pair, 3)?.is_zero(), format!("regular pair {} has torsion", label));
        let ar = artin_rees_number(&pair, 3)?;
        expect(f, ar == Some(1), format!("regular pair {} has Artin-Rees number {:?}", label, ar));
    }
    Ok(())
}

pub fn monomial_oracle(rng: &mut ChaCha8Rng, count: usize, f: &mut Vec<String>) -> Result<()> {
    const TOP: u16 = 8;
    for case in 0..count {
        let n = rng.gen_range(1..=3);
        let names = ["x", "y", "z"];
        let r = RingContext::geometric(&names[..n])?;
        let a = oracle::random_monomial_ideal(rng, n, 4, TOP);
        let b = oracle::random_monomial_ideal(rng, n, 3, TOP);
        let ia = Ideal::new(&r, oracle::monomial_polys(&r, &a))?;
        let ib = Ideal::new(&r, oracle::monomial_polys(&r, &b))?;
        let meet = ia.intersect(&ib)?;
        let quot = ia.quotient(&ib)?;
        let (sat, _) = ia.saturate(&ib)?;
        for m in oracle::box_monomials(n, TOP + 1) {
            let p = Polynomial::monomial(&r, aluffi_core::Monomial::from_exponents(&m), int(1));
            let checks = [
                ("intersect", meet.contains(&p)?, oracle::in_intersection(&a, &b, &m)),
                ("quotient", quot.contains(&p)?, oracle::in_quotient(&a, &b, &m)),
                ("saturate", sat.contains(&p)?, oracle::in_saturation(&a, &b, &m, TOP)),
            ];
            for (op, got, want) in checks {
                if got != want {
                    f.push(format!("monomial case {}: {} disagrees at {:?}", case, op, m));
                    break;
                }
            }
        }
    }
    Ok(())
}

pub fn permutation_uniqueness(rng: &mut ChaCha8Rng, count: usize, f: &mut Vec<String>) -> Result<()> {
    let r = xyz();
    for case in 0..count {
        let k = rng.gen_range(2..=3);
        let gens: Vec<Polynomial> = (0..k).map(|_| oracle::random_polynomial(rng, &r, 3, 2)).collect();
        let mut shuffled = gens.clone();
        shuffled.shuffle(rng);
        let a = GroebnerBasis::compute(&r, &gens)?;
        let b = GroebnerBasis::compute(&r, &shuffled)?;
        expect(f, a.elements() == b.elements(), format!("permutation case {} gives different bases", case));
    }
    Ok(())
}

/// Every homogeneous fixture polynomial `f` of degree `d` satisfies `Σ x_i ∂f/∂x_i = d f`.
pub fn euler_identity(f: &mut Vec<String>) -> Result<()> {
    let mut polys: Vec<(String, Polynomial)> = Vec::new();
    for c in fixtures::CURVES {
        polys.push((c.name.to_string(), c.polynomial()));
    }
    for fam in FAMILIES.iter().chain(std::iter::once(&QUINTIC_FAMILY)) {
        polys.push((format!("family ({})", fam.key), fam.polynomial()));
    }
    for p in PAIRS {
        let r = p.ring();
        for g in parse_polynomial_list(&r, p.i_gens)? {
            polys.push((p.name.to_string(), g));
        }
    }
    for (name, p) in polys {
        let geom = p.ring().block_indices(GEOM);
        let d = match p.homogeneity_in(&geom) {
            Homogeneity::Homogeneous(d) => d,
            _ => {
                f.push(format!("{}: fixture polynomial is not homogeneous", name));
                continue;
            }
        };
        let mut acc = Polynomial::zero(p.ring());
        for &i in &geom {
            acc = &acc + &(&Polynomial::var_at(p.ring(), i) * &p.derivative_at(i));
        }
        let rhs = p.scale(&int(d as i64));
        expect(f, acc == rhs, format!("{}: Euler identity fails for {}", name, p));
    }
    Ok(())
}

/// Adds random combinations of syzygies of `I` to the certificates and compares Aluffi ideals.
pub fn lift_independence(rng: &mut ChaCha8Rng, f: &mut Vec<String>) -> Result<()> {
    let mut pairs: Vec<(String, PairInput)> = Vec::new();
    for name in ["monomial-partials", "coordinate-points"] {
        pairs.push((name.to_string(), fixtures::pair_fixture(name).expect("fixture").pair()?));
    }
    for c in fixtures::CURVES {
        pairs.push((c.name.to_string(), gradient_pair(&c.polynomial())?.pair));
    }
    for (name, pair) in pairs {
        let ring = pair.ring().clone();
        let phi = syzygies(&ring, pair.i_gens())?;
        let vars: Vec<Polynomial> = (0..ring.arity()).map(|i| Polynomial::var_at(&ring, i)).collect();
        let mut certs = pair.certificates().to_vec();
        for cert in certs.iter_mut() {
            for col in phi.columns() {
                let scale = &Polynomial::constant(&ring, int(rng.gen_range(1..=3))) * &vars[rng.gen_range(0..vars.len())];
                for (c, s) in cert.iter_mut().zip(&col) {
                    *c = &*c + &(&scale * s);
                }
            }
        }
        let changed = certs != pair.certificates();
        expect(f, changed, format!("{}: certificate swap left the certificates unchanged", name));
        let swapped = pair.replace_certificates(certs)?;
        let a = aluffi_ideal(&pair)?.aluffi_ideal;
        let b = aluffi_ideal(&swapped)?.aluffi_ideal;
        expect(f, a.equals(&b)?, format!("{}: Aluffi ideal depends on the certificates", name));
    }
    Ok(())
}

fn dimension_bounds(_: &SuiteInputs) -> Result<Vec<String>> {
    let mut f = Vec::new();
    let mut curves: Vec<(String, Polynomial)> =
        fixtures::CURVES.iter().map(|c| (c.name.to_string(), c.polynomial())).collect();
    for fam in FAMILIES.iter().filter(|fam| fam.params.is_empty()) {
        let r = xyz();
        let p = parse_polynomial(&r, fam.polynomial)?;
        curves.push((format!("family ({})", fam.key), p));
    }
    for (name, p) in curves {
        let gp = gradient_pair(&p)?;
        let n = p.ring().block_indices(GEOM).len();
        let d = aluffi_dimension(&aluffi_ideal(&gp.pair)?)?;
        expect(&mut f, d.dim() == Some(n), format!("{}: aluffi dimension {}", name, d));
        if linear_type_certificate(&gp)?.verdict == Verdict::LinearType {
            let l = analytic_spread(&gp.pair)?;
            expect(&mut f, l == n, format!("{}: analytic spread {}", name, l));
        }
    }
    Ok(f)
}

fn join(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}
