//! Dispatch from a [`JobSpec`] to the library.

use std::time::Instant;

use aluffi_core::blowup::{
    aluffi_dimension, aluffi_ideal, analytic_spread, artin_rees_number, is_linear_type, relation_type,
    verify_component_list, vv_pieces, PairInput, TorsionReport,
};
use aluffi_core::fixtures::{self, CurveFixture, FamilyFixture, PairFixture, QUINTIC_FAMILY};
use aluffi_core::gradient::{
    analyze_family, evaluate_member, gradient_pair, linear_type_certificate, FamilyOptions, FamilyReport,
    LinearTypeCertificate, MemberReport, Verdict,
};
use aluffi_core::groebner::{default_work_limit, with_work_limit};
use aluffi_core::syzygy::{syzygies, PolyMatrix};
use aluffi_core::{DimensionReport, Error, Ideal, Polynomial, Rational, Result};
use serde_json::{json, Value};

use crate::input::{AluffiOp, Command, IdealOp, JobSpec};
use crate::report::{Report, Status};

/// Runs a job. A work-limit stop yields `Ok` with a partial report; other library errors are
/// returned with context.
pub fn run(job: &JobSpec) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(&job.command.name());
    if !job.header.is_empty() {
        report.input("ring", job.header.clone());
    }
    for (k, v) in &job.echo {
        match report.inputs.get_mut(k) {
            Some(Value::Array(items)) => items.push(json!(v)),
            Some(first) => *first = json!([first.clone(), v]),
            None => report.input(k, v.clone()),
        }
    }
    let limit = job.options.work_limit.unwrap_or_else(default_work_limit);
    let outcome = with_work_limit(limit, || dispatch(job, &mut report));
    match outcome {
        Ok(()) => {}
        Err(Error::ResourceExhausted { limit }) => {
            report.status = Status::Partial;
            report.note(format!("stopped after {} pair reductions; results above are complete, the rest is missing", limit));
        }
        Err(e) => return Err(e),
    }
    report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}

fn dispatch(job: &JobSpec, report: &mut Report) -> Result<()> {
    let inputs = &job.inputs;
    let ring = &job.ring;
    let bound = job.options.bound;
    match &job.command {
        Command::Gb => {
            let ideal = Ideal::new(ring, inputs.ideal.clone())?;
            let gb = ideal.groebner()?;
            report.put("order", ring.order().name());
            report.put("basis", polys(gb.elements()));
            report.put("pair_reductions", gb.pair_reductions());
        }
        Command::Ideal(op) => {
            let a = Ideal::new(ring, inputs.ideal.clone())?;
            let b = Ideal::new(ring, inputs.other.clone())?;
            match op {
                IdealOp::Intersect => report.put("intersection", ideal(&a.intersect(&b)?.reduced()?)),
                IdealOp::Quotient => report.put("quotient", ideal(&a.quotient(&b)?.reduced()?)),
                IdealOp::Saturate => {
                    let (s, k) = a.saturate(&b)?;
                    report.put("saturation", ideal(&s.reduced()?));
                    report.put("exponent", k);
                }
                IdealOp::Eliminate => {
                    let names: Vec<&str> = inputs.eliminate.iter().map(|&i| ring.name(i)).collect();
                    report.put("eliminated", names);
                    report.put("elimination_ideal", ideal(&a.eliminate_vars(&inputs.eliminate)?.reduced()?));
                }
                IdealOp::Dim => report.put("dimension", dimension(&a.dimension()?)),
                IdealOp::Equal => report.put("equal", a.equals(&b)?),
            }
        }
        Command::Syz => {
            let phi = syzygies(ring, &inputs.gens)?;
            report.put("columns", matrix_columns(&phi));
        }
        Command::Minors => {
            let cols = inputs.rows[0].len();
            let entries: Vec<Polynomial> = inputs.rows.iter().flatten().cloned().collect();
            let m = PolyMatrix::new(ring, inputs.rows.len(), cols, entries)?;
            let size = inputs.size.expect("checked");
            report.put("size", size);
            report.put("minors", ideal(&m.minors(size)?.reduced()?));
        }
        Command::Aluffi(op) => {
            let pair = PairInput::new(ring, inputs.i_gens.clone(), inputs.j_gens.clone())?;
            report.put("certificates", pair.certificates().iter().map(|c| polys(c)).collect::<Vec<_>>());
            aluffi(&pair, *op, bound, &inputs.components, report)?;
        }
        Command::CurveCert => {
            let f = inputs.curve.as_ref().expect("checked");
            curve_certificate(f, report)?;
        }
        Command::FamilyAnalyze => {
            let f = inputs.family.as_ref().expect("checked");
            let opts = family_options(job);
            report.seed = Some(opts.seed);
            let rep = analyze_family(f, &inputs.constraints, &opts)?;
            family_results(&rep, report);
        }
        Command::FamilyMember => {
            let f = inputs.family.as_ref().expect("checked");
            let alpha = inputs.member.as_ref().expect("checked");
            let m = evaluate_member(f, alpha)?;
            report.put("member", member(&m));
        }
        Command::Fixture(name) => run_fixture(name, job, report)?,
    }
    Ok(())
}

fn family_options(job: &JobSpec) -> FamilyOptions {
    FamilyOptions { seed: job.options.seed, samples: job.options.samples, ..FamilyOptions::default() }
}

fn aluffi(pair: &PairInput, op: AluffiOp, bound: u32, components: &[Vec<Polynomial>], report: &mut Report) -> Result<()> {
    match op {
        AluffiOp::Present => {
            let pres = aluffi_ideal(pair)?;
            report.put("tilde_j", polys(&pres.tilde_j));
            report.put("sym_ideal", ideal(&pres.sym_ideal.reduced()?));
            report.put("rees_ideal", ideal(&pres.rees_ideal.reduced()?));
            report.put("aluffi_ideal", ideal(&pres.aluffi_ideal.reduced()?));
        }
        AluffiOp::Torsion => {
            report.put("bound", bound);
            let t = vv_pieces(pair, bound)?;
            report.put("pieces", torsion(&t));
            report.put("torsion_free_up_to_bound", t.is_zero());
        }
        AluffiOp::LinearType => report.put("linear_type", is_linear_type(pair)?),
        AluffiOp::ArNumber => {
            report.put("bound", bound);
            report.put("artin_rees_number", bounded(artin_rees_number(pair, bound)?, bound));
        }
        AluffiOp::RelType => {
            report.put("bound", bound);
            report.put("relation_type", bounded(relation_type(pair, bound)?, bound));
        }
        AluffiOp::Spread => report.put("analytic_spread", analytic_spread(pair)?),
        AluffiOp::Dim => report.put("aluffi_dimension", dimension(&aluffi_dimension(&aluffi_ideal(pair)?)?)),
        AluffiOp::VerifyComponents => {
            let pres = aluffi_ideal(pair)?;
            let mut cands = Vec::new();
            for c in components {
                cands.push(Ideal::new(&pres.ring, c.iter().map(|p| p.restrict(&pres.ring)).collect::<Result<_>>()?)?);
            }
            let rep = verify_component_list(&pres, &cands)?;
            let checks: Vec<Value> = rep
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "candidate": ideal(&c.candidate),
                        "contains_aluffi_ideal": c.contains_aluffi,
                        "dimension": dimension(&c.dimension),
                    })
                })
                .collect();
            report.put("aluffi_dimension", dimension(&rep.aluffi_dimension));
            report.put("candidates", checks);
            report.put("covered", rep.covered);
            report.put("exhausts", rep.exhausts);
            report.put("complete", rep.complete());
            report.put("equidimensional", rep.equidimensional());
        }
    }
    Ok(())
}

fn curve_certificate(f: &Polynomial, report: &mut Report) -> Result<LinearTypeCertificate> {
    let gp = gradient_pair(f)?;
    let cert = linear_type_certificate(&gp)?;
    report.put("degree", gp.degree);
    report.put("verdict", verdict(cert.verdict));
    report.put("reason", cert.reason.clone());
    report.put("gradient_dimension", dimension(&cert.gradient_dimension));
    if let Some(phi) = &cert.syzygy_matrix {
        report.put("syzygy_columns", matrix_columns(phi));
    }
    if let Some(e) = &cert.entries_ideal {
        report.put("entries_ideal", ideal(&e.reduced()?));
        report.put("entries_codim", cert.entries_codim);
    }
    Ok(cert)
}

fn family_results(rep: &FamilyReport, report: &mut Report) {
    report.put("content_one", rep.content_one);
    report.put("codim_gradient", rep.codim_gradient);
    report.put("codim_entries", rep.codim_entries);
    report.put("generic_verdict", verdict(rep.generic_verdict()));
    report.put("syzygies_in_maximal_ideal", rep.syzygies_in_maximal_ideal);
    report.put("contraction", ideal(&rep.contraction));
    report.put("contraction_codim", rep.contraction_codim);
    report.put("contraction_nonzero", rep.contraction_nonzero);
    report.put("saturation_note", rep.saturation_note.clone());
    if let Some((forward, backward)) = rep.degeneration_comparison {
        report.put(
            "degeneration_locus",
            json!({ "constraints_vanish_on_contraction": forward, "contraction_vanishes_on_constraints": backward }),
        );
    }
    report.put("members", rep.members.iter().map(member).collect::<Vec<_>>());
    report.put("consistent", rep.consistent());
    for w in &rep.warnings {
        report.note(w.clone());
    }
}

fn run_fixture(name: &str, job: &JobSpec, report: &mut Report) -> Result<()> {
    match lookup(name) {
        Some(Fixture::Curve(c)) => {
            report.provenance = Some(c.provenance.to_string());
            let f = c.polynomial();
            report.put("polynomial", f.to_string());
            let cert = curve_certificate(&f, report)?;
            let gp = gradient_pair(&f)?;
            report.put("linear_type_by_presentation", is_linear_type(&gp.pair)?);
            report.put("aluffi_dimension", dimension(&aluffi_dimension(&aluffi_ideal(&gp.pair)?)?));
            if cert.verdict == Verdict::LinearType {
                report.put("analytic_spread", analytic_spread(&gp.pair)?);
            }
        }
        Some(Fixture::Family(fam)) => {
            report.provenance = Some(fam.provenance.to_string());
            report.put("ring", fam.header());
            report.put("polynomial", fam.polynomial().to_string());
            report.put("columns", column_checks(fam)?);
            let opts = family_options(job);
            report.seed = Some(opts.seed);
            let rep = analyze_family(&fam.polynomial(), &fam.constraint_polynomials(), &opts)?;
            family_results(&rep, report);
        }
        Some(Fixture::Pair(p)) => {
            report.provenance = Some(p.provenance.to_string());
            report.put("I", p.i_gens);
            report.put("J", p.j_gens);
            let pair = p.pair()?;
            let bound = job.options.bound;
            report.put("bound", bound);
            let t = vv_pieces(&pair, bound)?;
            report.put("pieces", torsion(&t));
            report.put("torsion_free_up_to_bound", t.is_zero());
            if !p.witnesses.is_empty() {
                let i = pair.i_ideal();
                let j = pair.j_ideal();
                let meet = j.intersect(&i.power(2))?;
                let ji = j.product(&i)?;
                let mut checks = Vec::new();
                for w in p.witness_polynomials()? {
                    checks.push(json!({
                        "witness": w.to_string(),
                        "in_J_meet_I2": meet.contains(&w)?,
                        "in_J_times_I": ji.contains(&w)?,
                    }));
                }
                report.put("witnesses", checks);
            }
        }
        None => return Err(Error::InvalidArgument(format!("unknown fixture `{}`", name))),
    }
    Ok(())
}

pub enum Fixture {
    Curve(&'static CurveFixture),
    Family(&'static FamilyFixture),
    Pair(&'static PairFixture),
}

pub fn lookup(name: &str) -> Option<Fixture> {
    if let Some(c) = fixtures::curve(name) {
        return Some(Fixture::Curve(c));
    }
    if let Some(f) = fixtures::family(name) {
        return Some(Fixture::Family(f));
    }
    if name == QUINTIC_FAMILY.key || name == QUINTIC_FAMILY.name {
        return Some(Fixture::Family(&QUINTIC_FAMILY));
    }
    fixtures::pair_fixture(name).map(Fixture::Pair)
}

/// `(name, kind, provenance)` for every fixture, sorted by name.
pub fn fixture_list() -> Vec<(String, &'static str, &'static str)> {
    let mut out: Vec<(String, &'static str, &'static str)> = Vec::new();
    out.extend(fixtures::CURVES.iter().map(|c| (c.name.to_string(), "curve", c.provenance)));
    out.extend(
        fixtures::FAMILIES.iter().chain(std::iter::once(&QUINTIC_FAMILY)).map(|f| (f.name.to_string(), "family", f.provenance)),
    );
    out.extend(fixtures::PAIRS.iter().map(|p| (p.name.to_string(), "pair", p.provenance)));
    out.sort();
    out
}

fn column_checks(fam: &FamilyFixture) -> Result<Vec<Value>> {
    let mut out = Vec::new();
    for (k, c) in fam.columns.iter().enumerate() {
        let residual = fam.column_residual(c)?;
        let at: Vec<String> = c.at.iter().map(|(n, v)| format!("{}={}", n, v)).collect();
        out.push(json!({
            "column": k + 1,
            "at": at,
            "annihilates_gradient": residual.is_zero(),
            "residual": residual.to_string(),
        }));
    }
    Ok(out)
}

pub fn polys(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn ideal(i: &Ideal) -> Vec<String> {
    polys(i.generators())
}

fn matrix_columns(m: &PolyMatrix) -> Vec<Vec<String>> {
    m.columns().iter().map(|c| polys(c)).collect()
}

pub fn dimension(d: &DimensionReport) -> Value {
    match (d.dim(), d.codim()) {
        (Some(dim), Some(codim)) => json!({ "dim": dim, "codim": codim }),
        _ => json!("empty (unit ideal)"),
    }
}

fn bounded(v: Option<u32>, bound: u32) -> Value {
    match v {
        Some(k) => json!(k),
        None => json!(format!("exceeds bound {}", bound)),
    }
}

pub fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::LinearType => "LinearType",
        Verdict::NotLinearType => "NotLinearType",
        Verdict::Inconclusive => "Inconclusive",
    }
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

fn member(m: &MemberReport) -> Value {
    json!({
        "alpha": rationals(&m.alpha),
        "polynomial": m.member.to_string(),
        "verdict": verdict(m.certificate.verdict),
        "reason": m.certificate.reason,
        "specialized_codim": m.specialized_codim,
        "strict_specialization": m.strict_specialization,
    })
}

fn torsion(t: &TorsionReport) -> Vec<Value> {
    t.pieces
        .iter()
        .map(|p| {
            json!({
                "t": p.t,
                "zero": p.is_zero(),
                "witnesses": polys(&p.witnesses),
                "annihilator_exponents": p.annihilator_exponents,
                "degree_dims": p.degree_dims,
            })
        })
        .collect()
}
