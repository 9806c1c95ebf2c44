//! Gradient ideals of projective hypersurfaces, the linear-type certificate through the ideal of
//! entries of the syzygy matrix, and the analysis of parameterized families of curves.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::blowup::PairInput;
use crate::error::{Error, Result};
use crate::groebner::{radical_member, with_work_limit};
use crate::ideal::{DimensionReport, Ideal};
use crate::monomial::Monomial;
use crate::poly::{int, Homogeneity, Polynomial, Rational};
use crate::ring::{RingContext, GEOM, PARAM};
use crate::syzygy::{syzygies, PolyMatrix};

/// Characteristic of the coefficient field. Everything here is over the rationals.
pub const CHARACTERISTIC: u32 = 0;

/// `(f) ⊆ I_f` with the Euler certificate `f = Σ (x_i / d) ∂f/∂x_i`.
#[derive(Clone, Debug)]
pub struct GradientPair {
    pub f: Polynomial,
    pub degree: u32,
    pub pair: PairInput,
}

impl GradientPair {
    pub fn gradient(&self) -> &[Polynomial] {
        self.pair.i_gens()
    }

    pub fn gradient_ideal(&self) -> Ideal {
        self.pair.i_ideal()
    }
}

pub fn gradient_pair(f: &Polynomial) -> Result<GradientPair> {
    let ring = f.ring();
    let vars: Vec<usize> = (0..ring.arity()).collect();
    let d = match f.homogeneity_in(&vars) {
        Homogeneity::Homogeneous(d) if d >= 1 => d,
        Homogeneity::Homogeneous(_) => return Err(Error::InvalidArgument("f is a constant".into())),
        Homogeneity::Zero => return Err(Error::ZeroIdeal("f is zero".into())),
        Homogeneity::NotHomogeneous => return Err(Error::NotHomogeneous(f.to_string())),
    };
    if CHARACTERISTIC != 0 && d % CHARACTERISTIC == 0 {
        return Err(Error::InvalidArgument(format!("degree {} is divisible by the characteristic", d)));
    }
    let scale = Rational::new(1.into(), d.into());
    let mut gens = Vec::new();
    let mut cert = Vec::new();
    for &i in &vars {
        let p = f.derivative_at(i);
        if !p.is_zero() {
            gens.push(p);
            cert.push(Polynomial::var_at(ring, i).scale(&scale));
        }
    }
    let pair = PairInput::with_certificates(ring, gens, vec![f.clone()], vec![cert])?;
    Ok(GradientPair { f: f.clone(), degree: d, pair })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    LinearType,
    NotLinearType,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct LinearTypeCertificate {
    pub verdict: Verdict,
    pub reason: String,
    /// Number of variables.
    pub n: usize,
    pub gradient_dimension: DimensionReport,
    /// `I₁(φ)` and its codimension, absent on the regular-sequence shortcut.
    pub entries_ideal: Option<Ideal>,
    pub entries_codim: Option<usize>,
    pub syzygy_matrix: Option<PolyMatrix>,
}

pub fn linear_type_certificate(gp: &GradientPair) -> Result<LinearTypeCertificate> {
    let n = gp.f.ring().arity();
    let i_f = gp.gradient_ideal();
    let dim = i_f.dimension()?;
    let base = |verdict, reason: String, dim: DimensionReport| LinearTypeCertificate {
        verdict,
        reason,
        n,
        gradient_dimension: dim,
        entries_ideal: None,
        entries_codim: None,
        syzygy_matrix: None,
    };
    if dim.codim() == Some(n) && gp.gradient().len() == n {
        return Ok(base(Verdict::LinearType, "regular sequence".into(), dim));
    }
    if dim.dim() != Some(1) {
        let reason = format!("singular locus is not a nonempty finite set of points ({})", dim);
        return Ok(base(Verdict::Inconclusive, reason, dim));
    }
    let height = dim.codim().expect("proper");
    let phi = syzygies(gp.f.ring(), gp.gradient())?;
    let entries = phi.minors(1)?;
    let ed = entries.dimension()?;
    let mut cert = base(Verdict::Inconclusive, String::new(), dim);
    cert.entries_codim = ed.codim();
    cert.entries_ideal = Some(entries);
    cert.syzygy_matrix = Some(phi);
    match ed.codim() {
        None => cert.reason = "syzygy entries generate the unit ideal".into(),
        Some(c) if c > height => {
            cert.verdict = Verdict::LinearType;
            cert.reason = format!("codim I1(phi) = {} > ht I_f = {}", c, height);
        }
        Some(c) => {
            cert.verdict = Verdict::NotLinearType;
            cert.reason = format!("codim I1(phi) = {} <= ht I_f = {}", c, height);
        }
    }
    Ok(cert)
}

/// Options for [`analyze_family`].
#[derive(Clone, Debug)]
pub struct FamilyOptions {
    pub seed: u64,
    pub samples: usize,
    /// Integer parameter values are drawn from `-range..=range`.
    pub range: i64,
    /// Pair-reduction cap for the optional full saturation `𝓘 : 𝔪^∞`.
    pub saturation_limit: u64,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions { seed: 1, samples: 2, range: 9, saturation_limit: 200 }
    }
}

#[derive(Clone, Debug)]
pub struct MemberReport {
    pub alpha: Vec<Rational>,
    pub member: Polynomial,
    pub certificate: LinearTypeCertificate,
    /// `codim 𝓘(α)` in the geometric ring.
    pub specialized_codim: Option<usize>,
    /// `𝓘(α) ⊊ I₁(φ_α)`.
    pub strict_specialization: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub f: Polynomial,
    pub content_one: bool,
    pub codim_gradient: Option<usize>,
    pub codim_entries: Option<usize>,
    pub entries: Ideal,
    pub syzygies_in_maximal_ideal: bool,
    /// `𝓘 : v^∞` for each geometric variable `v`.
    pub variable_saturations: Vec<Ideal>,
    /// `𝓘 : 𝔪^∞` when it finished under the work limit.
    pub saturation: Option<Ideal>,
    pub saturation_note: String,
    /// `(𝓘 : 𝔪^∞) ∩ k[u]`, in the parameter ring (or the geometric-free ring when there are none).
    pub contraction: Ideal,
    pub contraction_codim: Option<usize>,
    pub contraction_nonzero: bool,
    /// Whether the product of the degeneration constraints and the contraction have the same radical
    /// (`constraint ∈ √contraction`, `contraction ⊆ √constraint`).
    pub degeneration_comparison: Option<(bool, bool)>,
    pub members: Vec<MemberReport>,
    pub seed: u64,
    pub warnings: Vec<String>,
}

impl FamilyReport {
    /// `codim 𝓘 = n`.
    pub fn entries_full(&self) -> bool {
        self.codim_entries == Some(self.f.ring().block_indices(GEOM).len())
    }

    /// The sampled members agree; `None` when they disagree or none were sampled.
    pub fn sampled_linear_type(&self) -> Option<bool> {
        let mut it = self.members.iter().map(|m| m.certificate.verdict == Verdict::LinearType);
        let first = it.next()?;
        it.all(|v| v == first).then_some(first)
    }

    /// Generic-member verdict from the codimension of `𝓘`.
    pub fn generic_verdict(&self) -> Verdict {
        if self.entries_full() {
            Verdict::LinearType
        } else {
            Verdict::NotLinearType
        }
    }

    /// The three characterizations of a linear-type general member agree.
    pub fn consistent(&self) -> bool {
        let a = self.entries_full();
        a == self.contraction_nonzero && self.sampled_linear_type() == Some(a)
    }
}

fn geom_and_params(ring: &RingContext) -> Result<(Vec<usize>, Vec<usize>)> {
    let geom = ring.require_block(GEOM)?.range().collect();
    Ok((geom, ring.block_indices(PARAM)))
}

/// The coefficients of `f` as a polynomial in the geometric variables.
fn geometric_coefficients(f: &Polynomial, geom: &[usize]) -> Vec<Polynomial> {
    let ring = f.ring();
    let mut groups: BTreeMap<Vec<u16>, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let key: Vec<u16> = geom.iter().map(|&i| m.exponent(i)).collect();
        let mut rest = m.clone();
        for &i in geom {
            rest.set_exponent(i, 0);
        }
        groups.entry(key).or_default().push((rest, c.clone()));
    }
    groups.into_values().map(|t| Polynomial::from_terms(ring, t)).collect()
}

/// Content one in the parameters: the coefficient ideal is the unit ideal or has codim ≥ 2.
fn has_content_one(f: &Polynomial, geom: &[usize]) -> Result<bool> {
    let coeffs = Ideal::new(f.ring(), geometric_coefficients(f, geom))?;
    let d = coeffs.dimension()?;
    Ok(d.is_empty() || d.codim().is_some_and(|c| c >= 2))
}

fn in_maximal_ideal(phi: &PolyMatrix, geom: &[usize]) -> bool {
    phi.entries().iter().all(|e| e.terms().iter().all(|(m, _)| geom.iter().any(|&i| m.exponent(i) > 0)))
}

pub fn analyze_family(f: &Polynomial, constraints: &[Polynomial], opts: &FamilyOptions) -> Result<FamilyReport> {
    let ring = f.ring();
    let (geom, params) = geom_and_params(ring)?;
    match f.homogeneity_in(&geom) {
        Homogeneity::Homogeneous(d) if d >= 1 => {}
        Homogeneity::Zero => return Err(Error::ZeroIdeal("the family polynomial is zero".into())),
        _ => return Err(Error::NotHomogeneous(f.to_string())),
    }
    let mut warnings = Vec::new();
    let content_one = has_content_one(f, &geom)?;
    if !content_one {
        warnings.push("the parameter coefficients share a common factor".into());
    }
    let gens: Vec<Polynomial> = geom.iter().map(|&i| f.derivative_at(i)).filter(|p| !p.is_zero()).collect();
    let i_f = Ideal::new(ring, gens.clone())?;
    let codim_gradient = i_f.dimension()?.codim();
    if codim_gradient != Some(2) {
        warnings.push(format!("codim I_F = {:?}, expected 2", codim_gradient));
    }
    let phi = syzygies(ring, &gens)?;
    let syzygies_in_maximal_ideal = in_maximal_ideal(&phi, &geom);
    let entries = phi.minors(1)?.reduced()?;
    let codim_entries = entries.dimension()?.codim();

    let pieces = match entries.variable_saturations(&geom)? {
        Some(p) => p,
        None => vec![entries.saturate(&Ideal::of_variables(ring, &geom))?.0],
    };
    let (contraction, contraction_nonzero, contraction_codim) = contract(ring, &pieces, &params)?;
    let full = with_work_limit(opts.saturation_limit, || entries.saturate(&Ideal::of_variables(ring, &geom)));
    let (saturation, saturation_note) = match full {
        Ok((s, k)) => (Some(s), format!("saturated at exponent {}", k)),
        Err(Error::ResourceExhausted { limit }) => (
            None,
            format!("full saturation not finished within {} pair reductions; contraction taken from the per-variable saturations", limit),
        ),
        Err(e) => return Err(e),
    };

    let degeneration_comparison = if constraints.is_empty() || params.is_empty() || !contraction_nonzero {
        None
    } else {
        let mut prod = Polynomial::one(ring);
        for c in constraints {
            prod = &prod * c;
        }
        let prod = prod.restrict(contraction.ring())?;
        let forward = contraction.is_unit()? || radical_member(&prod, contraction.generators())?;
        let mut backward = true;
        for g in contraction.generators() {
            if !radical_member(g, std::slice::from_ref(&prod))? {
                backward = false;
                break;
            }
        }
        Some((forward, backward))
    };

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut members = Vec::new();
    let avoid: Vec<Polynomial> = if contraction_nonzero && !params.is_empty() {
        contraction.generators().iter().map(|g| g.embed(ring)).collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    for _ in 0..opts.samples {
        let alpha = sample_alpha(&mut rng, &params, constraints, &avoid, opts.range)?;
        members.push(evaluate_member_with(f, &entries, &alpha)?);
        if params.is_empty() {
            break;
        }
    }
    Ok(FamilyReport {
        f: f.clone(),
        content_one,
        codim_gradient,
        codim_entries,
        entries,
        syzygies_in_maximal_ideal,
        variable_saturations: pieces,
        saturation,
        saturation_note,
        contraction,
        contraction_codim,
        contraction_nonzero,
        degeneration_comparison,
        members,
        seed: opts.seed,
        warnings,
    })
}

/// `(∩ pieces) ∩ k[u] = ∩ (piece ∩ k[u])`.
fn contract(ring: &RingContext, pieces: &[Ideal], params: &[usize]) -> Result<(Ideal, bool, Option<usize>)> {
    let geom = ring.block_indices(GEOM);
    if params.is_empty() {
        let mut unit = true;
        for p in pieces {
            unit &= p.is_unit()?;
        }
        let target = ring.without(&geom)?;
        let c = if unit { Ideal::unit(&target) } else { Ideal::zero(&target) };
        return Ok((c, unit, None));
    }
    let mut acc: Option<Ideal> = None;
    for p in pieces {
        let c = p.eliminate(GEOM)?;
        acc = Some(match acc {
            None => c,
            Some(a) if a.is_zero() || c.is_zero() => Ideal::zero(a.ring()),
            Some(a) if c.contains_ideal(&a)? => a,
            Some(a) if a.contains_ideal(&c)? => c,
            Some(a) => a.intersect(&c)?.reduced()?,
        });
    }
    let c = acc.expect("at least one geometric variable").reduced()?;
    let nonzero = !c.is_zero();
    let codim = c.dimension()?.codim();
    Ok((c, nonzero, codim))
}

fn sample_alpha(
    rng: &mut ChaCha8Rng,
    params: &[usize],
    constraints: &[Polynomial],
    avoid: &[Polynomial],
    range: i64,
) -> Result<Vec<Rational>> {
    if params.is_empty() {
        return Ok(Vec::new());
    }
    for _ in 0..10_000 {
        let alpha: Vec<Rational> = params.iter().map(|_| int(rng.gen_range(-range..=range))).collect();
        let vanishes = |p: &Polynomial| p.substitute_values(params, &alpha).is_zero();
        if constraints.iter().any(vanishes) {
            continue;
        }
        if !avoid.is_empty() && avoid.iter().all(vanishes) {
            continue;
        }
        return Ok(alpha);
    }
    Err(Error::InvalidArgument("no admissible parameter value found".into()))
}

/// Specializes the family at `alpha` and certifies the member.
pub fn evaluate_member(f: &Polynomial, alpha: &[Rational]) -> Result<MemberReport> {
    let ring = f.ring();
    let (geom, _) = geom_and_params(ring)?;
    let gens: Vec<Polynomial> = geom.iter().map(|&i| f.derivative_at(i)).filter(|p| !p.is_zero()).collect();
    let entries = syzygies(ring, &gens)?.minors(1)?;
    evaluate_member_with(f, &entries, alpha)
}

fn evaluate_member_with(f: &Polynomial, entries: &Ideal, alpha: &[Rational]) -> Result<MemberReport> {
    let ring = f.ring();
    let params = ring.block_indices(PARAM);
    if alpha.len() != params.len() {
        return Err(Error::ArityMismatch { expected: params.len(), got: alpha.len() });
    }
    let (member, specialized) = if params.is_empty() {
        (f.clone(), entries.clone())
    } else {
        (f.evaluate_block(PARAM, alpha)?, entries.evaluate_block(PARAM, alpha)?)
    };
    let gp = gradient_pair(&member)?;
    let certificate = linear_type_certificate(&gp)?;
    let specialized_codim = specialized.dimension()?.codim();
    let strict_specialization = match &certificate.entries_ideal {
        Some(e) => Some(!specialized.contains_ideal(e)?),
        None => None,
    };
    Ok(MemberReport { alpha: alpha.to_vec(), member, certificate, specialized_codim, strict_specialization })
}
