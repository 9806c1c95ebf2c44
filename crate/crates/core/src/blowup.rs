//! Symmetric, Rees and embedded Aluffi algebras of a pair `J ⊆ I`, presented as quotients of
//! `R[T_1..T_n]`, and the invariants read off them.

use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{radical_member, LiftData};
use crate::ideal::{DimensionReport, Ideal};
use crate::linalg::graded_dimension;
use crate::poly::{Homogeneity, Polynomial};
use crate::ring::{RingContext, AUX, FIBER, GEOM};
use crate::syzygy::syzygies;

/// An ideal pair `J ⊆ I` with explicit containment certificates `a_k = Σ_j c_kj b_j`.
#[derive(Clone, Debug)]
pub struct PairInput {
    ring: RingContext,
    i_gens: Vec<Polynomial>,
    j_gens: Vec<Polynomial>,
    certificates: Vec<Vec<Polynomial>>,
    cache: Arc<Cache>,
}

#[derive(Debug, Default)]
struct Cache {
    fiber: OnceLock<RingContext>,
    rees: OnceLock<Ideal>,
    sym_part: OnceLock<Ideal>,
    relative_rees: OnceLock<Ideal>,
}

impl PairInput {
    /// Solves for certificates by lifting each generator of `J` against `I`.
    pub fn new(ring: &RingContext, i_gens: Vec<Polynomial>, j_gens: Vec<Polynomial>) -> Result<Self> {
        check_inputs(ring, &i_gens, &j_gens)?;
        let lift = LiftData::new(ring, &i_gens)?;
        let mut certificates = Vec::with_capacity(j_gens.len());
        for a in &j_gens {
            let c = lift.lift(a).ok_or_else(|| {
                Error::NotContained(a.to_string(), format!("({})", join(&i_gens)))
            })?;
            certificates.push(c);
        }
        Ok(Self::assemble(ring, i_gens, j_gens, certificates))
    }

    /// Uses the given certificates after checking that each reproduces its generator.
    pub fn with_certificates(
        ring: &RingContext,
        i_gens: Vec<Polynomial>,
        j_gens: Vec<Polynomial>,
        certificates: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        check_inputs(ring, &i_gens, &j_gens)?;
        if certificates.len() != j_gens.len() {
            return Err(Error::ArityMismatch { expected: j_gens.len(), got: certificates.len() });
        }
        for (k, (a, c)) in j_gens.iter().zip(&certificates).enumerate() {
            if c.len() != i_gens.len() || c.iter().any(|p| p.ring() != ring) {
                return Err(Error::CertificateFailure { index: k });
            }
            if &combine(ring, c, &i_gens) != a {
                return Err(Error::CertificateFailure { index: k });
            }
        }
        Ok(Self::assemble(ring, i_gens, j_gens, certificates))
    }

    fn assemble(
        ring: &RingContext,
        i_gens: Vec<Polynomial>,
        j_gens: Vec<Polynomial>,
        certificates: Vec<Vec<Polynomial>>,
    ) -> Self {
        PairInput { ring: ring.clone(), i_gens, j_gens, certificates, cache: Arc::default() }
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn i_gens(&self) -> &[Polynomial] {
        &self.i_gens
    }

    pub fn j_gens(&self) -> &[Polynomial] {
        &self.j_gens
    }

    pub fn certificates(&self) -> &[Vec<Polynomial>] {
        &self.certificates
    }

    pub fn i_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.i_gens.clone()).expect("checked ring")
    }

    pub fn j_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.j_gens.clone()).expect("checked ring")
    }

    /// `R[T_1..T_n]`, one fiber variable per generator of `I`.
    pub fn fiber_ring(&self) -> &RingContext {
        self.cache.fiber.get_or_init(|| {
            let names: Vec<String> = (1..=self.i_gens.len()).map(|i| format!("T{}", i)).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            self.ring.extend(FIBER, &refs).expect("fresh fiber block")
        })
    }

    /// The fiber variables as polynomials of [`Self::fiber_ring`].
    pub fn fiber_vars(&self) -> Vec<Polynomial> {
        let ext = self.fiber_ring();
        let start = self.ring.arity();
        (0..self.i_gens.len()).map(|i| Polynomial::var_at(ext, start + i)).collect()
    }

    fn embed_all(&self, gens: &[Polynomial]) -> Vec<Polynomial> {
        gens.iter().map(|g| g.embed(self.fiber_ring()).expect("base ring embeds")).collect()
    }

    /// The lifts `ã = Σ c_j T_j` of the generators of `J`.
    pub fn tilde_j(&self) -> Vec<Polynomial> {
        let ts = self.fiber_vars();
        self.certificates.iter().map(|c| combine(self.fiber_ring(), &self.embed_all(c), &ts)).collect()
    }

    /// Same pair with the certificates replaced (checked).
    pub fn replace_certificates(&self, certificates: Vec<Vec<Polynomial>>) -> Result<Self> {
        Self::with_certificates(&self.ring, self.i_gens.clone(), self.j_gens.clone(), certificates)
    }
}

fn check_inputs(ring: &RingContext, i_gens: &[Polynomial], j_gens: &[Polynomial]) -> Result<()> {
    if ring.blocks().len() != 1 || ring.blocks()[0].name != GEOM {
        return Err(Error::InvalidRing("pairs live in a ring with only a geometric block".into()));
    }
    if i_gens.is_empty() || i_gens.iter().any(|b| b.is_zero()) {
        return Err(Error::ZeroIdeal("the generators of I must be nonzero".into()));
    }
    if i_gens.iter().chain(j_gens).any(|p| p.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

fn combine(ring: &RingContext, coeffs: &[Polynomial], gens: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for (c, g) in coeffs.iter().zip(gens) {
        if !c.is_zero() {
            acc = &acc + &(c * g);
        }
    }
    acc
}

fn join(gens: &[Polynomial]) -> String {
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

/// Kernel of `R[T] → R[s]`, `T_i ↦ b_i s`: eliminate `s` from `(T_i - b_i s)`.
pub fn rees_ideal(pair: &PairInput) -> Result<Ideal> {
    if let Some(r) = pair.cache.rees.get() {
        return Ok(r.clone());
    }
    let r = rees_kernel(pair, &[])?;
    Ok(pair.cache.rees.get_or_init(|| r).clone())
}

/// Kernel of `R[T] → (R/J)[s]`: the presentation of the Rees algebra of `I/J` over `R/J`.
pub fn relative_rees_ideal(pair: &PairInput) -> Result<Ideal> {
    if let Some(r) = pair.cache.relative_rees.get() {
        return Ok(r.clone());
    }
    let r = rees_kernel(pair, &pair.j_gens)?;
    Ok(pair.cache.relative_rees.get_or_init(|| r).clone())
}

fn rees_kernel(pair: &PairInput, modulo: &[Polynomial]) -> Result<Ideal> {
    let ext = pair.fiber_ring();
    let big = ext.extend(AUX, &["s"])?;
    let s = Polynomial::var_at(&big, ext.arity());
    let mut gens = Vec::new();
    for (t, b) in pair.fiber_vars().iter().zip(&pair.i_gens) {
        gens.push(&t.embed(&big)? - &(&b.embed(&big)? * &s));
    }
    for a in modulo {
        gens.push(a.embed(&big)?);
    }
    let out = Ideal::new(&big, gens)?.eliminate_vars(&[ext.arity()])?;
    out.move_to(ext)?.reduced()
}

/// The linear forms `Σ φ_ij T_i` over the syzygy columns of the generators of `I`.
pub fn sym_part(pair: &PairInput) -> Result<Ideal> {
    if let Some(r) = pair.cache.sym_part.get() {
        return Ok(r.clone());
    }
    let ext = pair.fiber_ring();
    let ts = pair.fiber_vars();
    let gens = if pair.i_gens.len() == 1 {
        Vec::new()
    } else {
        let phi = syzygies(&pair.ring, &pair.i_gens)?;
        phi.columns().iter().map(|col| combine(ext, &pair.embed_all(col), &ts)).collect()
    };
    let r = Ideal::new(ext, gens)?;
    Ok(pair.cache.sym_part.get_or_init(|| r).clone())
}

/// `𝓙₁ + (J, J̃)`, the symmetric-algebra side of the presentation.
pub fn sym_ideal(pair: &PairInput) -> Result<Ideal> {
    sym_part(pair)?.sum(&j_part(pair)?)
}

fn j_part(pair: &PairInput) -> Result<Ideal> {
    let mut gens = pair.embed_all(&pair.j_gens);
    gens.extend(pair.tilde_j());
    Ideal::new(pair.fiber_ring(), gens)
}

/// The three presentation ideals of `S ↠ A ↠ R` in `R[T]`.
#[derive(Clone, Debug)]
pub struct AluffiPresentation {
    pub ring: RingContext,
    pub sym_ideal: Ideal,
    pub rees_ideal: Ideal,
    pub aluffi_ideal: Ideal,
    pub tilde_j: Vec<Polynomial>,
}

pub fn aluffi_ideal(pair: &PairInput) -> Result<AluffiPresentation> {
    let jp = j_part(pair)?;
    let rees = rees_ideal(pair)?;
    Ok(AluffiPresentation {
        ring: pair.fiber_ring().clone(),
        sym_ideal: sym_part(pair)?.sum(&jp)?,
        aluffi_ideal: rees.sum(&jp)?,
        rees_ideal: rees,
        tilde_j: pair.tilde_j(),
    })
}

pub fn aluffi_dimension(pres: &AluffiPresentation) -> Result<DimensionReport> {
    pres.aluffi_ideal.dimension()
}

/// One graded piece `(J ∩ I^t) / J I^(t-1)` of the Valabrega–Valla module.
#[derive(Clone, Debug)]
pub struct TorsionPiece {
    pub t: u32,
    /// Generators of `J ∩ I^t` outside `J I^(t-1)`; empty iff the piece is zero.
    pub witnesses: Vec<Polynomial>,
    /// For each witness, the least `k ≤ B` with `I^k · w ⊆ J I^(t-1)`.
    pub annihilator_exponents: Vec<Option<u32>>,
    /// `(d, dim_k of the piece in internal degree d)` for `d ≤ cap`; empty for inhomogeneous pairs.
    pub degree_dims: Vec<(u32, usize)>,
}

impl TorsionPiece {
    pub fn is_zero(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct TorsionReport {
    pub bound: u32,
    pub degree_cap: u32,
    pub pieces: Vec<TorsionPiece>,
}

impl TorsionReport {
    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(|p| p.is_zero())
    }

    pub fn first_nonzero(&self) -> Option<&TorsionPiece> {
        self.pieces.iter().find(|p| !p.is_zero())
    }
}

/// `J ∩ I^t` for `t = 0..=top`, shared by the degree-bounded checks.
struct Powers {
    i: Ideal,
    j: Ideal,
    powers: Vec<Ideal>,
    meets: Vec<Option<Ideal>>,
}

impl Powers {
    fn new(pair: &PairInput) -> Self {
        let i = pair.i_ideal();
        Powers { j: pair.j_ideal(), powers: vec![i.power(0)], i, meets: vec![None] }
    }

    fn power(&mut self, t: u32) -> &Ideal {
        while self.powers.len() <= t as usize {
            let next = self.powers.last().unwrap().product(&self.i).expect("same ring");
            self.powers.push(next);
        }
        &self.powers[t as usize]
    }

    fn meet(&mut self, t: u32) -> Result<Ideal> {
        while self.meets.len() <= t as usize {
            self.meets.push(None);
        }
        if let Some(m) = &self.meets[t as usize] {
            return Ok(m.clone());
        }
        let m = if t <= 1 {
            self.j.clone()
        } else {
            let it = self.power(t).clone();
            self.j.intersect(&it)?.reduced()?
        };
        self.meets[t as usize] = Some(m.clone());
        Ok(m)
    }
}

fn max_degree(gens: &[Polynomial]) -> u32 {
    gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
}

fn all_homogeneous(gens: &[Polynomial]) -> bool {
    let vars: Vec<usize> = (0..gens.first().map_or(0, |g| g.ring().arity())).collect();
    gens.iter().all(|g| matches!(g.homogeneity_in(&vars), Homogeneity::Homogeneous(_)))
}

/// Valabrega–Valla pieces for `2 ≤ t ≤ bound`, with internal-degree dimensions up to
/// `2 · (max generator degree)`.
pub fn vv_pieces(pair: &PairInput, bound: u32) -> Result<TorsionReport> {
    let cap = 2 * max_degree(&pair.i_gens).max(max_degree(&pair.j_gens));
    vv_pieces_with_cap(pair, bound, cap)
}

pub fn vv_pieces_with_cap(pair: &PairInput, bound: u32, cap: u32) -> Result<TorsionReport> {
    if bound < 2 {
        return Err(Error::InvalidArgument("the torsion bound must be at least 2".into()));
    }
    let homogeneous = all_homogeneous(&pair.i_gens) && all_homogeneous(&pair.j_gens);
    let mut pw = Powers::new(pair);
    let mut pieces = Vec::new();
    for t in 2..=bound {
        let meet = pw.meet(t)?;
        let below = pw.power(t - 1).clone();
        let lower = pw.j.product(&below)?;
        let mut witnesses = Vec::new();
        for g in meet.generators() {
            if lower.is_zero() || !lower.contains(g)? {
                witnesses.push(g.clone());
            }
        }
        let mut annihilator_exponents = Vec::with_capacity(witnesses.len());
        for w in &witnesses {
            annihilator_exponents.push(annihilator_exponent(&mut pw, &lower, w, bound)?);
        }
        let degree_dims = if homogeneous && !witnesses.is_empty() {
            (0..=cap)
                .map(|d| (d, graded_dimension(meet.generators(), d) - graded_dimension(lower.generators(), d)))
                .collect()
        } else {
            Vec::new()
        };
        pieces.push(TorsionPiece { t, witnesses, annihilator_exponents, degree_dims });
    }
    Ok(TorsionReport { bound, degree_cap: cap, pieces })
}

fn annihilator_exponent(pw: &mut Powers, target: &Ideal, w: &Polynomial, bound: u32) -> Result<Option<u32>> {
    if target.is_zero() {
        return Ok(None);
    }
    for k in 1..=bound {
        let mut all = true;
        for g in pw.power(k).clone().generators() {
            if !target.contains(&(g * w))? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Whether the syzygy forms generate the whole Rees ideal of `I`.
pub fn is_linear_type(pair: &PairInput) -> Result<bool> {
    let sym = sym_part(pair)?;
    let rees = rees_ideal(pair)?;
    if rees.is_zero() {
        return Ok(true);
    }
    if sym.is_zero() {
        return Ok(false);
    }
    sym.contains_ideal(&rees)
}

/// Least `k ≤ bound` with `J ∩ I^t = (J ∩ I^k) I^(t-k)` for every `k ≤ t ≤ bound + 1`, or `None`.
pub fn artin_rees_number(pair: &PairInput, bound: u32) -> Result<Option<u32>> {
    if bound < 1 {
        return Err(Error::InvalidArgument("the Artin-Rees bound must be at least 1".into()));
    }
    if pair.j_ideal().is_zero() {
        return Ok(Some(0));
    }
    let mut pw = Powers::new(pair);
    'k: for k in 1..=bound {
        let base = pw.meet(k)?;
        for t in k + 1..=bound + 1 {
            let lhs = pw.meet(t)?;
            let rhs = base.product(&pw.power(t - k).clone())?;
            if !rhs.contains_ideal(&lhs)? {
                continue 'k;
            }
        }
        return Ok(Some(k));
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct StandardBaseReport {
    /// The `I`-order of each generator of `J`, capped at `bound + 1`.
    pub nu: Vec<u32>,
    /// `(t, J ∩ I^t = Σ a_i I^(t - ν_i))` for `1 ≤ t ≤ bound`.
    pub degrees: Vec<(u32, bool)>,
}

impl StandardBaseReport {
    pub fn passes(&self) -> bool {
        self.degrees.iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<u32> {
        self.degrees.iter().find(|(_, ok)| !ok).map(|(t, _)| *t)
    }
}

pub fn standard_base_check(pair: &PairInput, bound: u32) -> Result<StandardBaseReport> {
    if bound < 1 {
        return Err(Error::InvalidArgument("the standard-base bound must be at least 1".into()));
    }
    let mut pw = Powers::new(pair);
    let mut nu = Vec::with_capacity(pair.j_gens.len());
    for a in &pair.j_gens {
        let mut order = 1;
        while order <= bound && pw.power(order + 1).clone().contains(a)? {
            order += 1;
        }
        nu.push(order);
    }
    let mut degrees = Vec::new();
    for t in 1..=bound {
        let lhs = pw.meet(t)?;
        let mut rhs = Ideal::zero(&pair.ring);
        for (a, &v) in pair.j_gens.iter().zip(&nu) {
            let p = pw.power(t.saturating_sub(v)).clone();
            rhs = rhs.sum(&p.product(&Ideal::principal(a))?)?;
        }
        let ok = rhs.contains_ideal(&lhs)? && lhs.contains_ideal(&rhs)?;
        degrees.push((t, ok));
    }
    Ok(StandardBaseReport { nu, degrees })
}

fn t_degree(pair: &PairInput, g: &Polynomial) -> u32 {
    let start = pair.ring.arity();
    g.terms().iter().map(|(m, _)| m.degree_in(start, pair.i_gens.len())).max().unwrap_or(0)
}

/// Least `d` such that the elements of T-degree at most `d` in the reduced Groebner basis of
/// `ideal` generate it; `ideal` must be homogeneous in the T-grading.
fn generation_degree(pair: &PairInput, ideal: &Ideal) -> Result<u32> {
    let gb = ideal.reduced()?;
    let gens = gb.generators();
    let top = gens.iter().map(|g| t_degree(pair, g)).max().unwrap_or(0);
    for d in 1..top {
        let sub: Vec<Polynomial> = gens.iter().filter(|g| t_degree(pair, g) <= d).cloned().collect();
        let sub = Ideal::new(ideal.ring(), sub)?;
        if !sub.is_zero() && sub.contains_ideal(&gb)? {
            return Ok(d);
        }
    }
    Ok(top.max(1))
}

/// Relation type of `I`: the largest T-degree needed to generate its Rees ideal, if `≤ bound`.
pub fn relation_type(pair: &PairInput, bound: u32) -> Result<Option<u32>> {
    let d = generation_degree(pair, &rees_ideal(pair)?)?;
    Ok((d <= bound).then_some(d))
}

/// Relation type of the Rees algebra of `I/J` over `R/J`, from its presentation modulo `J`.
pub fn relative_relation_type(pair: &PairInput, bound: u32) -> Result<Option<u32>> {
    let rel = relative_rees_ideal(pair)?;
    let fiber: Vec<Polynomial> =
        rel.generators().iter().filter(|g| t_degree(pair, g) > 0).cloned().collect();
    let rel = Ideal::new(rel.ring(), fiber)?.sum(&Ideal::new(pair.fiber_ring(), pair.embed_all(&pair.j_gens))?)?;
    let d = generation_degree(pair, &rel)?;
    Ok((d <= bound).then_some(d))
}

/// The special fiber ideal in `k[T]`: the Rees ideal with the geometric variables set to 0.
pub fn fiber_ideal(pair: &PairInput) -> Result<Ideal> {
    for b in &pair.i_gens {
        if !b.constant_term().is_zero() {
            return Err(Error::NotContained(b.to_string(), "the ideal of the variables".into()));
        }
    }
    let zeros = vec![num_traits::zero(); pair.ring.arity()];
    rees_ideal(pair)?.evaluate_block(GEOM, &zeros)
}

/// Analytic spread `ℓ(I) = dim k[T] / fiber ideal`.
pub fn analytic_spread(pair: &PairInput) -> Result<usize> {
    let f = fiber_ideal(pair)?;
    let dim = if f.is_zero() { Some(pair.i_gens.len()) } else { f.dimension()?.dim() };
    dim.ok_or_else(|| Error::UnitIdeal("special fiber".into()))
}

#[derive(Clone, Debug)]
pub struct ComponentCheck {
    pub candidate: Ideal,
    pub contains_aluffi: bool,
    pub dimension: DimensionReport,
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub checks: Vec<ComponentCheck>,
    pub aluffi_dimension: DimensionReport,
    /// Every generator of the presentation ideal lies in the radical of the intersection.
    pub covered: bool,
    /// Every generator of the intersection lies in the radical of the presentation ideal.
    pub exhausts: bool,
}

impl ComponentReport {
    /// The candidates cut out exactly `V(aluffi_ideal)`.
    pub fn complete(&self) -> bool {
        self.covered && self.exhausts
    }

    pub fn equidimensional(&self) -> bool {
        let d = self.aluffi_dimension.dim();
        self.checks.iter().all(|c| c.dimension.dim() == d)
    }
}

pub fn verify_component_list(pres: &AluffiPresentation, candidates: &[Ideal]) -> Result<ComponentReport> {
    let a = &pres.aluffi_ideal;
    let mut checks = Vec::with_capacity(candidates.len());
    for p in candidates {
        if p.ring() != a.ring() {
            return Err(Error::RingMismatch);
        }
        checks.push(ComponentCheck {
            candidate: p.clone(),
            contains_aluffi: p.contains_ideal(a)?,
            dimension: p.dimension()?,
        });
    }
    let mut meet: Option<Ideal> = None;
    for p in candidates {
        meet = Some(match meet {
            None => p.clone(),
            Some(m) => m.intersect(p)?.reduced()?,
        });
    }
    let (covered, exhausts) = match meet {
        None => (false, false),
        Some(m) => {
            let mut covered = true;
            for g in a.generators() {
                if !radical_member(g, m.generators())? {
                    covered = false;
                    break;
                }
            }
            let mut exhausts = true;
            for g in m.generators() {
                if !radical_member(g, a.generators())? {
                    exhausts = false;
                    break;
                }
            }
            (covered, exhausts)
        }
    };
    Ok(ComponentReport { checks, aluffi_dimension: a.dimension()?, covered, exhausts })
}

/// `p̃ = ⊕_t (p ∩ I^t) T^t` cut off at T-degree `bound`, together with the Rees ideal.
#[derive(Clone, Debug)]
pub struct TruncatedLift {
    pub ideal: Ideal,
    pub truncated_at: u32,
}

pub fn truncated_prime_lift(pair: &PairInput, p: &Ideal, bound: u32) -> Result<TruncatedLift> {
    if p.ring() != &pair.ring {
        return Err(Error::RingMismatch);
    }
    let ext = pair.fiber_ring();
    let ts = pair.fiber_vars();
    let i = pair.i_ideal();
    let mut gens = pair.embed_all(p.generators());
    gens.extend(rees_ideal(pair)?.generators().iter().cloned());
    for t in 1..=bound {
        let alphas = multisets(pair.i_gens.len(), t);
        let products: Vec<Polynomial> = alphas
            .iter()
            .map(|a| a.iter().fold(Polynomial::one(&pair.ring), |acc, &k| &acc * &pair.i_gens[k]))
            .collect();
        let lift = LiftData::new(&pair.ring, &products)?;
        let meet = p.intersect(&i.power(t))?.reduced()?;
        for g in meet.generators() {
            let c = lift.lift(g).ok_or_else(|| Error::NotContained(g.to_string(), format!("I^{}", t)))?;
            let mut acc = Polynomial::zero(ext);
            for (ck, a) in c.iter().zip(&alphas) {
                if ck.is_zero() {
                    continue;
                }
                let mono = a.iter().fold(Polynomial::one(ext), |m, &k| &m * &ts[k]);
                acc = &acc + &(&ck.embed(ext)? * &mono);
            }
            gens.push(acc);
        }
    }
    Ok(TruncatedLift { ideal: Ideal::new(ext, gens)?, truncated_at: bound })
}

/// Nondecreasing index sequences of length `t` over `0..n`.
fn multisets(n: usize, t: u32) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..t {
        let mut next = Vec::new();
        for s in &out {
            let start = s.last().copied().unwrap_or(0);
            for k in start..n {
                let mut s2 = s.clone();
                s2.push(k);
                next.push(s2);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial_list;

    fn pair(vars: &[&str], i: &str, j: &str) -> PairInput {
        let r = RingContext::geometric(vars).unwrap();
        let i = parse_polynomial_list(&r, i).unwrap();
        let j = if j.is_empty() { Vec::new() } else { parse_polynomial_list(&r, j).unwrap() };
        PairInput::new(&r, i, j).unwrap()
    }

    fn fiber(p: &PairInput, s: &str) -> Ideal {
        let r = p.fiber_ring();
        Ideal::new(r, parse_polynomial_list(r, s).unwrap()).unwrap()
    }

    #[test]
    fn rees_of_a_regular_sequence() {
        let p = pair(&["x", "y"], "x, y", "x");
        let rees = rees_ideal(&p).unwrap();
        assert!(rees.equals(&fiber(&p, "x*T2 - y*T1")).unwrap());
        assert!(is_linear_type(&p).unwrap());
        let pres = aluffi_ideal(&p).unwrap();
        assert!(pres.aluffi_ideal.equals(&fiber(&p, "x, T1")).unwrap());
        assert_eq!(aluffi_dimension(&pres).unwrap().dim(), Some(2));
        assert!(vv_pieces(&p, 4).unwrap().is_zero());
        assert_eq!(artin_rees_number(&p, 4).unwrap(), Some(1));
        let sb = standard_base_check(&p, 4).unwrap();
        assert_eq!(sb.nu, vec![1]);
        assert!(sb.passes());
    }

    #[test]
    fn rees_agrees_with_saturated_symmetric_ideal() {
        let p = pair(&["x", "y"], "x^2, x*y, y^2", "");
        let rees = rees_ideal(&p).unwrap();
        let b = p.i_gens()[0].embed(p.fiber_ring()).unwrap();
        let sat = sym_part(&p).unwrap().saturate_principal(&b).unwrap();
        assert!(rees.equals(&sat).unwrap());
        // The 2x2 minors of [[x, T1, T2], [y, T2, T3]]: two linear forms and the conic T1*T3 - T2^2.
        let minors = fiber(&p, "x*T2 - y*T1, x*T3 - y*T2, T1*T3 - T2^2");
        assert!(rees.equals(&minors).unwrap());
        assert_eq!(relation_type(&p, 4).unwrap(), Some(2));
        assert_eq!(relation_type(&p, 1).unwrap(), None);
        assert!(!is_linear_type(&p).unwrap());
        assert_eq!(relation_type(&pair(&["x", "y"], "x, y", ""), 4).unwrap(), Some(1));
    }

    #[test]
    fn four_points_torsion_in_degree_two() {
        let p = pair(
            &["x", "y", "z"],
            "x^2 - x*z, y^2 - y*z, x*(2*y - z), y*(2*x - z), (2*x - z)*(2*y - z)",
            "x^2 - x*z, y^2 - y*z",
        );
        let rep = vv_pieces(&p, 2).unwrap();
        let piece = &rep.pieces[0];
        assert_eq!(piece.t, 2);
        assert!(!piece.is_zero());
        assert!(piece.annihilator_exponents.iter().all(|k| k.is_some()));
        assert_eq!(artin_rees_number(&p, 1).unwrap(), None);
        let sb = standard_base_check(&p, 2).unwrap();
        assert_eq!(sb.nu, vec![1, 1]);
        assert_eq!(sb.first_failure(), Some(2));
    }

    #[test]
    fn artin_rees_of_a_square() {
        let p = pair(&["x"], "x", "x^2");
        assert_eq!(artin_rees_number(&p, 4).unwrap(), Some(2));
        let q = pair(&["x", "y"], "x, y", "x^2");
        let sb = standard_base_check(&q, 3).unwrap();
        assert_eq!(sb.nu, vec![2]);
        assert!(sb.passes());
        assert!(!vv_pieces(&q, 2).unwrap().is_zero());
    }

    #[test]
    fn spread_and_fiber() {
        assert_eq!(analytic_spread(&pair(&["x", "y"], "x^2, x*y", "")).unwrap(), 2);
        assert_eq!(analytic_spread(&pair(&["x", "y"], "x, y", "")).unwrap(), 2);
        assert_eq!(analytic_spread(&pair(&["x", "y"], "x^2, x*y, y^2", "")).unwrap(), 2);
        assert!(analytic_spread(&pair(&["x", "y"], "x + 1, y", "")).is_err());
    }

    #[test]
    fn certificates_are_checked() {
        let r = RingContext::geometric(&["x", "y"]).unwrap();
        let i = parse_polynomial_list(&r, "x, y").unwrap();
        let j = parse_polynomial_list(&r, "x*y").unwrap();
        let good = parse_polynomial_list(&r, "y, 0").unwrap();
        let bad = parse_polynomial_list(&r, "1, 0").unwrap();
        assert!(PairInput::with_certificates(&r, i.clone(), j.clone(), vec![good]).is_ok());
        assert!(matches!(
            PairInput::with_certificates(&r, i.clone(), j, vec![bad]),
            Err(Error::CertificateFailure { index: 0 })
        ));
        let outside = parse_polynomial_list(&r, "x + 1").unwrap();
        assert!(matches!(PairInput::new(&r, i, outside), Err(Error::NotContained(..))));
    }

    #[test]
    fn components_of_a_regular_pair() {
        let p = pair(&["x", "y"], "x, y", "x");
        let pres = aluffi_ideal(&p).unwrap();
        let rep = verify_component_list(&pres, &[fiber(&p, "x, T1")]).unwrap();
        assert!(rep.checks[0].contains_aluffi);
        assert_eq!(rep.checks[0].dimension.dim(), Some(2));
        assert!(rep.complete());
        let rep = verify_component_list(&pres, &[fiber(&p, "y")]).unwrap();
        assert!(!rep.checks[0].contains_aluffi);
        assert!(!rep.complete());
    }

    #[test]
    fn truncated_lift_contains_rees() {
        let p = pair(&["x", "y"], "x, y", "");
        let prime = Ideal::new(p.ring(), parse_polynomial_list(p.ring(), "x").unwrap()).unwrap();
        let lift = truncated_prime_lift(&p, &prime, 2).unwrap();
        assert!(lift.ideal.contains(&fiber(&p, "T1").generators()[0]).unwrap());
        assert!(lift.ideal.contains_ideal(&rees_ideal(&p).unwrap()).unwrap());
    }
}
