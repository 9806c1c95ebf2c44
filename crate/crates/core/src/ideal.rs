//! Ideals with a cached Groebner basis, and the ideal calculus built on it.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{radical_member, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Homogeneity, Polynomial, Rational};
use crate::ring::{RingContext, AUX};

#[derive(Clone)]
pub struct Ideal {
    ring: RingContext,
    gens: Vec<Polynomial>,
    gb: Arc<OnceLock<GroebnerBasis>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Krull dimension of `ring / I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimensionReport {
    /// `I = (1)`: the quotient is the zero ring and has no dimension.
    Empty { arity: usize },
    Proper { dim: usize, codim: usize, witness: Vec<String> },
}

impl DimensionReport {
    pub fn dim(&self) -> Option<usize> {
        match self {
            DimensionReport::Empty { .. } => None,
            DimensionReport::Proper { dim, .. } => Some(*dim),
        }
    }

    pub fn codim(&self) -> Option<usize> {
        match self {
            DimensionReport::Empty { .. } => None,
            DimensionReport::Proper { codim, .. } => Some(*codim),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, DimensionReport::Empty { .. })
    }
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionReport::Empty { .. } => write!(f, "empty"),
            DimensionReport::Proper { dim, codim, .. } => write!(f, "dim {} codim {}", dim, codim),
        }
    }
}

impl Ideal {
    pub fn new(ring: &RingContext, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Self::from_checked(ring, gens))
    }

    fn from_checked(ring: &RingContext, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: ring.clone(), gens, gb: Arc::new(OnceLock::new()) }
    }

    pub fn zero(ring: &RingContext) -> Self {
        Self::from_checked(ring, Vec::new())
    }

    pub fn unit(ring: &RingContext) -> Self {
        Self::from_checked(ring, vec![Polynomial::one(ring)])
    }

    pub fn principal(f: &Polynomial) -> Self {
        Self::from_checked(f.ring(), vec![f.clone()])
    }

    /// The ideal generated by the variables with the given indices.
    pub fn of_variables(ring: &RingContext, vars: &[usize]) -> Self {
        Self::from_checked(ring, vars.iter().map(|&i| Polynomial::var_at(ring, i)).collect())
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = GroebnerBasis::compute(&self.ring, &self.gens)?;
        let _ = self.gb.set(g);
        Ok(self.gb.get().expect("just set"))
    }

    /// The reduced Groebner basis as a new generating set.
    pub fn reduced(&self) -> Result<Ideal> {
        let gb = self.groebner()?;
        let out = Self::from_checked(&self.ring, gb.elements().to_vec());
        let _ = out.gb.set(gb.clone());
        Ok(out)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner()?.contains(f))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner()?.normal_form(f))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        let gb = self.groebner()?;
        Ok(other.gens.iter().all(|g| gb.contains(g)))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        radical_member(f, &self.gens)
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_checked(&self.ring, gens))
    }

    /// All pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ok(Self::from_checked(&self.ring, gens))
    }

    /// `I^t` generated by the products of `t` generators (with repetition, unordered);
    /// `I^0 = (1)`.
    pub fn power(&self, t: u32) -> Ideal {
        let mut cur: Vec<(usize, Polynomial)> = vec![(0, Polynomial::one(&self.ring))];
        for _ in 0..t {
            let mut next = Vec::new();
            for (start, p) in &cur {
                for (i, g) in self.gens.iter().enumerate().skip(*start) {
                    next.push((i, p * g));
                }
            }
            cur = next;
        }
        Self::from_checked(&self.ring, cur.into_iter().map(|(_, p)| p).collect())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    /// `I ∩ J`. Monomial ideals use pairwise lcms; everything else goes through elimination.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_monomial() && other.is_monomial() {
            let mut gens = Vec::new();
            for a in &self.gens {
                for b in &other.gens {
                    let m = a.leading_monomial().unwrap().lcm(b.leading_monomial().unwrap());
                    gens.push(m);
                }
            }
            return Ok(self.monomial_ideal(gens));
        }
        self.intersect_by_elimination(other)
    }

    /// `I ∩ J` as the elimination of `w` from `w I + (1 - w) J`.
    pub fn intersect_by_elimination(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.extend(AUX, &["w"])?;
        let w = Polynomial::var_at(&ext, self.ring.arity());
        let one_minus_w = &Polynomial::one(&ext) - &w;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&w * &g.embed(&ext)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_w * &g.embed(&ext)?);
        }
        let big = Ideal::from_checked(&ext, gens);
        let out = big.eliminate_vars(&[self.ring.arity()])?;
        out.move_to(&self.ring)
    }

    /// Minimal monomial generators from a list of monomials.
    fn monomial_ideal(&self, mut monos: Vec<Monomial>) -> Ideal {
        let order = self.ring.order();
        monos.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.compare(a, b)));
        monos.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for m in monos {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        let gens = kept.into_iter().map(|m| Polynomial::monomial(&self.ring, m, Rational::one())).collect();
        Self::from_checked(&self.ring, gens)
    }

    /// Same generators in a ring with the same variable names.
    pub fn move_to(&self, target: &RingContext) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.restrict(target)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_checked(target, gens))
    }

    /// Embeds into a ring containing all variables of this one.
    pub fn embed(&self, target: &RingContext) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_checked(target, gens))
    }

    /// `I : (g)`, from `I ∩ (g)` divided by `g`.
    pub fn quotient_by(&self, g: &Polynomial) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroIdeal("quotient by zero".into()));
        }
        if self.is_monomial() && g.len() == 1 {
            let gm = g.leading_monomial().unwrap();
            let monos =
                self.gens.iter().map(|a| gm.gcd(a.leading_monomial().unwrap()).quotient_of(a.leading_monomial().unwrap()).unwrap()).collect();
            return Ok(self.monomial_ideal(monos));
        }
        let inter = self.intersect(&Ideal::principal(g))?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for h in &inter.gens {
            gens.push(h.div_exact(g).ok_or_else(|| Error::InvalidArgument("inexact division in quotient".into()))?);
        }
        Ok(Self::from_checked(&self.ring, gens))
    }

    /// `I : J` as the intersection of `I : g` over the generators of `J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal("quotient by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonempty"))
    }

    /// `I : g^∞` by eliminating `y` from `(I, 1 - y g)`.
    pub fn saturate_principal(&self, g: &Polynomial) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroIdeal("saturation by zero".into()));
        }
        let ext = self.ring.extend(AUX, &["y"])?;
        let y = Polynomial::var_at(&ext, self.ring.arity());
        let mut gens = self.gens.iter().map(|h| h.embed(&ext)).collect::<Result<Vec<_>>>()?;
        gens.push(Polynomial::one(&ext) - &y * &g.embed(&ext)?);
        let out = Ideal::from_checked(&ext, gens).eliminate_vars(&[self.ring.arity()])?;
        out.move_to(&self.ring)
    }

    /// `I : J^∞` with the least `k` such that `I : J^k = I : J^(k+1)`.
    ///
    /// The ideal is the intersection of the principal saturations `I : g^∞` over the generators
    /// of `J`; the exponent is the least `k` with `J^k (I : J^∞) ⊆ I`.
    pub fn saturate(&self, other: &Ideal) -> Result<(Ideal, u32)> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal("saturation by the zero ideal".into()));
        }
        if let Some(vars) = other.variable_indices() {
            if let Some(found) = self.saturate_by_variables(&vars)? {
                return Ok(found);
            }
        }
        self.saturate_by_intersection(other)
    }

    /// The variable indices when every generator is a single variable.
    fn variable_indices(&self) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for g in &self.gens {
            let (m, c) = g.terms().first()?;
            if g.len() != 1 || m.degree() != 1 || !c.is_one() {
                return None;
            }
            let i = (0..self.ring.arity()).find(|&i| m.exponent(i) == 1)?;
            if !out.contains(&i) {
                out.push(i);
            }
        }
        Some(out)
    }

    /// `I : (vars)^∞ = ∩_v I : v^∞` for `I` homogeneous in `vars`. `None` when `I` is not
    /// homogeneous in `vars`.
    fn saturate_by_variables(&self, vars: &[usize]) -> Result<Option<(Ideal, u32)>> {
        let Some(pieces) = self.variable_saturations(vars)? else { return Ok(None) };
        let mut acc: Option<Ideal> = None;
        for s in pieces {
            acc = Some(match acc {
                None => s,
                Some(a) if s.contains_ideal(&a)? => a,
                Some(a) if a.contains_ideal(&s)? => s,
                Some(a) => a.intersect(&s)?.reduced()?,
            });
        }
        let sat = acc.expect("nonempty");
        let by = Ideal::of_variables(&self.ring, vars);
        let k = self.saturation_exponent_bounded(&sat, &by, u32::MAX)?.expect("unbounded");
        Ok(Some((sat, k)))
    }

    /// The saturations `I : v^∞` for each `v` in `vars` (in that order), whose intersection is
    /// `I : (vars)^∞`. Each comes from a Groebner basis under a block order with `vars` first
    /// (grevlex, `v` last) by stripping powers of `v`. `None` when `I` is not homogeneous in
    /// `vars`.
    pub fn variable_saturations(&self, vars: &[usize]) -> Result<Option<Vec<Ideal>>> {
        if vars.is_empty() || self.gens.iter().any(|g| !g.homogeneity_in(vars).is_homogeneous()) {
            return Ok(None);
        }
        let pieces = vars.iter().map(|&v| self.saturate_by_variable(vars, v)).collect::<Result<Vec<_>>>()?;
        Ok(Some(pieces))
    }

    /// `I : v^∞` for `I` homogeneous in `vars ∋ v`, reduced.
    fn saturate_by_variable(&self, vars: &[usize], v: usize) -> Result<Ideal> {
        let mut layout: Vec<usize> = vars.iter().copied().filter(|&w| w != v).collect();
        layout.push(v);
        let (elim, perm) = self.ring.elimination_layout(&layout)?;
        let map: Vec<Option<usize>> = perm.iter().map(|&i| Some(i)).collect();
        let moved: Vec<Polynomial> = self.gens.iter().map(|g| g.remap_into(&elim, &map)).collect();
        let gb = GroebnerBasis::compute(&elim, &moved)?;
        let z = layout.len() - 1;
        let mut sat = Vec::with_capacity(gb.elements().len());
        for g in gb.elements() {
            let k = g.terms().iter().map(|(m, _)| m.exponent(z)).min().unwrap_or(0);
            let mut q = Monomial::one(elim.arity());
            q.set_exponent(z, k);
            let divided = Polynomial::from_terms(
                &elim,
                g.terms().iter().map(|(m, c)| (q.quotient_of(m).expect("divisible"), c.clone())),
            );
            sat.push(divided.restrict(&self.ring)?);
        }
        Ideal::from_checked(&self.ring, sat).reduced()
    }

    /// `I : J^∞` as the intersection of the principal saturations over the generators of `J`.
    pub fn saturate_by_intersection(&self, other: &Ideal) -> Result<(Ideal, u32)> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal("saturation by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let s = self.saturate_principal(g)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        let sat = acc.expect("nonempty").reduced()?;
        let k = self.saturation_exponent_bounded(&sat, other, u32::MAX)?.expect("unbounded");
        Ok((sat, k))
    }

    /// Least `k` with `J^k S ⊆ I`, searching up to `bound`.
    fn saturation_exponent_bounded(&self, sat: &Ideal, by: &Ideal, bound: u32) -> Result<Option<u32>> {
        let gb = self.groebner()?;
        let mut frontier: HashSet<Polynomial> = HashSet::new();
        for s in &sat.gens {
            let r = gb.normal_form(s);
            if !r.is_zero() {
                frontier.insert(r.make_monic());
            }
        }
        let mut k = 0;
        while !frontier.is_empty() {
            if k == bound {
                return Ok(None);
            }
            k += 1;
            let mut next = HashSet::new();
            for p in &frontier {
                for g in &by.gens {
                    let r = gb.normal_form(&(p * g));
                    if !r.is_zero() {
                        next.insert(r.make_monic());
                    }
                }
            }
            frontier = next;
        }
        Ok(Some(k))
    }

    /// `I : J^∞` by iterating quotients until the chain stabilizes.
    pub fn saturate_iterated(&self, other: &Ideal) -> Result<(Ideal, u32)> {
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let next = cur.quotient(other)?;
            if next.equals(&cur)? {
                return Ok((cur, k));
            }
            cur = next;
            k += 1;
        }
    }

    /// `I ∩ k[rest]` for a named block; the result lives in the ring without that block.
    pub fn eliminate(&self, block: &str) -> Result<Ideal> {
        let b = self.ring.require_block(block)?;
        let vars: Vec<usize> = b.range().collect();
        self.eliminate_vars(&vars)
    }

    /// `I ∩ k[other variables]`, in the ring without `vars`.
    pub fn eliminate_vars(&self, vars: &[usize]) -> Result<Ideal> {
        let target = self.ring.without(vars)?;
        if self.is_zero() || vars.is_empty() {
            return self.move_to_lenient(&target);
        }
        let (elim, perm) = self.ring.elimination_layout(vars)?;
        let map: Vec<Option<usize>> = perm.iter().map(|&i| Some(i)).collect();
        let moved: Vec<Polynomial> = self.gens.iter().map(|g| g.remap_into(&elim, &map)).collect();
        let gb = GroebnerBasis::compute(&elim, &moved)?;
        let k = vars.len();
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
            .map(|g| g.restrict(&target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_checked(&target, kept))
    }

    fn move_to_lenient(&self, target: &RingContext) -> Result<Ideal> {
        if self.is_zero() {
            return Ok(Ideal::zero(target));
        }
        self.move_to(target)
    }

    /// Substitutes values for a block of variables; the result lives in the ring without it.
    pub fn evaluate_block(&self, block: &str, values: &[Rational]) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.evaluate_block(block, values)).collect::<Result<Vec<_>>>()?;
        let target = match gens.first() {
            Some(g) => g.ring().clone(),
            None => {
                let b = self.ring.require_block(block)?;
                self.ring.without(&b.range().collect::<Vec<_>>())?
            }
        };
        Ok(Self::from_checked(&target, gens))
    }

    /// Krull dimension from a maximal set of variables independent modulo the initial ideal.
    pub fn dimension(&self) -> Result<DimensionReport> {
        let gb = self.groebner()?;
        Ok(dimension_from_leading(&self.ring, gb))
    }

    /// Dimension computed under another monomial order.
    pub fn dimension_in_order(&self, order: MonomialOrder) -> Result<DimensionReport> {
        let ring = self.ring.with_order(order)?;
        let moved = self.embed(&ring)?;
        moved.dimension()
    }

    /// A minimal homogeneous generating set for the grading by `weights`, built degree by degree:
    /// a generator is kept when it is not in the ideal of those already kept.
    /// Returns `(generator, degree)` pairs in increasing degree.
    pub fn minimal_homogeneous_generators(&self, weights: &[u32]) -> Result<Vec<(Polynomial, u32)>> {
        if weights.len() != self.ring.arity() {
            return Err(Error::ArityMismatch { expected: self.ring.arity(), got: weights.len() });
        }
        let mut graded = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            match g.weighted_homogeneity(weights) {
                Homogeneity::Homogeneous(d) => graded.push((g.clone(), d)),
                _ => return Err(Error::NotHomogeneous(g.to_string())),
            }
        }
        let order = self.ring.order();
        graded.sort_by(|a, b| {
            a.1.cmp(&b.1)
                .then_with(|| a.0.len().cmp(&b.0.len()))
                .then_with(|| order.compare(a.0.leading_monomial().unwrap(), b.0.leading_monomial().unwrap()))
        });
        let mut kept: Vec<(Polynomial, u32)> = Vec::new();
        for (g, d) in graded {
            let current = Ideal::from_checked(&self.ring, kept.iter().map(|(p, _)| p.clone()).collect());
            if current.is_zero() || !current.contains(&g)? {
                kept.push((g, d));
            }
        }
        Ok(kept)
    }
}

/// Dimension read off the leading monomials of a Groebner basis.
pub fn dimension_from_leading(ring: &RingContext, gb: &GroebnerBasis) -> DimensionReport {
    if gb.is_unit() {
        return DimensionReport::Empty { arity: ring.arity() };
    }
    let n = ring.arity();
    let supports: Vec<Vec<usize>> = gb
        .leading_monomials()
        .iter()
        .map(|m| (0..n).filter(|&i| m.exponent(i) > 0).collect())
        .collect();
    let best = max_independent_set(n, &supports);
    DimensionReport::Proper {
        dim: best.len(),
        codim: n - best.len(),
        witness: best.iter().map(|&i| ring.name(i).to_string()).collect(),
    }
}

/// Largest `S ⊆ {0..n}` containing no support entirely; earlier variables are preferred on ties.
fn max_independent_set(n: usize, supports: &[Vec<usize>]) -> Vec<usize> {
    fn blocked(chosen: &[bool], supports: &[Vec<usize>]) -> bool {
        supports.iter().any(|s| s.iter().all(|&i| chosen[i]))
    }
    fn go(i: usize, n: usize, supports: &[Vec<usize>], chosen: &mut Vec<bool>, size: usize, best: &mut Vec<usize>) {
        if size + (n - i) <= best.len() {
            return;
        }
        if i == n {
            *best = (0..n).filter(|&k| chosen[k]).collect();
            return;
        }
        chosen[i] = true;
        if !blocked(chosen, supports) {
            go(i + 1, n, supports, chosen, size + 1, best);
        }
        chosen[i] = false;
        go(i + 1, n, supports, chosen, size, best);
    }
    let mut best = Vec::new();
    let mut chosen = vec![false; n];
    // A zero ideal has no supports; every variable is free.
    go(0, n, supports, &mut chosen, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_polynomial_list};
    use crate::ring::{GEOM, PARAM};

    fn ring() -> RingContext {
        RingContext::geometric(&["x", "y", "z"]).unwrap()
    }

    fn ideal(r: &RingContext, s: &str) -> Ideal {
        Ideal::new(r, parse_polynomial_list(r, s).unwrap()).unwrap()
    }

    #[test]
    fn products_and_powers() {
        let r = ring();
        let p = ideal(&r, "x").product(&ideal(&r, "y")).unwrap();
        assert!(p.equals(&ideal(&r, "x*y")).unwrap());
        let sq = ideal(&r, "x, y").power(2);
        assert_eq!(sq.generators().len(), 3);
        assert!(sq.equals(&ideal(&r, "x^2, x*y, y^2")).unwrap());
        assert!(ideal(&r, "x").power(0).is_unit().unwrap());
        let four = ideal(&r, "x^2 - x*z, y^2 - y*z, x*(2*y - z), y*(2*x - z), (2*x - z)*(2*y - z)");
        assert_eq!(four.power(2).generators().len(), 15);
    }

    #[test]
    fn intersections() {
        let r = ring();
        assert!(ideal(&r, "x").intersect(&ideal(&r, "y")).unwrap().equals(&ideal(&r, "x*y")).unwrap());
        assert!(ideal(&r, "x^2").intersect(&ideal(&r, "x")).unwrap().equals(&ideal(&r, "x^2")).unwrap());
        let a = ideal(&r, "x^2, y");
        let b = ideal(&r, "x*y, z");
        let fast = a.intersect(&b).unwrap();
        let slow = a.intersect_by_elimination(&b).unwrap();
        assert!(fast.equals(&slow).unwrap());
        let c = ideal(&r, "x + y");
        let d = ideal(&r, "x - y");
        assert!(c.intersect(&d).unwrap().equals(&ideal(&r, "x^2 - y^2")).unwrap());
    }

    #[test]
    fn quotients_and_saturation() {
        let r = ring();
        assert!(ideal(&r, "x*y").quotient(&ideal(&r, "x")).unwrap().equals(&ideal(&r, "y")).unwrap());
        assert!(ideal(&r, "x^2, x*y").quotient(&ideal(&r, "x")).unwrap().equals(&ideal(&r, "x, y")).unwrap());
        let i = ideal(&r, "x^2 - y*z, x*y");
        assert!(i.quotient(&Ideal::unit(&r)).unwrap().equals(&i).unwrap());
        let (s, k) = ideal(&r, "x^2*y").saturate(&ideal(&r, "x")).unwrap();
        assert!(s.equals(&ideal(&r, "y")).unwrap());
        assert_eq!(k, 2);
        let (s2, k2) = ideal(&r, "x^2*y").saturate_iterated(&ideal(&r, "x")).unwrap();
        assert!(s2.equals(&s).unwrap());
        assert_eq!(k2, 2);
        // Non-monomial: (x(x - y)^2 z) : (x - y)^∞ = (x z)
        let g = parse_polynomial(&r, "x - y").unwrap();
        let t = ideal(&r, "x*(x - y)^2*z").saturate_principal(&g).unwrap();
        assert!(t.equals(&ideal(&r, "x*z")).unwrap());
    }

    #[test]
    fn elimination() {
        let r = RingContext::new(&[(GEOM, vec!["x"]), (PARAM, vec!["u", "v"])], MonomialOrder::Grevlex).unwrap();
        let i = ideal(&r, "x - u, x^2 - v");
        let e = i.eliminate(GEOM).unwrap();
        assert_eq!(e.ring().arity(), 2);
        let expect = Ideal::new(e.ring(), parse_polynomial_list(e.ring(), "u^2 - v").unwrap()).unwrap();
        assert!(e.equals(&expect).unwrap());
        assert!(Ideal::zero(&r).eliminate(GEOM).unwrap().is_zero());
    }

    #[test]
    fn dimensions() {
        let r = ring();
        let d = ideal(&r, "x").dimension().unwrap();
        assert_eq!((d.dim(), d.codim()), (Some(2), Some(1)));
        assert!(ideal(&r, "x, x - 1").dimension().unwrap().is_empty());
        assert_eq!(Ideal::zero(&r).dimension().unwrap().dim(), Some(3));
        let f = parse_polynomial(&r, "x^2*y^2 + x^2*z^2 + y^2*z^2").unwrap();
        let i_f = Ideal::new(&r, (0..3).map(|i| f.derivative_at(i)).collect()).unwrap();
        assert_eq!(i_f.dimension().unwrap().codim(), Some(2));
        assert_eq!(i_f.dimension_in_order(MonomialOrder::Lex).unwrap().codim(), Some(2));
    }

    #[test]
    fn minimal_generators() {
        let r = ring();
        let g = ideal(&r, "x^3, x^2").minimal_homogeneous_generators(&[1, 1, 1]).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].1, 2);
        assert!(ideal(&r, "x^2 + y").minimal_homogeneous_generators(&[1, 1, 1]).is_err());
    }
}
