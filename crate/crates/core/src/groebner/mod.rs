//! Reduced Groebner bases, normal forms, lifting and syzygies.

mod engine;

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Rational};
use crate::ring::{RingContext, AUX};

use engine::{Engine, ModuleOrder, Term, Vector};

static DEFAULT_WORK_LIMIT: AtomicU64 = AtomicU64::new(1_000_000);

thread_local! {
    static SCOPED_WORK_LIMIT: std::cell::Cell<Option<u64>> = const { std::cell::Cell::new(None) };
}

/// Cap on S-pair reductions per basis computation used when no explicit limit is passed.
/// A limit installed by [`with_work_limit`] on the current thread takes precedence.
pub fn default_work_limit() -> u64 {
    SCOPED_WORK_LIMIT
        .with(|c| c.get())
        .unwrap_or_else(|| DEFAULT_WORK_LIMIT.load(AtomicOrdering::Relaxed))
}

/// Runs `f` with every basis computation on this thread capped at `limit` pair reductions.
pub fn with_work_limit<T>(limit: u64, f: impl FnOnce() -> T) -> T {
    struct Restore(Option<u64>);
    impl Drop for Restore {
        fn drop(&mut self) {
            SCOPED_WORK_LIMIT.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(SCOPED_WORK_LIMIT.with(|c| c.replace(Some(limit.max(1)))));
    f()
}

pub fn set_default_work_limit(limit: u64) {
    DEFAULT_WORK_LIMIT.store(limit.max(1), AtomicOrdering::Relaxed);
}

/// A reduced Groebner basis with respect to the order of its ring.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingContext,
    elements: Vec<Polynomial>,
    primitive: Vec<Vector>,
    pair_reductions: u64,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.elements == other.elements
    }
}

impl GroebnerBasis {
    /// Basis of the ideal generated by `gens` under the order of their ring.
    pub fn compute(ring: &RingContext, gens: &[Polynomial]) -> Result<Self> {
        Self::compute_with_limit(ring, gens, default_work_limit())
    }

    pub fn compute_with_limit(ring: &RingContext, gens: &[Polynomial], limit: u64) -> Result<Self> {
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        let input: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).map(|g| to_vector(g, 0)).collect();
        let mut engine = Engine::new(ring.order(), ModuleOrder::TermOverPosition, vec![0], limit);
        let mut basis = engine.groebner(input)?;
        basis.sort_by(|a, b| ring.order().compare(&a[0].mono, &b[0].mono));
        let elements = basis.iter().map(|v| from_vector(ring, v, 0).make_monic()).collect();
        Ok(GroebnerBasis { ring: ring.clone(), elements, primitive: basis, pair_reductions: engine.pair_reductions })
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    /// Monic elements, ascending by leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Always true: bases are interreduced and monic on construction.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn pair_reductions(&self) -> u64 {
        self.pair_reductions
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    fn engine(&self) -> Engine<'_> {
        Engine::new(self.ring.order(), ModuleOrder::TermOverPosition, vec![0], u64::MAX)
    }

    /// Remainder of `f` under division by the basis; no term of it is divisible by a leading term.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert!(f.ring() == &self.ring, "normal_form: ring mismatch");
        if f.is_zero() {
            return f.clone();
        }
        let (v, scale) = to_vector_scaled(f, 0);
        let basis: Vec<&Vector> = self.primitive.iter().collect();
        let (r, num, den) = self.engine().reduce_exact(v, &basis);
        // f = v / scale and r = (num / den) NF(v).
        let factor = Rational::new(den, num * scale);
        let mut out = from_vector(&self.ring, &r, 0);
        if !factor.is_one() {
            out = out.scale(&factor);
        }
        out
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        if self.is_unit() {
            return true;
        }
        let (v, _) = to_vector_scaled(f, 0);
        let basis: Vec<&Vector> = self.primitive.iter().collect();
        self.engine().reduce_primitive(v, &basis).is_empty()
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let n = self.elements.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                let la = a.leading_monomial().unwrap();
                let lb = b.leading_monomial().unwrap();
                let l = la.lcm(lb);
                let s = a.mul_monomial(&la.quotient_of(&l).unwrap(), &Rational::one())
                    - b.mul_monomial(&lb.quotient_of(&l).unwrap(), &Rational::one());
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Basis of `gens` under `order`; the result lives in the ring re-ordered by `order`.
pub fn buchberger(gens: &[Polynomial], ring: &RingContext, order: MonomialOrder) -> Result<GroebnerBasis> {
    let target = ring.with_order(order)?;
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.embed(&target)).collect::<Result<_>>()?;
    GroebnerBasis::compute(&target, &moved)
}

/// Module Groebner basis of the vectors `(g_i ; e_i)` with the first coordinate dominating.
/// It yields a basis of the ideal together with cofactors, and the syzygy module of the `g_i`.
pub struct LiftData {
    ring: RingContext,
    gens: usize,
    shifts: Vec<u32>,
    basis: Vec<Vector>,
}

impl LiftData {
    pub fn new(ring: &RingContext, gens: &[Polynomial]) -> Result<Self> {
        Self::with_limit(ring, gens, default_work_limit())
    }

    pub fn with_limit(ring: &RingContext, gens: &[Polynomial], limit: u64) -> Result<Self> {
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        let mut shifts = vec![0u32];
        shifts.extend(gens.iter().map(|g| g.degree().unwrap_or(0)));
        let mut input = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            let comp = (i + 1) as u32;
            if g.is_zero() {
                // A zero generator contributes the unit syzygy e_i.
                input.push(vec![Term { comp, mono: Monomial::one(ring.arity()), coeff: BigInt::one() }]);
                continue;
            }
            let (mut v, scale) = to_vector_scaled(g, 0);
            v.push(Term { comp, mono: Monomial::one(ring.arity()), coeff: scale });
            input.push(v);
        }
        let mut engine = Engine::new(ring.order(), ModuleOrder::EliminateFirst, shifts.clone(), limit);
        let basis = engine.groebner(input)?;
        Ok(LiftData { ring: ring.clone(), gens: gens.len(), shifts, basis })
    }

    /// Coefficients `c` with `f = sum c_i g_i`, or `None` when `f` is not in the ideal.
    pub fn lift(&self, f: &Polynomial) -> Option<Vec<Polynomial>> {
        let zero = Polynomial::zero(&self.ring);
        if f.is_zero() {
            return Some(vec![zero; self.gens]);
        }
        let engine = Engine::new(self.ring.order(), ModuleOrder::EliminateFirst, self.shifts.clone(), u64::MAX);
        let (v, scale) = to_vector_scaled(f, 0);
        let basis: Vec<&Vector> = self.basis.iter().collect();
        let (r, num, den) = engine.reduce_exact(v, &basis);
        if r.iter().any(|t| t.comp == 0) {
            return None;
        }
        // r = (num/den) * (0 ; -c * scale)
        let factor = -Rational::new(den, num * scale);
        Some(
            (1..=self.gens as u32)
                .map(|c| {
                    let p = from_vector(&self.ring, &r, c);
                    if p.is_zero() {
                        p
                    } else {
                        p.scale(&factor)
                    }
                })
                .collect(),
        )
    }

    /// Generators of the syzygy module, each a vector of length `gens.len()`.
    pub fn syzygies(&self) -> Vec<Vec<Polynomial>> {
        self.basis
            .iter()
            .filter(|v| v[0].comp != 0)
            .map(|v| (1..=self.gens as u32).map(|c| from_vector(&self.ring, v, c)).collect())
            .collect()
    }

    /// Basis elements of the ideal itself (first coordinates of the comp-0 elements), monic.
    pub fn ideal_basis(&self) -> Vec<Polynomial> {
        self.basis.iter().filter(|v| v[0].comp == 0).map(|v| from_vector(&self.ring, v, 0).make_monic()).collect()
    }
}

/// Whether `f` lies in the radical of the ideal generated by `gens`, via `1 - y f`.
pub fn radical_member(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    let ring = f.ring();
    if f.is_zero() {
        return Ok(true);
    }
    let ext = ring.extend(AUX, &["rabinowitsch"])?;
    let y = Polynomial::var_at(&ext, ring.arity());
    let mut moved: Vec<Polynomial> = gens.iter().map(|g| g.embed(&ext)).collect::<Result<_>>()?;
    moved.push(Polynomial::one(&ext) - &y * &f.embed(&ext)?);
    Ok(GroebnerBasis::compute(&ext, &moved)?.is_unit())
}

fn to_vector_scaled(p: &Polynomial, comp: u32) -> (Vector, BigInt) {
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    let v = p
        .terms()
        .iter()
        .map(|(m, c)| Term { comp, mono: m.clone(), coeff: c.numer() * (&den / c.denom()) })
        .collect();
    (v, den)
}

fn to_vector(p: &Polynomial, comp: u32) -> Vector {
    let (mut v, _) = to_vector_scaled(p, comp);
    engine::make_primitive(&mut v);
    v
}

/// Component `comp` of a sorted vector as a polynomial (terms keep their relative order).
fn from_vector(ring: &RingContext, v: &Vector, comp: u32) -> Polynomial {
    let terms: Vec<(Monomial, Rational)> = v
        .iter()
        .filter(|t| t.comp == comp && !t.coeff.is_zero())
        .map(|t| (t.mono.clone(), Rational::from_integer(t.coeff.clone())))
        .collect();
    Polynomial::from_sorted_terms(ring, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_polynomial_list};

    fn ring() -> RingContext {
        RingContext::geometric(&["x", "y", "z"]).unwrap()
    }

    fn gb(r: &RingContext, s: &str) -> GroebnerBasis {
        GroebnerBasis::compute(r, &parse_polynomial_list(r, s).unwrap()).unwrap()
    }

    #[test]
    fn linear_system() {
        let r = ring();
        let g = gb(&r, "x + y, x - y");
        let expect = parse_polynomial_list(&r, "y, x").unwrap();
        assert_eq!(g.elements(), &expect[..]);
    }

    #[test]
    fn four_points_initial_ideal() {
        let r = ring();
        let g = gb(&r, "x^2 - x*z, y^2 - y*z");
        let lm: Vec<String> = g.elements().iter().map(|p| {
            Polynomial::monomial(&r, p.leading_monomial().unwrap().clone(), Rational::one()).to_text()
        }).collect();
        assert_eq!(lm, vec!["y^2", "x^2"]);
        let z3 = parse_polynomial(&r, "z^3").unwrap();
        assert_eq!(g.normal_form(&z3), z3);
        assert!(g.satisfies_buchberger_criterion());
    }

    #[test]
    fn euler_membership() {
        let r = ring();
        let f = parse_polynomial(&r, "x^2*y^2 + x^2*z^2 + y^2*z^2").unwrap();
        let parts: Vec<Polynomial> = (0..3).map(|i| f.derivative_at(i)).collect();
        let g = GroebnerBasis::compute(&r, &parts).unwrap();
        assert!(g.normal_form(&f).is_zero());
        assert!(g.contains(&f));
        assert!(!g.contains(&parse_polynomial(&r, "x^3").unwrap()));
    }

    #[test]
    fn normal_form_is_exact_with_fractions() {
        let r = ring();
        let g = gb(&r, "2*x^2 - 3*y, 5*y^2 - z");
        let f = parse_polynomial(&r, "1/7*x^3*y + 2/3*y^3 + z").unwrap();
        let nf = g.normal_form(&f);
        // f - NF(f) must lie in the ideal, and NF must be stable.
        assert!(g.contains(&(&f - &nf)));
        assert_eq!(g.normal_form(&nf), nf);
        for p in g.elements() {
            let lm = p.leading_monomial().unwrap();
            assert!(nf.terms().iter().all(|(m, _)| !lm.divides(m)));
        }
    }

    #[test]
    fn unit_and_zero() {
        let r = ring();
        assert!(gb(&r, "x, x + 1").is_unit());
        assert!(GroebnerBasis::compute(&r, &[]).unwrap().is_zero_ideal());
        assert!(GroebnerBasis::compute(&r, &[Polynomial::zero(&r)]).unwrap().is_zero_ideal());
    }

    #[test]
    fn work_limit_is_reported() {
        let r = ring();
        let gens = parse_polynomial_list(&r, "x^2 + y*z + 1, y^2 + x*z + 2, z^2 + x*y + 3").unwrap();
        match GroebnerBasis::compute_with_limit(&r, &gens, 1) {
            Err(Error::ResourceExhausted { limit: 1 }) => {}
            other => panic!("unexpected {:?}", other.map(|g| g.elements().len())),
        }
    }

    #[test]
    fn lex_elimination() {
        let r = RingContext::new(&[("geom", vec!["x", "u", "v"])], MonomialOrder::Lex).unwrap();
        let g = gb(&r, "x - u, x^2 - v");
        let expect = parse_polynomial(&r, "u^2 - v").unwrap();
        assert!(g.elements().contains(&expect));
    }

    #[test]
    fn lift_and_syzygies() {
        let r = ring();
        let gens = parse_polynomial_list(&r, "x, y").unwrap();
        let data = LiftData::new(&r, &gens).unwrap();
        let f = parse_polynomial(&r, "x*z + 3/2*y^2").unwrap();
        let c = data.lift(&f).unwrap();
        assert_eq!(&(&c[0] * &gens[0]) + &(&c[1] * &gens[1]), f);
        assert!(data.lift(&parse_polynomial(&r, "z").unwrap()).is_none());
        let syz = data.syzygies();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        assert!((&(&s[0] * &gens[0]) + &(&s[1] * &gens[1])).is_zero());
        assert_eq!(s[0].degree(), Some(1));
    }

    #[test]
    fn radical() {
        let r = ring();
        let x = parse_polynomial(&r, "x").unwrap();
        let z = parse_polynomial(&r, "z").unwrap();
        let sq = parse_polynomial_list(&r, "x^2, y^2").unwrap();
        assert!(radical_member(&x, &sq).unwrap());
        assert!(!radical_member(&z, &sq).unwrap());
    }
}
