//! Fraction-free Buchberger kernel over Q working on sparse module vectors.
//!
//! A vector is a list of terms `(component, monomial, integer coefficient)` sorted descending.
//! Ideals are the one-component case. Coefficients are kept primitive (content 1, positive
//! leading coefficient); the caller rescales to monic rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: BigInt,
}

pub(crate) type Vector = Vec<Term>;

/// How components are weighed against monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ModuleOrder {
    /// Terms in different components never compare equal; the component index breaks ties
    /// after the monomial (term over position). Used with a single component for ideals.
    TermOverPosition,
    /// Component 0 dominates everything else; the remaining components are compared term over
    /// position. This separates a Groebner basis of the first coordinate (with cofactors in
    /// the other coordinates) from the syzygies that live entirely in the other coordinates.
    EliminateFirst,
}

pub(crate) struct Engine<'a> {
    pub order: &'a MonomialOrder,
    pub module: ModuleOrder,
    /// Degree shift per component (Schreyer-style grading used for sugar and degrees).
    pub shifts: Vec<u32>,
    pub work_limit: u64,
    pub pair_reductions: u64,
}

struct Elem {
    v: Vector,
    mask: u64,
    sugar: u32,
    active: bool,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
    sugar: u32,
}

impl<'a> Engine<'a> {
    pub fn new(order: &'a MonomialOrder, module: ModuleOrder, shifts: Vec<u32>, work_limit: u64) -> Self {
        Engine { order, module, shifts, work_limit, pair_reductions: 0 }
    }

    #[inline]
    pub fn cmp_terms(&self, ac: u32, am: &Monomial, bc: u32, bm: &Monomial) -> Ordering {
        match self.module {
            ModuleOrder::TermOverPosition => {
                self.order.compare(am, bm).then_with(|| bc.cmp(&ac))
            }
            ModuleOrder::EliminateFirst => {
                let a0 = ac == 0;
                let b0 = bc == 0;
                if a0 != b0 {
                    return if a0 { Ordering::Greater } else { Ordering::Less };
                }
                self.order.compare(am, bm).then_with(|| bc.cmp(&ac))
            }
        }
    }

    pub fn sort(&self, v: &mut Vector) {
        v.sort_by(|a, b| self.cmp_terms(b.comp, &b.mono, a.comp, &a.mono));
    }

    fn degree(&self, v: &Vector) -> u32 {
        v.iter().map(|t| t.mono.degree() + self.shifts.get(t.comp as usize).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    /// `a * p - b * m * g`, skipping the (cancelling) leading terms of both.
    fn sub_scaled(&self, p: &[Term], a: &BigInt, g: &[Term], m: &Monomial, b: &BigInt) -> Vector {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let (mut i, mut j) = (1, 1);
        let a_one = a.is_one();
        let scaled_g = |t: &Term| Term { comp: t.comp, mono: t.mono.mul(m), coeff: -(b * &t.coeff) };
        while i < p.len() && j < g.len() {
            let gm = g[j].mono.mul(m);
            match self.cmp_terms(p[i].comp, &p[i].mono, g[j].comp, &gm) {
                Ordering::Greater => {
                    let c = if a_one { p[i].coeff.clone() } else { a * &p[i].coeff };
                    out.push(Term { comp: p[i].comp, mono: p[i].mono.clone(), coeff: c });
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { comp: g[j].comp, mono: gm, coeff: -(b * &g[j].coeff) });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if a_one { p[i].coeff.clone() } else { a * &p[i].coeff } - b * &g[j].coeff;
                    if !c.is_zero() {
                        out.push(Term { comp: p[i].comp, mono: gm, coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for t in &p[i..] {
            let c = if a_one { t.coeff.clone() } else { a * &t.coeff };
            out.push(Term { comp: t.comp, mono: t.mono.clone(), coeff: c });
        }
        out.extend(g[j..].iter().map(scaled_g));
        out
    }

    /// Fully reduces `p` modulo `basis`. Returns `(r, num, den)` with `r = (num / den) NF(p)`.
    fn reduce_with(&self, p: Vector, basis: &[&Vector], masks: &[u64]) -> (Vector, BigInt, BigInt) {
        let mut p = p;
        let mut idx = 0usize;
        let mut res: Vector = Vec::new();
        let mut scale_num = BigInt::one();
        let mut scale_den = BigInt::one();
        let mut steps = 0u32;
        while idx < p.len() {
            let (comp, mono) = (p[idx].comp, &p[idx].mono);
            let tmask = mono.support_mask();
            let mut found = None;
            for (k, g) in basis.iter().enumerate() {
                if masks[k] & !tmask != 0 {
                    continue;
                }
                let lt = &g[0];
                if lt.comp == comp && lt.mono.divides(mono) {
                    found = Some(k);
                    break;
                }
            }
            match found {
                Some(k) => {
                    let g = basis[k];
                    let m = g[0].mono.quotient_of(&p[idx].mono).expect("divides");
                    let gc = p[idx].coeff.gcd(&g[0].coeff);
                    let a = &g[0].coeff / &gc;
                    let b = &p[idx].coeff / &gc;
                    p = self.sub_scaled(&p[idx..], &a, g, &m, &b);
                    idx = 0;
                    if !a.is_one() {
                        for t in res.iter_mut() {
                            t.coeff *= &a;
                        }
                        scale_num *= &a;
                        steps += 1;
                        if steps.is_multiple_of(6) {
                            let c = content(res.iter().chain(p.iter()));
                            if !c.is_one() && !c.is_zero() {
                                for t in res.iter_mut().chain(p.iter_mut()) {
                                    t.coeff /= &c;
                                }
                                scale_den *= c;
                            }
                        }
                    }
                }
                None => {
                    let t = std::mem::replace(
                        &mut p[idx],
                        Term { comp: 0, mono: Monomial::one(0), coeff: BigInt::zero() },
                    );
                    res.push(t);
                    idx += 1;
                }
            }
        }
        (res, scale_num, scale_den)
    }

    /// Full reduction returning a primitive result (content 1, positive leading coefficient).
    pub fn reduce_primitive(&self, p: Vector, basis: &[&Vector]) -> Vector {
        let masks: Vec<u64> = basis.iter().map(|g| g[0].mono.support_mask()).collect();
        let (mut r, _, _) = self.reduce_with(p, basis, &masks);
        make_primitive(&mut r);
        r
    }

    /// Full reduction with the exact rescaling: returns `(r, num, den)` with
    /// `NF(p) = r * den / num`.
    pub fn reduce_exact(&self, p: Vector, basis: &[&Vector]) -> (Vector, BigInt, BigInt) {
        let masks: Vec<u64> = basis.iter().map(|g| g[0].mono.support_mask()).collect();
        self.reduce_with(p, basis, &masks)
    }

    fn spoly(&self, a: &Vector, b: &Vector, lcm: &Monomial) -> Vector {
        let ma = a[0].mono.quotient_of(lcm).expect("lcm");
        let mb = b[0].mono.quotient_of(lcm).expect("lcm");
        let g = a[0].coeff.gcd(&b[0].coeff);
        let ca = &b[0].coeff / &g;
        let cb = &a[0].coeff / &g;
        // ca * ma * a - cb * mb * b; build ma*a scaled then subtract.
        let scaled_a: Vector =
            a.iter().map(|t| Term { comp: t.comp, mono: t.mono.mul(&ma), coeff: &ca * &t.coeff }).collect();
        self.sub_scaled(&scaled_a, &BigInt::one(), b, &mb, &cb)
    }

    /// Runs Buchberger's algorithm with Gebauer-Moeller pair pruning. Pairs are taken by least
    /// lcm (normal strategy); sugar breaks ties.
    /// Returns the reduced basis, each element primitive and sorted.
    pub fn groebner(&mut self, input: Vec<Vector>) -> Result<Vec<Vector>> {
        let mut elems: Vec<Elem> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let mut input = input;
        for v in input.iter_mut() {
            self.sort(v);
            make_primitive(v);
        }
        input.retain(|v| !v.is_empty());
        input.sort_by(|a, b| {
            self.degree(a).cmp(&self.degree(b)).then_with(|| self.cmp_terms(a[0].comp, &a[0].mono, b[0].comp, &b[0].mono))
        });

        for v in input {
            let sugar = self.degree(&v);
            let r = {
                let (basis, masks) = active_view(&elems);
                let (mut r, _, _) = self.reduce_with(v, &basis, &masks);
                make_primitive(&mut r);
                r
            };
            if !r.is_empty() {
                let sugar = sugar.max(self.degree(&r));
                self.update(&mut elems, &mut pairs, r, sugar);
            }
        }

        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&x, &y| {
                    let (p, q) = (&pairs[x], &pairs[y]);
                    self.cmp_terms(p.comp, &p.lcm, q.comp, &q.lcm)
                        .then_with(|| p.sugar.cmp(&q.sugar))
                        .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
                })
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            self.pair_reductions += 1;
            if self.pair_reductions > self.work_limit {
                return Err(Error::ResourceExhausted { limit: self.work_limit });
            }
            let s = self.spoly(&elems[pair.i].v, &elems[pair.j].v, &pair.lcm);
            if s.is_empty() {
                continue;
            }
            let (basis, masks) = active_view(&elems);
            let (mut r, _, _) = self.reduce_with(s, &basis, &masks);
            if r.is_empty() {
                continue;
            }
            make_primitive(&mut r);
            let sugar = pair.sugar.max(self.degree(&r));
            self.update(&mut elems, &mut pairs, r, sugar);
        }

        // Interreduce the minimal basis.
        let mut active: Vec<Vector> = elems.into_iter().filter(|e| e.active).map(|e| e.v).collect();
        active.sort_by(|a, b| self.cmp_terms(a[0].comp, &a[0].mono, b[0].comp, &b[0].mono));
        let mut out: Vec<Vector> = Vec::with_capacity(active.len());
        for k in 0..active.len() {
            let others: Vec<&Vector> = active.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| v).collect();
            let masks: Vec<u64> = others.iter().map(|g| g[0].mono.support_mask()).collect();
            let v = active[k].clone();
            let head = v[0].clone();
            let tail: Vector = v[1..].to_vec();
            // r = (num/den) NF(tail), so den * r + num * head is a multiple of the reduced element.
            let (mut r, num, den) = self.reduce_with(tail, &others, &masks);
            let mut full = vec![Term { comp: head.comp, mono: head.mono, coeff: head.coeff * &num }];
            if !den.is_one() {
                for t in r.iter_mut() {
                    t.coeff *= &den;
                }
            }
            full.append(&mut r);
            make_primitive(&mut full);
            out.push(full);
        }
        Ok(out)
    }

    fn update(&self, elems: &mut Vec<Elem>, pairs: &mut Vec<Pair>, h: Vector, sugar: u32) {
        let hk = elems.len();
        let hc = h[0].comp;
        let hm = h[0].mono.clone();
        let hdeg = hm.degree() + self.shifts.get(hc as usize).copied().unwrap_or(0);

        let mut candidates: Vec<(usize, Monomial, bool, u32)> = Vec::new();
        for (g, e) in elems.iter().enumerate() {
            if !e.active || e.v[0].comp != hc {
                continue;
            }
            let gm = &e.v[0].mono;
            let lcm = hm.lcm(gm);
            let coprime = hm.coprime(gm);
            let gdeg = gm.degree() + self.shifts.get(hc as usize).copied().unwrap_or(0);
            let ldeg = lcm.degree() + self.shifts.get(hc as usize).copied().unwrap_or(0);
            let s = (sugar + ldeg - hdeg).max(e.sugar + ldeg - gdeg);
            candidates.push((g, lcm, coprime, s));
        }

        // Chain criterion among the new pairs.
        let mut kept: Vec<(usize, Monomial, bool, u32)> = Vec::new();
        while let Some(c) = candidates.pop() {
            let redundant = !c.2
                && (candidates.iter().any(|d| d.1.divides(&c.1)) || kept.iter().any(|d| d.1.divides(&c.1)));
            if !redundant {
                kept.push(c);
            }
        }

        // Old pairs made redundant by h.
        pairs.retain(|p| {
            if p.comp != hc || !hm.divides(&p.lcm) {
                return true;
            }
            let li = hm.lcm(&elems[p.i].v[0].mono);
            let lj = hm.lcm(&elems[p.j].v[0].mono);
            li == p.lcm || lj == p.lcm
        });

        // The product criterion only holds for ideals; with tracked cofactors a coprime pair
        // still produces a syzygy.
        let product_criterion = self.module == ModuleOrder::TermOverPosition && self.shifts.len() == 1;
        for (g, lcm, coprime, s) in kept {
            if coprime && product_criterion {
                continue;
            }
            pairs.push(Pair { i: g, j: hk, comp: hc, lcm, sugar: s });
        }

        for e in elems.iter_mut() {
            if e.active && e.v[0].comp == hc && hm.divides(&e.v[0].mono) {
                e.active = false;
            }
        }
        let mask = hm.support_mask();
        elems.push(Elem { v: h, mask, sugar, active: true });
    }
}

fn active_view(elems: &[Elem]) -> (Vec<&Vector>, Vec<u64>) {
    let mut basis = Vec::new();
    let mut masks = Vec::new();
    for e in elems.iter().filter(|e| e.active) {
        basis.push(&e.v);
        masks.push(e.mask);
    }
    (basis, masks)
}

fn content<'b, I: Iterator<Item = &'b Term>>(terms: I) -> BigInt {
    let mut g = BigInt::zero();
    for t in terms {
        g = g.gcd(&t.coeff);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn make_primitive(v: &mut Vector) {
    if v.is_empty() {
        return;
    }
    let mut c = content(v.iter());
    if v[0].coeff.is_negative() {
        c = -c;
    }
    if !c.is_one() {
        for t in v.iter_mut() {
            t.coeff /= &c;
        }
    }
}
