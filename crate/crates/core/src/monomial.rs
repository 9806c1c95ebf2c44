//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Exponent vector; its length always equals the arity of the owning ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u16; 16]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut m = Self::one(arity);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree restricted to the index range `start..start + len`.
    pub fn degree_in(&self, start: usize, len: usize) -> u32 {
        self.0[start..start + len].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial(self.0.iter().map(|&a| a * k).collect())
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` is set when variable `i` (mod 64) occurs.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.0[index]
    }

    pub fn set_exponent(&mut self, index: usize, value: u16) {
        self.0[index] = value;
    }

    /// Reorders/embeds exponents: entry `i` of the result is `self[map[i]]`, or 0 for `None`.
    pub fn remap(&self, map: &[Option<usize>]) -> Monomial {
        Monomial(map.iter().map(|m| m.map_or(0, |i| self.0[i])).collect())
    }
}

/// A total, multiplicative well-order on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Graded by the given positive weights, ties broken reverse-lexicographically.
    WeightedGrevlex(Vec<u32>),
    /// Product order: consecutive variable segments `(length, order)`, compared left to right.
    Block(Vec<(usize, MonomialOrder)>),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(a.exponents(), b.exponents())
    }

    pub fn cmp_slices(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u32 = a.iter().map(|&e| e as u32).sum();
                let db: u32 = b.iter().map(|&e| e as u32).sum();
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            MonomialOrder::WeightedGrevlex(w) => {
                let da: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let db: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            MonomialOrder::Block(segments) => {
                let mut start = 0;
                for (len, inner) in segments {
                    let o = inner.cmp_slices(&a[start..start + len], &b[start..start + len]);
                    if o != Ordering::Equal {
                        return o;
                    }
                    start += len;
                }
                Ordering::Equal
            }
        }
    }

    /// Number of variables the order is built for, if it fixes one.
    pub fn fixed_arity(&self) -> Option<usize> {
        match self {
            MonomialOrder::Lex | MonomialOrder::Grevlex => None,
            MonomialOrder::WeightedGrevlex(w) => Some(w.len()),
            MonomialOrder::Block(s) => Some(s.iter().map(|(l, _)| *l).sum()),
        }
    }

    pub(crate) fn validate(&self, arity: usize) -> bool {
        match self {
            MonomialOrder::Lex | MonomialOrder::Grevlex => true,
            MonomialOrder::WeightedGrevlex(w) => w.len() == arity && w.iter().all(|&x| x > 0),
            MonomialOrder::Block(s) => {
                s.iter().map(|(l, _)| *l).sum::<usize>() == arity
                    && s.iter().all(|(l, o)| o.validate(*l))
            }
        }
    }

    /// The induced order on the variables kept by `keep` (a sorted list of indices).
    pub(crate) fn restrict(&self, keep: &[usize]) -> MonomialOrder {
        match self {
            MonomialOrder::Lex => MonomialOrder::Lex,
            MonomialOrder::Grevlex => MonomialOrder::Grevlex,
            MonomialOrder::WeightedGrevlex(w) => {
                MonomialOrder::WeightedGrevlex(keep.iter().map(|&i| w[i]).collect())
            }
            MonomialOrder::Block(segments) => {
                let mut out = Vec::new();
                let mut start = 0;
                for (len, inner) in segments {
                    let local: Vec<usize> = keep
                        .iter()
                        .filter(|&&i| i >= start && i < start + len)
                        .map(|&i| i - start)
                        .collect();
                    if !local.is_empty() {
                        out.push((local.len(), inner.restrict(&local)));
                    }
                    start += len;
                }
                if out.len() == 1 {
                    out.pop().unwrap().1
                } else {
                    MonomialOrder::Block(out)
                }
            }
        }
    }

    /// The order extended by `extra` trailing variables.
    pub(crate) fn extend(&self, current: usize, extra: usize) -> MonomialOrder {
        match self {
            MonomialOrder::Lex => MonomialOrder::Lex,
            MonomialOrder::Grevlex => MonomialOrder::Grevlex,
            MonomialOrder::WeightedGrevlex(w) => {
                let mut w = w.clone();
                w.extend(std::iter::repeat_n(1, extra));
                MonomialOrder::WeightedGrevlex(w)
            }
            MonomialOrder::Block(s) => {
                let mut s = s.clone();
                s.push((extra, MonomialOrder::Grevlex));
                let _ = current;
                MonomialOrder::Block(s)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::WeightedGrevlex(w) => {
                let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                format!("wgrevlex({})", ws.join(","))
            }
            MonomialOrder::Block(s) => {
                let parts: Vec<String> = s.iter().map(|(l, o)| format!("{}:{}", l, o.name())).collect();
                format!("block({})", parts.join(";"))
            }
        }
    }
}

#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // x > y > z
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // x*z < y^2 under grevlex
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[0, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn lex_and_block() {
        let lex = MonomialOrder::Lex;
        assert_eq!(lex.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let b = MonomialOrder::Block(vec![(1, MonomialOrder::Grevlex), (2, MonomialOrder::Grevlex)]);
        assert_eq!(b.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(b.compare(&m(&[0, 1, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert!(b.validate(3));
        assert!(!b.validate(4));
    }

    #[test]
    fn restrict_block() {
        let b = MonomialOrder::Block(vec![(2, MonomialOrder::Lex), (2, MonomialOrder::Grevlex)]);
        assert_eq!(b.restrict(&[2, 3]), MonomialOrder::Grevlex);
        assert_eq!(
            b.restrict(&[1, 3]),
            MonomialOrder::Block(vec![(1, MonomialOrder::Lex), (1, MonomialOrder::Grevlex)])
        );
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0, 2]).divides(&m(&[1, 1, 2])));
        assert_eq!(m(&[1, 0, 2]).quotient_of(&m(&[1, 1, 3])), Some(m(&[0, 1, 1])));
        assert!(m(&[1, 0]).coprime(&m(&[0, 3])));
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
    }
}
