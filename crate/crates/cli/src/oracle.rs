//! Random small instances and a brute-force membership oracle for monomial ideals.

use aluffi_core::poly::int;
use aluffi_core::{Monomial, Polynomial, RingContext};
use rand::seq::SliceRandom;
use rand::Rng;

/// A monomial ideal as a list of exponent vectors.
pub type MonomialGens = Vec<Vec<u16>>;

pub fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &MonomialGens, m: &[u16]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

fn times(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn power(a: &[u16], k: u16) -> Vec<u16> {
    a.iter().map(|x| x * k).collect()
}

pub fn in_intersection(i: &MonomialGens, j: &MonomialGens, m: &[u16]) -> bool {
    member(i, m) && member(j, m)
}

/// `m ∈ I : J` iff `m g ∈ I` for every generator `g` of `J`.
pub fn in_quotient(i: &MonomialGens, j: &MonomialGens, m: &[u16]) -> bool {
    j.iter().all(|g| member(i, &times(m, g)))
}

/// `m ∈ I : J^∞` iff for every generator `g` of `J` some `m g^k ∈ I`; `k = top + 1` suffices
/// when every exponent of `I` is at most `top` and `g ≠ 1`.
pub fn in_saturation(i: &MonomialGens, j: &MonomialGens, m: &[u16], top: u16) -> bool {
    j.iter().all(|g| member(i, &times(m, &power(g, top + 1))))
}

/// Every exponent vector with entries in `0..=top`.
pub fn box_monomials(arity: usize, top: u16) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=top).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Between 1 and `max_gens` nonconstant monomials of total degree at most `max_degree`.
pub fn random_monomial_ideal<R: Rng>(rng: &mut R, arity: usize, max_gens: usize, max_degree: u16) -> MonomialGens {
    let k = rng.gen_range(1..=max_gens);
    (0..k)
        .map(|_| loop {
            let d = rng.gen_range(1..=max_degree);
            let mut e = vec![0u16; arity];
            for _ in 0..d {
                e[rng.gen_range(0..arity)] += 1;
            }
            if e.iter().any(|&x| x > 0) {
                break e;
            }
        })
        .collect()
}

pub fn monomial_polys(ring: &RingContext, gens: &MonomialGens) -> Vec<Polynomial> {
    gens.iter().map(|e| Polynomial::monomial(ring, Monomial::from_exponents(e), int(1))).collect()
}

/// A polynomial with up to `terms` terms of degree at most `degree` and coefficients in `-5..=5`.
pub fn random_polynomial<R: Rng>(rng: &mut R, ring: &RingContext, terms: usize, degree: u16) -> Polynomial {
    let n = ring.arity();
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let d = rng.gen_range(0..=degree);
        let mut e = vec![0u16; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = loop {
            let c: i64 = rng.gen_range(-5..=5);
            if c != 0 {
                break c;
            }
        };
        out.push((Monomial::from_exponents(&e), int(c)));
    }
    Polynomial::from_terms(ring, out)
}

/// A regular sequence `(x^a, y^b, z^c)` after the unimodular change `y ↦ y + αx`,
/// `z ↦ z + βx + γy`, together with a nonempty subset of it.
pub fn random_regular_pair<R: Rng>(rng: &mut R, ring: &RingContext) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let x = Polynomial::var_at(ring, 0);
    let y = Polynomial::var_at(ring, 1);
    let z = Polynomial::var_at(ring, 2);
    let c = |rng: &mut R| Polynomial::constant(ring, int(rng.gen_range(-2..=2)));
    let y2 = &y + &(&c(rng) * &x);
    let z2 = &(&z + &(&c(rng) * &x)) + &(&c(rng) * &y);
    let i: Vec<Polynomial> = [x, y2, z2].iter().map(|v| v.pow(rng.gen_range(1..=2))).collect();
    let mut idx: Vec<usize> = (0..3).collect();
    idx.shuffle(rng);
    let k = rng.gen_range(1..=2);
    let mut chosen = idx[..k].to_vec();
    chosen.sort();
    let j = chosen.iter().map(|&t| i[t].clone()).collect();
    (i, j)
}
