//! Rational linear algebra on homogeneous pieces of polynomial ideals.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::monomial::Monomial;
use crate::poly::{Homogeneity, Polynomial, Rational};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    row_reduce(&mut rows).len()
}

/// Basis of `{v : M v = 0}` for an `m × n` matrix given by rows.
pub fn nullspace(rows: Vec<Vec<Rational>>, n: usize) -> Vec<Vec<Rational>> {
    let mut rows = rows;
    let pivots = row_reduce(&mut rows);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

/// All monomials of total degree `d` in the variables `vars` of an `arity`-variable ring.
pub fn monomials_of_degree(arity: usize, vars: &[usize], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; arity];
    fn go(k: usize, left: u32, vars: &[usize], exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if k + 1 == vars.len() {
            exps[vars[k]] = left as u16;
            out.push(Monomial::from_exponents(exps));
            exps[vars[k]] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[vars[k]] = e as u16;
            go(k + 1, left - e, vars, exps, out);
        }
        exps[vars[k]] = 0;
    }
    if vars.is_empty() {
        if d == 0 {
            out.push(Monomial::one(arity));
        }
        return out;
    }
    go(0, d, vars, &mut exps, &mut out);
    out
}

/// Coefficient rows of `polys` over a shared monomial index.
pub fn coefficient_rows(polys: &[Polynomial]) -> Vec<Vec<Rational>> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect()
}

/// The degree-`d` part of the ideal generated by homogeneous `gens` (in the grading where
/// every variable has degree 1), as a spanning set. Non-homogeneous generators are skipped, so
/// callers check homogeneity first.
pub fn graded_piece(gens: &[Polynomial], d: u32) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for g in gens {
        let Homogeneity::Homogeneous(e) = g.homogeneity_in(&(0..g.ring().arity()).collect::<Vec<_>>()) else {
            continue;
        };
        if e > d {
            continue;
        }
        let all: Vec<usize> = (0..g.ring().arity()).collect();
        for m in monomials_of_degree(g.ring().arity(), &all, d - e) {
            out.push(g.mul_monomial(&m, &Rational::one()));
        }
    }
    out
}

/// `dim_k` of the degree-`d` part of the ideal generated by homogeneous `gens`.
pub fn graded_dimension(gens: &[Polynomial], d: u32) -> usize {
    rank(coefficient_rows(&graded_piece(gens, d)))
}
