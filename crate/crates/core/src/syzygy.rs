//! Polynomial matrices, first syzygies, minors and Jacobian matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::LiftData;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// A dense matrix of polynomials over one ring, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingContext,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl PolyMatrix {
    pub fn new(ring: &RingContext, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ArityMismatch { expected: rows * cols, got: entries.len() });
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    /// Builds a `rows × columns.len()` matrix from column vectors.
    pub fn from_columns(ring: &RingContext, rows: usize, columns: &[Vec<Polynomial>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * columns.len());
        for i in 0..rows {
            for c in columns {
                if c.len() != rows {
                    return Err(Error::ArityMismatch { expected: rows, got: c.len() });
                }
                entries.push(c[i].clone());
            }
        }
        Self::new(ring, rows, columns.len(), entries)
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    /// Row vector `v` times this matrix.
    pub fn left_multiply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.rows {
            return Err(Error::ArityMismatch { expected: self.rows, got: v.len() });
        }
        Ok((0..self.cols)
            .map(|j| {
                let mut acc = Polynomial::zero(&self.ring);
                for (i, vi) in v.iter().enumerate() {
                    acc = &acc + &(vi * self.get(i, j));
                }
                acc
            })
            .collect())
    }

    /// Determinant of the submatrix on the given rows and columns (Laplace expansion).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => Polynomial::one(&self.ring),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                &(self.get(rows[0], cols[0]) * self.get(rows[1], cols[1]))
                    - &(self.get(rows[0], cols[1]) * self.get(rows[1], cols[0]))
            }
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                let rest_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(rows[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = e * &self.minor(rest_rows, &rest_cols);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    /// `I_r`: the ideal of all `r × r` minors; `I_0 = (1)`.
    pub fn minors(&self, r: usize) -> Result<Ideal> {
        if r > self.rows.min(self.cols) {
            return Err(Error::InvalidArgument(format!(
                "minor size {} exceeds {}x{} matrix",
                r, self.rows, self.cols
            )));
        }
        let mut gens = Vec::new();
        for rs in subsets(self.rows, r) {
            for cs in subsets(self.cols, r) {
                gens.push(self.minor(&rs, &cs));
            }
        }
        Ideal::new(&self.ring, gens)
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Generators of the first syzygy module of `gens`, as the columns of a `gens.len() × m` matrix.
pub fn syzygies(ring: &RingContext, gens: &[Polynomial]) -> Result<PolyMatrix> {
    if gens.is_empty() {
        return Err(Error::InvalidArgument("syzygies of an empty list".into()));
    }
    let data = LiftData::new(ring, gens)?;
    let cols: Vec<Vec<Polynomial>> = data.syzygies().into_iter().map(|c| primitive_column(&c)).collect();
    PolyMatrix::from_columns(ring, gens.len(), &cols)
}

/// Scales a column so its first nonzero entry is primitive with positive leading coefficient.
fn primitive_column(col: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = col.iter().find(|p| !p.is_zero()) else { return col.to_vec() };
    let prim = first.primitive();
    let factor = prim.leading_coefficient().unwrap() / first.leading_coefficient().unwrap();
    col.iter().map(|p| p.scale(&factor)).collect()
}

/// Jacobian matrix: rows are the variables `vars`, columns are the generators.
pub fn jacobian(ring: &RingContext, gens: &[Polynomial], vars: &[usize]) -> Result<PolyMatrix> {
    let mut entries = Vec::with_capacity(vars.len() * gens.len());
    for &v in vars {
        if v >= ring.arity() {
            return Err(Error::InvalidArgument(format!("variable index {} out of range", v)));
        }
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            entries.push(g.derivative_at(v));
        }
    }
    PolyMatrix::new(ring, vars.len(), gens.len(), entries)
}

/// Matrix of second partial derivatives of `f` in the variables `vars`.
pub fn hessian(f: &Polynomial, vars: &[usize]) -> Result<PolyMatrix> {
    let grads: Vec<Polynomial> = vars.iter().map(|&v| f.derivative_at(v)).collect();
    jacobian(f.ring(), &grads, vars)
}

/// `J + I_c(Θ)` with `Θ` the Jacobian of the generators of `J` in `vars` and `c = codim J`.
pub fn jacobian_ideal(j: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let c = j
        .dimension()?
        .codim()
        .ok_or_else(|| Error::UnitIdeal("the Jacobian ideal of (1)".into()))?;
    let theta = jacobian(j.ring(), j.generators(), vars)?;
    let c = c.min(theta.rows().min(theta.cols()));
    j.sum(&theta.minors(c)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_polynomial_list};

    fn ring() -> RingContext {
        RingContext::geometric(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn koszul_column() {
        let r = ring();
        let gens = parse_polynomial_list(&r, "x, y").unwrap();
        let phi = syzygies(&r, &gens).unwrap();
        assert_eq!(phi.cols(), 1);
        let col = phi.column(0);
        let expect = parse_polynomial_list(&r, "y, -x").unwrap();
        let neg: Vec<Polynomial> = expect.iter().map(|p| -p).collect();
        assert!(col == expect || col == neg);
        let i1 = phi.minors(1).unwrap();
        assert!(i1.equals(&Ideal::new(&r, gens).unwrap()).unwrap());
    }

    #[test]
    fn quartic_syzygies_annihilate() {
        let r = ring();
        let f = parse_polynomial(&r, "x^2*y^2 + x^2*z^2 + y^2*z^2").unwrap();
        let gens: Vec<Polynomial> = (0..3).map(|i| f.derivative_at(i)).collect();
        let phi = syzygies(&r, &gens).unwrap();
        for z in phi.left_multiply(&gens).unwrap() {
            assert!(z.is_zero());
        }
        assert_eq!(phi.minors(1).unwrap().dimension().unwrap().codim(), Some(3));
    }

    #[test]
    fn jacobian_and_hessian() {
        let r = ring();
        let gens = parse_polynomial_list(&r, "x^2 - x*z, y^2 - y*z").unwrap();
        let theta = jacobian(&r, &gens, &[0, 1, 2]).unwrap();
        let expect = parse_polynomial_list(&r, "2*x - z, 0, 0, 2*y - z, -x, -y").unwrap();
        assert_eq!(theta.entries(), &expect[..]);
        let h = hessian(&parse_polynomial(&r, "x*y*z").unwrap(), &[0, 1, 2]).unwrap();
        assert!(h.get(0, 0).is_zero());
        assert_eq!(h.get(0, 1), &parse_polynomial(&r, "z").unwrap());
        assert_eq!(h.get(1, 0), h.get(0, 1));
    }

    #[test]
    fn four_points_jacobian_ideal() {
        let r = ring();
        let j = Ideal::new(&r, parse_polynomial_list(&r, "x^2 - x*z, y^2 - y*z").unwrap()).unwrap();
        let i = jacobian_ideal(&j, &[0, 1, 2]).unwrap();
        let expect = Ideal::new(
            &r,
            parse_polynomial_list(&r, "x^2 - x*z, y^2 - y*z, x*(2*y - z), y*(2*x - z), (2*x - z)*(2*y - z)").unwrap(),
        )
        .unwrap();
        assert!(i.equals(&expect).unwrap());
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
