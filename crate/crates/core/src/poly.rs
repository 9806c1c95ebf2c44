//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept sorted descending under the ring's monomial order with no zero
//! coefficients, so structural equality is ideal-free polynomial equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::RingContext;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone)]
pub struct Polynomial {
    ring: RingContext,
    terms: Vec<(Monomial, Rational)>,
}

/// Homogeneity of a polynomial with respect to a set of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(u32),
    NotHomogeneous,
    /// The zero polynomial, which is given no degree.
    Zero,
}

impl Homogeneity {
    pub fn degree(&self) -> Option<u32> {
        match self {
            Homogeneity::Homogeneous(d) => Some(*d),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self, Homogeneity::Homogeneous(_))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Polynomial {
    pub fn zero(ring: &RingContext) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingContext) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingContext, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.arity()), c)
    }

    pub fn monomial(ring: &RingContext, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.arity(), ring.arity());
        if c.is_zero() {
            Self::zero(ring)
        } else {
            Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
        }
    }

    pub fn var(ring: &RingContext, name: &str) -> Result<Self> {
        let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &RingContext, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.arity(), index), Rational::one())
    }

    /// Collects arbitrary terms (duplicates summed, zeros dropped) into canonical form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(ring: &RingContext, terms: I) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<(Monomial, Rational)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(ring: &RingContext, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.terms.iter().find(|(m, _)| m.is_one()).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Largest exponent sum over the given variable indices.
    pub fn degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|&i| m.exponent(i) as u32).sum())
            .max()
    }

    pub fn uses_variable(&self, index: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(index) > 0)
    }

    pub fn homogeneity_in(&self, vars: &[usize]) -> Homogeneity {
        let mut degs = self.terms.iter().map(|(m, _)| vars.iter().map(|&i| m.exponent(i) as u32).sum::<u32>());
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::NotHomogeneous
                }
            }
        }
    }

    /// Homogeneity with respect to the variables of a named block.
    pub fn homogeneity(&self, block: &str) -> Result<Homogeneity> {
        let b = self.ring.require_block(block)?;
        let vars: Vec<usize> = b.range().collect();
        Ok(self.homogeneity_in(&vars))
    }

    /// Homogeneity for a grading given by per-variable weights.
    pub fn weighted_homogeneity(&self, weights: &[u32]) -> Homogeneity {
        let mut degs = self
            .terms
            .iter()
            .map(|(m, _)| m.exponents().iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum::<u32>());
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::NotHomogeneous
                }
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial::from_terms(&self.ring, acc)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// `self / d` when `d` divides `self` exactly, else `None`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(self.ring == d.ring, "div_exact: ring mismatch");
        let (lm, lc) = match d.terms.first() {
            Some((m, c)) => (m, c),
            None => return None,
        };
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = lm.quotient_of(m)?;
            let qc = c / lc;
            rem = &rem - &d.mul_monomial(&q, &qc);
            quot.push((q, qc));
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quot))
    }

    /// Formal partial derivative by variable name.
    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        let i = self.ring.var_index(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.derivative_at(i))
    }

    pub fn derivative_at(&self, index: usize) -> Polynomial {
        // Dividing every surviving term by the same variable keeps them sorted.
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(index) > 0)
            .map(|(m, c)| {
                let e = m.exponent(index);
                let mut m = m.clone();
                m.set_exponent(index, e - 1);
                (m, c * BigInt::from(e))
            })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Substitutes rational values for the variables of `block`; the result lives in the ring
    /// without that block.
    pub fn evaluate_block(&self, block: &str, values: &[Rational]) -> Result<Polynomial> {
        let b = self.ring.require_block(block)?.clone();
        if values.len() != b.len {
            return Err(Error::ArityMismatch { expected: b.len, got: values.len() });
        }
        let drop: Vec<usize> = b.range().collect();
        let target = self.ring.without(&drop)?;
        Ok(self.evaluate_into(&target, &drop, values))
    }

    /// Substitutes `values[k]` for variable `vars[k]` and moves the result into `target`, which
    /// must carry the remaining variables in their original relative order.
    pub fn evaluate_into(&self, target: &RingContext, vars: &[usize], values: &[Rational]) -> Polynomial {
        let keep: Vec<Option<usize>> = (0..self.ring.arity()).filter(|i| !vars.contains(i)).map(Some).collect();
        debug_assert_eq!(keep.len(), target.arity());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut c = c.clone();
            for (&v, val) in vars.iter().zip(values) {
                let e = m.exponent(v);
                if e > 0 {
                    c *= num_traits::pow(val.clone(), e as usize);
                }
            }
            (m.remap(&keep), c)
        });
        Polynomial::from_terms(target, terms)
    }

    /// Substitutes rational values for some variables, staying in the same ring.
    pub fn substitute_values(&self, vars: &[usize], values: &[Rational]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut c = c.clone();
            let mut m = m.clone();
            for (&v, val) in vars.iter().zip(values) {
                let e = m.exponent(v);
                if e > 0 {
                    c *= num_traits::pow(val.clone(), e as usize);
                    m.set_exponent(v, 0);
                }
            }
            (m, c)
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes a polynomial (in the same ring) for each listed variable.
    pub fn substitute(&self, vars: &[usize], images: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut term = Polynomial::one(&self.ring);
            for (&v, img) in vars.iter().zip(images) {
                let e = rest.exponent(v);
                if e > 0 {
                    rest.set_exponent(v, 0);
                    term = term.product(&img.pow(e as u32));
                }
            }
            acc = acc.merge(&term.mul_monomial(&rest, c), false);
        }
        acc
    }

    /// Moves the polynomial into `target` via `map[i] = Some(source index)` for target variable `i`.
    /// Every variable used by `self` must be mapped.
    pub fn remap_into(&self, target: &RingContext, map: &[Option<usize>]) -> Polynomial {
        Polynomial::from_terms(target, self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())))
    }

    /// Embeds into a ring containing all of this ring's variables (matched by name).
    pub fn embed(&self, target: &RingContext) -> Result<Polynomial> {
        let map = embedding_map(&self.ring, target)?;
        if target == &self.ring {
            return Ok(self.clone());
        }
        Ok(self.remap_into(target, &map))
    }

    /// Restricts to `target` (matched by name); fails when a dropped variable is used.
    pub fn restrict(&self, target: &RingContext) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = target.names().iter().map(|n| self.ring.var_index(n)).collect();
        for i in 0..self.ring.arity() {
            if !map.contains(&Some(i)) && self.uses_variable(i) {
                return Err(Error::UnknownVariable(self.ring.name(i).to_string()));
            }
        }
        Ok(self.remap_into(target, &map))
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Scales to integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        if self.terms[0].1.is_negative() {
            num = -num;
        }
        self.scale(&BigRational::new(den, num))
    }

    /// Display with an explicit multiplication sign between every factor.
    pub fn to_text(&self) -> String {
        format!("{}", self)
    }
}

pub(crate) fn embedding_map(source: &RingContext, target: &RingContext) -> Result<Vec<Option<usize>>> {
    for n in source.names() {
        if target.var_index(n).is_none() {
            return Err(Error::UnknownVariable(n.clone()));
        }
    }
    Ok(target.names().iter().map(|n| source.var_index(n)).collect())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(if abs.is_integer() { abs.numer().to_string() } else { format!("{}/{}", abs.numer(), abs.denom()) });
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

// Operator sugar; mixing rings is a programming error and panics. Use the `checked_*`
// methods where the operands come from user input.
impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
