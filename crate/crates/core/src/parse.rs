//! Text syntax for polynomials and ring headers.
//!
//! Polynomials: identifiers, integer or `p/q` coefficients, `^` for non-negative integer
//! powers, optional `*`, and parentheses, e.g. `x^2*y^2 + 3/2 x z - (y - z)^2`.
//!
//! Ring header: `ring: x,y,z | params: u1,u2 | order: grevlex`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Rational};
use crate::ring::{RingContext, GEOM, PARAM};

/// Parses a polynomial; error positions are relative to `text` (line 1, column 1).
pub fn parse_polynomial(ring: &RingContext, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, 1, 1)
}

/// Parses a polynomial whose first character sits at `(line, column)` of a larger file.
pub fn parse_polynomial_at(ring: &RingContext, text: &str, line: usize, column: usize) -> Result<Polynomial> {
    let mut p = Parser { ring, chars: text.chars().collect(), pos: 0, line, column };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty polynomial"));
    }
    let poly = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(&format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(poly)
}

/// Parses a comma-separated list of polynomials (commas inside parentheses do not split).
pub fn parse_polynomial_list(ring: &RingContext, text: &str) -> Result<Vec<Polynomial>> {
    parse_polynomial_list_at(ring, text, 1, 1)
}

pub fn parse_polynomial_list_at(ring: &RingContext, text: &str, line: usize, column: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let chars: Vec<char> = text.chars().collect();
    for (i, &c) in chars.iter().enumerate().chain(std::iter::once((chars.len(), &','))) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                let piece: String = chars[start..i].iter().collect();
                if piece.trim().is_empty() {
                    if i < chars.len() || !out.is_empty() {
                        return Err(Error::Parse { line, column: column + start, message: "empty list entry".into() });
                    }
                } else {
                    out.push(parse_polynomial_at(ring, &piece, line, column + start)?);
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Parses `ring: x,y,z | params: u1,u2 | order: grevlex` into a ring with `geom` and `param`
/// blocks (geometric variables first).
pub fn parse_ring_header(text: &str) -> Result<RingContext> {
    parse_ring_header_at(text, 1)
}

pub fn parse_ring_header_at(text: &str, line: usize) -> Result<RingContext> {
    let mut geom: Option<Vec<String>> = None;
    let mut params: Vec<String> = Vec::new();
    let mut order = MonomialOrder::Grevlex;
    let mut offset = 0;
    for segment in text.split('|') {
        let col = offset + 1 + (segment.len() - segment.trim_start().len());
        offset += segment.len() + 1;
        let seg = segment.trim();
        let (key, value) = seg.split_once(':').ok_or_else(|| Error::Parse {
            line,
            column: col,
            message: format!("expected `key: value`, found `{}`", seg),
        })?;
        let names = || -> Vec<String> {
            value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
        };
        match key.trim() {
            "ring" => geom = Some(names()),
            "params" => params = names(),
            "order" => {
                order = parse_order(value.trim())
                    .ok_or_else(|| Error::Parse { line, column: col, message: format!("unknown order `{}`", value.trim()) })?
            }
            other => {
                return Err(Error::Parse { line, column: col, message: format!("unknown header field `{}`", other) })
            }
        }
    }
    let geom = geom.ok_or_else(|| Error::Parse { line, column: 1, message: "missing `ring:` field".into() })?;
    if geom.is_empty() {
        return Err(Error::Parse { line, column: 1, message: "ring has no variables".into() });
    }
    RingContext::new(&[(GEOM, geom), (PARAM, params)], order).map_err(|e| match e {
        Error::InvalidRing(m) => Error::Parse { line, column: 1, message: m },
        e => e,
    })
}

pub fn parse_order(s: &str) -> Option<MonomialOrder> {
    match s {
        "lex" => Some(MonomialOrder::Lex),
        "grevlex" => Some(MonomialOrder::Grevlex),
        _ => {
            let inner = s.strip_prefix("wgrevlex(")?.strip_suffix(')')?;
            let w: Option<Vec<u32>> = inner.split(',').map(|x| x.trim().parse().ok()).collect();
            w.map(MonomialOrder::WeightedGrevlex)
        }
    }
}

struct Parser<'a> {
    ring: &'a RingContext,
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { line: self.line, column: self.column + self.pos, message: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut negate = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negate = c == '-';
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(' => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                self.pos = start;
                return Err(self.error("expected a non-negative integer exponent after `^`"));
            }
            let e: u32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let mut value = Rational::from_integer(num);
                let save = self.pos;
                self.skip_ws();
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.error("expected a denominator after `/`"));
                    }
                    let den: BigInt = d.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    value = Rational::new(value.numer().clone(), den);
                } else {
                    self.pos = save;
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                let mut name = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var_at(self.ring, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable `{}`", name)))
                    }
                }
            }
            Some(c) => Err(self.error(&format!("unexpected `{}`", c))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn ring() -> RingContext {
        RingContext::geometric(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_quartic() {
        let r = ring();
        let f = parse_polynomial(&r, "x^2*y^2 + x^2*z^2 + y^2*z^2").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.degree(), Some(4));
        let g = parse_polynomial(&r, "x^2 y^2+x^2z^2 +y^2 * z^2").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn parses_rationals_and_parentheses() {
        let r = ring();
        let f = parse_polynomial(&r, "3/2*x - (y - z)^2").unwrap();
        let g = parse_polynomial(&r, "-y^2 + 2*y*z - z^2 + 3/2 x").unwrap();
        assert_eq!(f, g);
        let c = parse_polynomial(&r, "-4/6").unwrap();
        assert_eq!(c.constant_term(), crate::poly::rat(-2, 3));
        assert_eq!(parse_polynomial(&r, "0").unwrap(), Polynomial::zero(&r));
        assert_eq!(parse_polynomial(&r, "2*3").unwrap().constant_term(), int(6));
    }

    #[test]
    fn reports_positions() {
        let r = ring();
        match parse_polynomial(&r, "x^^2") {
            Err(Error::Parse { line: 1, column: 3, .. }) => {}
            other => panic!("unexpected {:?}", other),
        }
        match parse_polynomial(&r, "x + w") {
            Err(Error::Parse { column: 5, message, .. }) => assert!(message.contains("unknown variable")),
            other => panic!("unexpected {:?}", other),
        }
        assert!(parse_polynomial(&r, "(x+y").is_err());
        assert!(parse_polynomial(&r, "1/0").is_err());
        assert!(parse_polynomial(&r, "").is_err());
    }

    #[test]
    fn list_splitting_respects_parentheses() {
        let r = ring();
        let l = parse_polynomial_list(&r, "x^2 - x*z, (y - z)*(y + z), z").unwrap();
        assert_eq!(l.len(), 3);
        assert!(parse_polynomial_list(&r, "x,,y").is_err());
    }

    #[test]
    fn header() {
        let r = parse_ring_header("ring: x,y,z | params: u1,u2 | order: grevlex").unwrap();
        assert_eq!(r.arity(), 5);
        assert_eq!(r.block(PARAM).unwrap().len, 2);
        assert_eq!(r.block(GEOM).unwrap().len, 3);
        let r = parse_ring_header("ring: x,y | order: lex").unwrap();
        assert_eq!(r.order(), &MonomialOrder::Lex);
        assert!(parse_ring_header("ring: x,x").is_err());
        assert!(parse_ring_header("params: u").is_err());
        assert!(parse_ring_header("ring: x | order: foo").is_err());
    }
}
