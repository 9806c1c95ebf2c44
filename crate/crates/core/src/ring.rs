//! Polynomial ring contexts: ordered variables grouped into named, contiguous blocks.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;

pub const GEOM: &str = "geom";
pub const FIBER: &str = "fiber";
pub const PARAM: &str = "param";
pub const AUX: &str = "aux";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    names: Vec<String>,
    blocks: Vec<Block>,
    order: MonomialOrder,
}

/// Shared handle to a polynomial ring over the rationals.
#[derive(Clone)]
pub struct RingContext(Arc<RingData>);

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for RingContext {}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .blocks
            .iter()
            .map(|b| format!("{}: {}", b.name, self.0.names[b.range()].join(",")))
            .collect();
        write!(f, "QQ[{}] order {}", parts.join(" | "), self.0.order.name())
    }
}

impl RingContext {
    /// Builds a ring from `(block name, variables)` pairs; blocks are laid out in the given order.
    pub fn new<S: AsRef<str>>(blocks: &[(&str, Vec<S>)], order: MonomialOrder) -> Result<Self> {
        let mut names = Vec::new();
        let mut out_blocks = Vec::new();
        for (bname, vars) in blocks {
            if bname.is_empty() {
                return Err(Error::InvalidRing("empty block name".into()));
            }
            if out_blocks.iter().any(|b: &Block| b.name == *bname) {
                return Err(Error::InvalidRing(format!("duplicate block `{}`", bname)));
            }
            if vars.is_empty() {
                continue;
            }
            out_blocks.push(Block { name: bname.to_string(), start: names.len(), len: vars.len() });
            for v in vars {
                let v = v.as_ref();
                if !is_identifier(v) {
                    return Err(Error::InvalidRing(format!("invalid variable name `{}`", v)));
                }
                if names.iter().any(|n| n == v) {
                    return Err(Error::InvalidRing(format!("duplicate variable `{}`", v)));
                }
                names.push(v.to_string());
            }
        }
        if !order.validate(names.len()) {
            return Err(Error::InvalidRing(format!(
                "order {} does not fit {} variables",
                order.name(),
                names.len()
            )));
        }
        Ok(RingContext(Arc::new(RingData { names, blocks: out_blocks, order })))
    }

    /// `QQ[vars]` with a single geometric block under grevlex.
    pub fn geometric<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        let v: Vec<&str> = vars.iter().map(|s| s.as_ref()).collect();
        Self::new(&[(GEOM, v)], MonomialOrder::Grevlex)
    }

    pub fn arity(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0.names[index]
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn blocks(&self) -> &[Block] {
        &self.0.blocks
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.0.blocks.iter().find(|b| b.name == name)
    }

    pub fn require_block(&self, name: &str) -> Result<&Block> {
        self.block(name).ok_or_else(|| Error::UnknownBlock(name.to_string()))
    }

    /// Variable indices of a block; an absent block is treated as empty.
    pub fn block_indices(&self, name: &str) -> Vec<usize> {
        self.block(name).map(|b| b.range().collect()).unwrap_or_default()
    }

    pub fn block_of(&self, index: usize) -> &Block {
        self.0.blocks.iter().find(|b| b.range().contains(&index)).expect("every variable has a block")
    }

    /// Same variables and blocks under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        if !order.validate(self.arity()) {
            return Err(Error::InvalidRing(format!("order {} does not fit ring", order.name())));
        }
        Ok(RingContext(Arc::new(RingData {
            names: self.0.names.clone(),
            blocks: self.0.blocks.clone(),
            order,
        })))
    }

    /// Appends a new trailing block; fresh names are made unique by priming.
    pub fn extend(&self, block: &str, vars: &[&str]) -> Result<Self> {
        let mut blocks: Vec<(String, Vec<String>)> = self
            .0
            .blocks
            .iter()
            .map(|b| (b.name.clone(), self.0.names[b.range()].to_vec()))
            .collect();
        let mut fresh = Vec::new();
        for v in vars {
            let mut name = v.to_string();
            while self.0.names.contains(&name) || fresh.contains(&name) {
                name.push('_');
            }
            fresh.push(name);
        }
        let mut bname = block.to_string();
        while blocks.iter().any(|(n, _)| *n == bname) {
            bname.push('_');
        }
        blocks.push((bname, fresh));
        let order = self.0.order.extend(self.arity(), vars.len());
        let refs: Vec<(&str, Vec<String>)> = blocks.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
        Self::new(&refs, order)
    }

    /// The ring on the variables not in `drop`, with the induced order.
    pub fn without(&self, drop: &[usize]) -> Result<Self> {
        let keep: Vec<usize> = (0..self.arity()).filter(|i| !drop.contains(i)).collect();
        let mut blocks: Vec<(String, Vec<String>)> = Vec::new();
        for b in &self.0.blocks {
            let vars: Vec<String> =
                b.range().filter(|i| !drop.contains(i)).map(|i| self.0.names[i].clone()).collect();
            blocks.push((b.name.clone(), vars));
        }
        let refs: Vec<(&str, Vec<String>)> = blocks.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
        Self::new(&refs, self.0.order.restrict(&keep))
    }

    /// Ring with the variables in `first` moved into a leading block `elim` and the rest into a
    /// block `rest`, under the block order `(grevlex | grevlex)`. Returns the ring and the map
    /// from new variable positions to old ones.
    pub(crate) fn elimination_layout(&self, first: &[usize]) -> Result<(Self, Vec<usize>)> {
        let rest: Vec<usize> = (0..self.arity()).filter(|i| !first.contains(i)).collect();
        let mut perm: Vec<usize> = first.to_vec();
        perm.extend(rest.iter().copied());
        let elim_names: Vec<String> = first.iter().map(|&i| self.0.names[i].clone()).collect();
        let rest_names: Vec<String> = rest.iter().map(|&i| self.0.names[i].clone()).collect();
        let mut segments = Vec::new();
        if !first.is_empty() {
            segments.push((first.len(), MonomialOrder::Grevlex));
        }
        if !rest.is_empty() {
            segments.push((rest.len(), self.0.order.restrict(&rest)));
        }
        let order = if segments.len() == 1 { segments.pop().unwrap().1 } else { MonomialOrder::Block(segments) };
        let ring = Self::new(&[("elim", elim_names), ("rest", rest_names)], order)?;
        Ok((ring, perm))
    }

    pub fn same_variables(&self, other: &RingContext) -> bool {
        self.0.names == other.0.names
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(RingContext::geometric(&["x", "x"]).is_err());
        assert!(RingContext::geometric(&["x", ""]).is_err());
        assert!(RingContext::geometric(&["x", "2y"]).is_err());
        assert!(RingContext::new(&[(GEOM, vec!["x"])], MonomialOrder::WeightedGrevlex(vec![1, 2])).is_err());
    }

    #[test]
    fn extend_and_drop() {
        let r = RingContext::geometric(&["x", "y", "z"]).unwrap();
        let s = r.extend(FIBER, &["T1", "T2", "T3"]).unwrap();
        assert_eq!(s.arity(), 6);
        assert_eq!(s.block(FIBER).unwrap().start, 3);
        let t = s.extend(AUX, &["x"]).unwrap();
        assert_eq!(t.name(6), "x_");
        let back = t.without(&[6]).unwrap();
        assert_eq!(back.names(), s.names());
    }

    #[test]
    fn elimination_layout_moves_block_first() {
        let r = RingContext::new(&[(GEOM, vec!["x", "y"]), (PARAM, vec!["u"])], MonomialOrder::Grevlex).unwrap();
        let (e, perm) = r.elimination_layout(&[0, 1]).unwrap();
        assert_eq!(perm, vec![0, 1, 2]);
        assert_eq!(e.block("elim").unwrap().len, 2);
        let (e2, perm2) = r.elimination_layout(&[2]).unwrap();
        assert_eq!(perm2, vec![2, 0, 1]);
        assert_eq!(e2.name(0), "u");
    }
}
