use std::cmp::Ordering;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order given as a sequence of variable blocks.
///
/// Blocks are compared in sequence; inside a block the variables are listed
/// from most to least significant and compared with `kind`. A single block
/// holding every variable gives the plain lex or grevlex order, several blocks
/// give an elimination (product) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    blocks: Vec<Vec<usize>>,
    nvars: usize,
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        Self::single(OrderKind::GrevLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::single(OrderKind::Lex, nvars)
    }

    fn single(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            blocks: if nvars == 0 { vec![] } else { vec![(0..nvars).collect()] },
            nvars,
        }
    }

    /// Single-block order where `perm[0]` is the most significant variable.
    pub fn permuted(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        Self::blocks(kind, vec![perm])
    }

    /// Block order with the variables of `first` forming the leading block.
    pub fn elimination(kind: OrderKind, nvars: usize, first: &[usize]) -> Self {
        let lead: Vec<usize> = (0..nvars).filter(|i| first.contains(i)).collect();
        let rest: Vec<usize> = (0..nvars).filter(|i| !first.contains(i)).collect();
        let blocks = [lead, rest].into_iter().filter(|b| !b.is_empty()).collect();
        MonomialOrder { kind, blocks, nvars }
    }

    /// General block order. The blocks must partition `0..n`.
    pub fn blocks(kind: OrderKind, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        let nvars = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; nvars];
        for &v in blocks.iter().flatten() {
            if v >= nvars || seen[v] {
                return Err(Error::Integrity("block order is not a partition of the variables".into()));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, blocks, nvars })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn block_list(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True for the plain single-block order in natural variable order.
    pub fn is_plain(&self) -> bool {
        self.blocks.len() <= 1 && self.blocks.first().map_or(true, |b| b.iter().enumerate().all(|(i, &v)| i == v))
    }

    pub fn try_cmp(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        if a.len() != self.nvars {
            return Err(Error::LengthMismatch(a.len(), self.nvars));
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for block in &self.blocks {
            let o = match self.kind {
                OrderKind::Lex => cmp_lex(block, a, b),
                OrderKind::GrevLex => cmp_grevlex(block, a, b),
            };
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}

#[inline]
fn cmp_lex(block: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &v in block {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn cmp_grevlex(block: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = block.iter().map(|&v| a[v]).sum();
    let db: u32 = block.iter().map(|&v| b[v]).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &v in block.iter().rev() {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Comparison entry point mirroring the three-way result of the order.
pub fn cmp_monomials(order: &MonomialOrder, a: &[u32], b: &[u32]) -> Result<Ordering> {
    order.try_cmp(a, b)
}
