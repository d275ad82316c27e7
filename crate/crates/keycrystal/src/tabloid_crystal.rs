//! The i-pairing on key tabloids and the crystal operators it drives.

use serde::Serialize;

use crate::comb::Composition;
use crate::crystal::CrystalGraph;
use crate::error::Result;
use crate::tabloid::{enumerate_sskd, KeyTabloid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Symbol {
    Open,
    Close,
}

/// A residual cell: (column, row, symbol), all 1-based.
pub type Residual = (usize, usize, Symbol);

/// Result of bracket matching a column-ordered residual word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingWord {
    pub word: Vec<Residual>,
    /// Index pairs (open, close) into `word`.
    pub matched: Vec<(usize, usize)>,
    pub unmatched_open: Vec<usize>,
    pub unmatched_close: Vec<usize>,
    /// Columns holding both letters.
    pub column_paired: Vec<usize>,
}

impl PairingWord {
    pub fn from_word(word: Vec<Residual>, column_paired: Vec<usize>) -> Self {
        let mut stack: Vec<usize> = vec![];
        let mut matched = vec![];
        let mut unmatched_close = vec![];
        for (k, &(_, _, s)) in word.iter().enumerate() {
            match s {
                Symbol::Open => stack.push(k),
                Symbol::Close => match stack.pop() {
                    Some(o) => matched.push((o, k)),
                    None => unmatched_close.push(k),
                },
            }
        }
        matched.sort_unstable();
        PairingWord { word, matched, unmatched_open: stack, unmatched_close, column_paired }
    }

    pub fn cell(&self, k: usize) -> (usize, usize) {
        (self.word[k].0, self.word[k].1)
    }

    pub fn unpaired_open_count(&self) -> usize {
        self.unmatched_open.len()
    }

    pub fn unpaired_close_count(&self) -> usize {
        self.unmatched_close.len()
    }
}

/// i-pairing: i opens, i+1 closes, columns read left to right.
pub fn i_pairing(t: &KeyTabloid, i: usize) -> PairingWord {
    let (a, b) = (i as u8, i as u8 + 1);
    let mut word = vec![];
    let mut column_paired = vec![];
    for c in 1..=t.width() {
        let mut lo = None;
        let mut hi = None;
        for r in 1..=t.n() {
            match t.get(r, c) {
                Some(x) if x == a => lo = Some(r),
                Some(x) if x == b => hi = Some(r),
                _ => {}
            }
        }
        match (lo, hi) {
            (Some(_), Some(_)) => column_paired.push(c),
            (Some(r), None) => word.push((c, r, Symbol::Open)),
            (None, Some(r)) => word.push((c, r, Symbol::Close)),
            _ => {}
        }
    }
    PairingWord::from_word(word, column_paired)
}

fn find_in_column(t: &KeyTabloid, c: usize, v: u8) -> Option<usize> {
    (1..=t.n()).find(|&r| t.get(r, c) == Some(v))
}

/// e_i: flips the rightmost unpaired i+1, then swaps i and i+1 along the
/// maximal runs of affected columns on either side.
pub fn tabloid_raise(t: &KeyTabloid, i: usize) -> Option<KeyTabloid> {
    let p = i_pairing(t, i);
    let &k = p.unmatched_close.last()?;
    let (c0, r0) = p.cell(k);
    let (a, b) = (i as u8, i as u8 + 1);
    let mut out = t.clone();
    out.rows_mut()[r0 - 1][c0 - 1] = a;
    let mut c = c0;
    while c > 1 {
        c -= 1;
        match (out.get(r0, c), find_in_column(&out, c, a)) {
            (Some(x), Some(r)) if x == b && r > r0 => swap(&mut out, c, r0, r),
            _ => break,
        }
    }
    let mut c = c0 + 1;
    while c <= out.width() {
        match (out.get(r0, c), find_in_column(&out, c, a)) {
            (Some(x), Some(r)) if x == b && r < r0 => swap(&mut out, c, r0, r),
            _ => break,
        }
        c += 1;
    }
    debug_assert!(!t.is_valid() || out.is_valid());
    Some(out)
}

fn swap(t: &mut KeyTabloid, c: usize, r1: usize, r2: usize) {
    let rows = t.rows_mut();
    let x = rows[r1 - 1][c - 1];
    rows[r1 - 1][c - 1] = rows[r2 - 1][c - 1];
    rows[r2 - 1][c - 1] = x;
}

/// The leftmost unpaired i sits in row i and every column to its left has
/// an i in that row with an i+1 above it.
pub fn demazure_death(t: &KeyTabloid, i: usize) -> bool {
    let p = i_pairing(t, i);
    let Some(&k) = p.unmatched_open.first() else {
        return false;
    };
    let (c0, r0) = p.cell(k);
    if r0 != i {
        return false;
    }
    (1..c0).all(|c| {
        t.get(r0, c) == Some(i as u8)
            && find_in_column(t, c, i as u8 + 1).is_some_and(|r| r > r0)
    })
}

/// f_i: mirror of [`tabloid_raise`] on the leftmost unpaired i, or `None`
/// under Demazure death.
pub fn tabloid_lower(t: &KeyTabloid, i: usize) -> Option<KeyTabloid> {
    let p = i_pairing(t, i);
    let &k = p.unmatched_open.first()?;
    if demazure_death(t, i) {
        return None;
    }
    let (c0, r0) = p.cell(k);
    let (a, b) = (i as u8, i as u8 + 1);
    let mut out = t.clone();
    out.rows_mut()[r0 - 1][c0 - 1] = b;
    let mut c = c0;
    while c > 1 {
        c -= 1;
        match (out.get(r0, c), find_in_column(&out, c, b)) {
            (Some(x), Some(r)) if x == a && r > r0 => swap(&mut out, c, r0, r),
            _ => break,
        }
    }
    let mut c = c0 + 1;
    while c <= out.width() {
        match (out.get(r0, c), find_in_column(&out, c, b)) {
            (Some(x), Some(r)) if x == a && r < r0 => swap(&mut out, c, r0, r),
            _ => break,
        }
        c += 1;
    }
    debug_assert!(!t.is_valid() || out.is_valid());
    Some(out)
}

/// The tabloid crystal on SSKD(shape), with per-component maj.
#[derive(Clone, Debug)]
pub struct TabloidCrystal {
    pub shape: Composition,
    pub graph: CrystalGraph<KeyTabloid>,
    /// maj of each component, indexed like `graph.components()`.
    pub comp_maj: Vec<usize>,
    /// Highest weight vertex of each component.
    pub comp_highest: Vec<usize>,
}

pub fn build_tabloid_crystal(shape: &Composition) -> Result<TabloidCrystal> {
    let verts = enumerate_sskd(shape);
    let n = shape.len();
    let graph = CrystalGraph::from_lowering(n, verts, |t| t.weight(), tabloid_lower)?;
    let comps = graph.components();
    let mut comp_maj = vec![];
    let mut comp_highest = vec![];
    for (c, members) in comps.iter().enumerate() {
        let m = graph.vertex(members[0]).maj();
        if members.iter().any(|&k| graph.vertex(k).maj() != m) {
            return Err(crate::error::Error::Internal(format!("maj not constant on component {c}")));
        }
        let hw: Vec<usize> = members.iter().copied().filter(|&k| graph.is_highest(k)).collect();
        if hw.len() != 1 {
            return Err(crate::error::Error::Internal(format!(
                "component {c} has {} highest weights",
                hw.len()
            )));
        }
        comp_maj.push(m);
        comp_highest.push(hw[0]);
    }
    Ok(TabloidCrystal { shape: shape.clone(), graph, comp_maj, comp_highest })
}

impl TabloidCrystal {
    pub fn to_dot(&self) -> String {
        let g = &self.graph;
        g.to_dot(&self.shape.to_string(), |t| t.to_string(), |k| {
            format!("wt={} maj={}", g.weight(k), g.vertex(k).maj())
        })
    }
}
