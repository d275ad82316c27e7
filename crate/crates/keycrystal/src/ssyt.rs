//! Semistandard Young tableaux and the normal GL_n crystal on them.

use std::fmt;
use std::str::FromStr;

use crate::comb::{Composition, Partition};
use crate::crystal::CrystalGraph;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Rows listed bottom to top (French), weakly increasing along rows and
/// strictly increasing up columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

fn semistandard(rows: &[Vec<u8>]) -> bool {
    if rows.iter().any(|r| r.is_empty()) {
        return false;
    }
    if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return false;
    }
    if rows.iter().flatten().any(|&x| x == 0) {
        return false;
    }
    for r in rows {
        if r.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
    }
    for w in rows.windows(2) {
        if w[1].iter().zip(&w[0]).any(|(up, down)| up <= down) {
            return false;
        }
    }
    true
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if !semistandard(&rows) {
            return Err(Error::Invalid(format!("{rows:?} is not semistandard")));
        }
        Ok(Tableau { rows })
    }

    /// Builds a tableau from bottom-justified columns, each listed bottom up.
    pub fn from_columns(cols: &[Vec<u8>]) -> Result<Self> {
        let h = cols.iter().map(|c| c.len()).max().unwrap_or(0);
        let rows = (0..h)
            .map(|r| cols.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect())
            .collect();
        Tableau::new(rows)
    }

    /// Row r holds r's only.
    pub fn superstandard(lambda: &Partition) -> Self {
        Tableau {
            rows: lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(r, &k)| vec![r as u8 + 1; k])
                .collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("partition shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn max_entry(&self) -> u8 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn weight(&self, n: usize) -> Composition {
        let mut w = vec![0; n];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        Composition(w)
    }

    /// Entry at (row, column), 1-based.
    pub fn get(&self, r: usize, c: usize) -> Option<u8> {
        self.rows.get(r.wrapping_sub(1))?.get(c.wrapping_sub(1)).copied()
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        let w = self.rows.first().map_or(0, |r| r.len());
        (0..w)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    /// Rows from top to bottom, each read left to right.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Unpaired cells for colour i as ((row, col) of unpaired i+1's, of unpaired i's),
    /// both in column order. An i+1 pairs with an available i to its right.
    pub fn unpaired(&self, i: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let (a, b) = (i as u8, i as u8 + 1);
        let mut open: Vec<(usize, usize)> = vec![];
        let mut close_unmatched = vec![];
        let w = self.rows.first().map_or(0, |r| r.len());
        for c in 1..=w {
            let mut lo = None;
            let mut hi = None;
            for r in 1..=self.rows.len() {
                match self.get(r, c) {
                    Some(x) if x == a => lo = Some(r),
                    Some(x) if x == b => hi = Some(r),
                    _ => {}
                }
            }
            match (lo, hi) {
                (None, Some(r)) => open.push((r, c)),
                (Some(r), None) => {
                    if open.pop().is_none() {
                        close_unmatched.push((r, c));
                    }
                }
                _ => {}
            }
        }
        (open, close_unmatched)
    }

    pub fn eps(&self, i: usize) -> usize {
        self.unpaired(i).0.len()
    }

    pub fn phi(&self, i: usize) -> usize {
        self.unpaired(i).1.len()
    }

    /// Changes the leftmost unpaired i+1 to i.
    pub fn raise(&self, i: usize) -> Option<Tableau> {
        let (open, _) = self.unpaired(i);
        let &(r, c) = open.first()?;
        let mut t = self.clone();
        t.rows[r - 1][c - 1] = i as u8;
        debug_assert!(semistandard(&t.rows));
        Some(t)
    }

    /// Changes the rightmost unpaired i to i+1.
    pub fn lower(&self, i: usize) -> Option<Tableau> {
        let (_, close) = self.unpaired(i);
        let &(r, c) = close.last()?;
        let mut t = self.clone();
        t.rows[r - 1][c - 1] = i as u8 + 1;
        debug_assert!(semistandard(&t.rows));
        Some(t)
    }

    /// Reflection of the tableau across its i-string.
    pub fn weyl_reflect(&self, i: usize) -> Tableau {
        let w = self.weight(self.max_entry().max(i as u8 + 1) as usize);
        let (x, y) = (w.0[i - 1], w.0[i]);
        let mut t = self.clone();
        if x >= y {
            for _ in 0..x - y {
                t = t.lower(i).expect("string long enough");
            }
        } else {
            for _ in 0..y - x {
                t = t.raise(i).expect("string long enough");
            }
        }
        t
    }

    /// Row-insert x (bottom row first).
    pub fn insert(&mut self, x: u8) {
        let mut x = x;
        for row in self.rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(p) => {
                    std::mem::swap(&mut row[p], &mut x);
                }
                None => {
                    row.push(x);
                    return;
                }
            }
        }
        self.rows.push(vec![x]);
    }

    /// Insertion tableau P(w).
    pub fn from_word(word: &[u8]) -> Tableau {
        let mut t = Tableau::default();
        for &x in word {
            t.insert(x);
        }
        t
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Tableau::default());
        }
        let rows = s
            .split('/')
            .map(|r| {
                r.split_whitespace()
                    .map(|x| x.parse::<u8>().map_err(|_| Error::Parse(format!("bad entry {x:?}"))))
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// Schützenberger evacuation: P of the reversed, complemented reading word.
pub fn crystal_flip(t: &Tableau, n: usize) -> Tableau {
    let word: Vec<u8> = t.reading_word().iter().rev().map(|&x| n as u8 + 1 - x).collect();
    Tableau::from_word(&word)
}

/// SSYT_n(λ), sorted.
pub fn enumerate_ssyt(lambda: &Partition, n: usize) -> Vec<Tableau> {
    let shape = lambda.parts().to_vec();
    if shape.len() > n {
        return vec![];
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &k)| (0..k).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&k| vec![0; k]).collect();
    let mut out = vec![];
    fn go(k: usize, cells: &[(usize, usize)], n: usize, rows: &mut Vec<Vec<u8>>, out: &mut Vec<Tableau>) {
        if k == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { rows[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n as u8 {
            rows[r][c] = v;
            go(k + 1, cells, n, rows, out);
        }
        rows[r][c] = 0;
    }
    go(0, &cells, n, &mut rows, &mut out);
    out.sort();
    out
}

pub fn ssyt_crystal(lambda: &Partition, n: usize) -> CrystalGraph<Tableau> {
    CrystalGraph::from_lowering(n, enumerate_ssyt(lambda, n), |t| t.weight(n), |t, i| t.lower(i))
        .expect("tableau crystal is well formed")
}

/// s_λ(x_1..x_n) as a sum over SSYT.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Poly {
    let mut p = Poly::zero(n);
    for t in enumerate_ssyt(lambda, n) {
        p.add_term(t.weight(n).0.iter().map(|&x| x as u32).collect(), &crate::poly::QPoly::one());
    }
    p
}
