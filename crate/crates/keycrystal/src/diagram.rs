//! Diagrams: Kohnert moves, vertical and horizontal pairings, rectification,
//! the tableau map and the embedding of tabloids into tableaux.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::comb::Composition;
use crate::error::{Error, Result};
use crate::ssyt::{crystal_flip, Tableau};
use crate::tabloid::KeyTabloid;

/// A finite set of cells (row, column), both ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Diagram(BTreeSet<(usize, usize)>);

impl Diagram {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(cells: I) -> Result<Self> {
        let set: BTreeSet<_> = cells.into_iter().collect();
        if set.iter().any(|&(r, c)| r == 0 || c == 0) {
            return Err(Error::Invalid("cells are 1-based".into()));
        }
        Ok(Diagram(set))
    }

    pub fn cells(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.0.contains(&(r, c))
    }

    pub fn max_row(&self) -> usize {
        self.0.iter().map(|x| x.0).max().unwrap_or(0)
    }

    pub fn max_col(&self) -> usize {
        self.0.iter().map(|x| x.1).max().unwrap_or(0)
    }

    /// Cells per row, rows 1..=n.
    pub fn weight(&self, n: usize) -> Composition {
        let mut w = vec![0; n];
        for &(r, _) in &self.0 {
            w[r - 1] += 1;
        }
        Composition(w)
    }

    /// Left-justified rows of lengths a_1, …, a_n.
    pub fn key(a: &Composition) -> Diagram {
        Diagram(
            a.0.iter()
                .enumerate()
                .flat_map(|(r, &k)| (1..=k).map(move |c| (r + 1, c)))
                .collect(),
        )
    }

    fn moved(&self, from: (usize, usize), to: (usize, usize)) -> Diagram {
        let mut s = self.0.clone();
        assert!(s.remove(&from) && s.insert(to), "move target occupied");
        Diagram(s)
    }

    /// Drop the rightmost cell of `row` to the highest empty spot below it.
    pub fn kohnert_move(&self, row: usize) -> Option<Diagram> {
        let c = self.0.iter().filter(|x| x.0 == row).map(|x| x.1).max()?;
        let r2 = (1..row).rev().find(|&r| !self.contains(r, c))?;
        Some(self.moved((row, c), (r2, c)))
    }

    /// Column suffix counts weakly decrease from left to right.
    pub fn is_rectified(&self) -> bool {
        let top = self.max_row();
        for c in 2..=self.max_col() {
            let (mut left, mut right) = (0usize, 0usize);
            for r in (1..=top).rev() {
                left += self.contains(r, c - 1) as usize;
                right += self.contains(r, c) as usize;
                if left < right {
                    return false;
                }
            }
        }
        true
    }

    /// Vertical i-pairing. Returns the unpaired row-(i+1) cells and the
    /// unpaired row-i cells, each left to right.
    pub fn vertical_unpaired(&self, i: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let mut opens: Vec<(usize, usize)> = vec![];
        let mut closes = vec![];
        for c in 1..=self.max_col() {
            match (self.contains(i, c), self.contains(i + 1, c)) {
                (true, false) => opens.push((i, c)),
                (false, true) => {
                    if opens.pop().is_none() {
                        closes.push((i + 1, c));
                    }
                }
                _ => {}
            }
        }
        (closes, opens)
    }

    /// ẽ_i: push the rightmost vertically unpaired row-(i+1) cell down.
    pub fn raise(&self, i: usize) -> Option<Diagram> {
        let (up, _) = self.vertical_unpaired(i);
        let &(r, c) = up.last()?;
        Some(self.moved((r, c), (r - 1, c)))
    }

    /// f̃_i: push the leftmost vertically unpaired row-i cell up.
    pub fn lower(&self, i: usize) -> Option<Diagram> {
        let (_, down) = self.vertical_unpaired(i);
        let &(r, c) = down.first()?;
        Some(self.moved((r, c), (r + 1, c)))
    }

    /// Horizontal i-pairing. Returns the unpaired column-(i+1) cells and
    /// the unpaired column-i cells, each top to bottom.
    pub fn horizontal_unpaired(&self, i: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let mut opens: Vec<(usize, usize)> = vec![];
        let mut closes = vec![];
        for r in (1..=self.max_row()).rev() {
            match (self.contains(r, i), self.contains(r, i + 1)) {
                (true, false) => opens.push((r, i)),
                (false, true) => {
                    if opens.pop().is_none() {
                        closes.push((r, i + 1));
                    }
                }
                _ => {}
            }
        }
        (closes, opens)
    }

    /// Ě_i: push the bottom-most horizontally unpaired column-(i+1) cell left.
    pub fn rectify_step(&self, i: usize) -> Option<Diagram> {
        let (right, _) = self.horizontal_unpaired(i);
        let &(r, c) = right.last()?;
        Some(self.moved((r, c), (r, c - 1)))
    }

    /// Rectification, returning the colours applied.
    pub fn rect_trace(&self) -> (Diagram, Vec<usize>) {
        let mut d = self.clone();
        let mut trace = vec![];
        let mut weight: usize = d.0.iter().map(|x| x.1).sum();
        loop {
            let step = (1..d.max_col()).find_map(|i| d.rectify_step(i).map(|e| (i, e)));
            let Some((i, next)) = step else { break };
            let w2: usize = next.0.iter().map(|x| x.1).sum();
            assert!(w2 < weight, "rectification failed to make progress");
            weight = w2;
            trace.push(i);
            d = next;
        }
        (d, trace)
    }

    pub fn rect(&self) -> Diagram {
        self.rect_trace().0
    }

    /// Rows top down, `O` for a cell and `.` for a gap.
    pub fn ascii(&self) -> String {
        let w = self.max_col();
        let mut s = String::new();
        for r in (1..=self.max_row()).rev() {
            for c in 1..=w {
                s.push(if self.contains(r, c) { 'O' } else { '.' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|(r, c)| format!("({r},{c})")).collect();
        write!(f, "{}", v.join(","))
    }
}

impl FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut cells = vec![];
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if body.is_empty() {
            return Ok(Diagram::default());
        }
        for piece in body.trim_start_matches('(').trim_end_matches(')').split("),(") {
            let (r, c) = piece
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad cell {piece:?}")))?;
            let r = r.parse().map_err(|_| Error::Parse(format!("bad row {r:?}")))?;
            let c = c.parse().map_err(|_| Error::Parse(format!("bad column {c:?}")))?;
            cells.push((r, c));
        }
        Diagram::new(cells)
    }
}

/// Cell (r, c) for every entry r in column c.
pub fn diagram_of(t: &KeyTabloid) -> Diagram {
    let mut s = BTreeSet::new();
    for row in t.rows() {
        for (c, &x) in row.iter().enumerate() {
            s.insert((x as usize, c + 1));
        }
    }
    Diagram(s)
}

/// All diagrams reachable from the key diagram of `a` by Kohnert moves.
pub fn kohnert_closure(a: &Composition) -> BTreeSet<Diagram> {
    let start = Diagram::key(a);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(d) = queue.pop_front() {
        for r in 2..=d.max_row() {
            if let Some(d2) = d.kohnert_move(r) {
                if seen.insert(d2.clone()) {
                    queue.push_back(d2);
                }
            }
        }
    }
    seen
}

/// Label row r with n−r+1, sort columns bottom-justified, then flip.
pub fn tableau_of(d: &Diagram, n: usize) -> Result<Tableau> {
    if d.max_row() > n {
        return Err(Error::Precondition(format!("diagram has cells above row {n}")));
    }
    if !d.is_rectified() {
        return Err(Error::Precondition("diagram is not rectified".into()));
    }
    let cols: Vec<Vec<u8>> = (1..=d.max_col())
        .map(|c| {
            let mut v: Vec<u8> = (1..=n).filter(|&r| d.contains(r, c)).map(|r| (n - r + 1) as u8).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let t = Tableau::from_columns(&cols)?;
    Ok(crystal_flip(&t, n))
}

/// Tableau map after rectification after the diagram map.
pub fn aries(t: &KeyTabloid) -> Tableau {
    tableau_of(&diagram_of(t).rect(), t.n()).expect("rectified diagrams map to tableaux")
}
