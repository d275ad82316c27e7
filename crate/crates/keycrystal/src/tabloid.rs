//! Semistandard key tabloids.

use std::fmt;
use std::str::FromStr;

use crate::comb::Composition;
use crate::error::{Error, Result};

/// A non-attacking, coinversion-free filling of a composition diagram
/// sitting on a basement column 0 that holds r in row r.
///
/// `rows[r - 1]` holds row r (row 1 at the bottom); entries lie in 1..=n
/// where n is the length of the shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeyTabloid {
    shape: Composition,
    rows: Vec<Vec<u8>>,
}

fn conforms(shape: &Composition, rows: &[Vec<u8>]) -> Result<()> {
    if rows.len() != shape.len() {
        return Err(Error::LengthMismatch(rows.len(), shape.len()));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != shape.0[r] {
            return Err(Error::Invalid(format!(
                "row {} has {} cells, shape wants {}",
                r + 1,
                row.len(),
                shape.0[r]
            )));
        }
    }
    Ok(())
}

/// Three entries read left cell, right cell, third cell.
fn coinversion(i: u8, j: u8, k: u8) -> bool {
    if i == j || j == k || i == k {
        return false;
    }
    (i < j && j < k) || (j < k && k < i) || (k < i && i < j)
}

/// Checks one cell against everything placed before it in column-major,
/// bottom-to-top order. `get(r, c)` is 0-based.
fn cell_ok(shape: &[usize], rows: &[Vec<u8>], r: usize, c: usize, n: usize) -> bool {
    let v = rows[r][c];
    if v == 0 || v as usize > n {
        return false;
    }
    for r2 in 0..r {
        if shape[r2] > c && rows[r2][c] == v {
            return false;
        }
    }
    if c == 0 {
        // Column 0 is a basement holding r in row r.
        let own = r as u8 + 1;
        if v > own {
            return false;
        }
        for r2 in r + 1..shape.len() {
            if shape[r2] < shape[r] && coinversion(own, v, r2 as u8 + 1) {
                return false;
            }
        }
        for r2 in 0..r {
            if shape[r2] > 0 && shape[r] >= shape[r2] && coinversion(own, v, rows[r2][0]) {
                return false;
            }
        }
        return true;
    }
    let left = rows[r][c - 1];
    for r2 in r + 1..shape.len() {
        if shape[r2] >= c && rows[r2][c - 1] == v {
            return false;
        }
    }
    // Type I: third cell above the left cell, lower row strictly longer.
    for r2 in r + 1..shape.len() {
        if shape[r2] >= c && shape[r2] < shape[r] && coinversion(left, v, rows[r2][c - 1]) {
            return false;
        }
    }
    // Type II: third cell below the right cell, higher row weakly longer.
    for r2 in 0..r {
        if shape[r2] > c && shape[r] >= shape[r2] && coinversion(left, v, rows[r2][c]) {
            return false;
        }
    }
    true
}

/// Non-attacking with no coinversion triples.
pub fn is_valid_tabloid(shape: &Composition, rows: &[Vec<u8>]) -> Result<bool> {
    conforms(shape, rows)?;
    let n = shape.len();
    let width = shape.0.iter().copied().max().unwrap_or(0);
    for c in 0..width {
        for r in 0..n {
            if shape.0[r] > c && !cell_ok(&shape.0, rows, r, c, n) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl KeyTabloid {
    pub fn new(shape: Composition, rows: Vec<Vec<u8>>) -> Result<Self> {
        if !is_valid_tabloid(&shape, &rows)? {
            return Err(Error::Invalid("filling is not a semistandard key tabloid".into()));
        }
        Ok(KeyTabloid { shape, rows })
    }

    /// A filling of the shape that need not be a tabloid. Crystal operators
    /// still act on it.
    pub fn filling(shape: Composition, rows: Vec<Vec<u8>>) -> Result<Self> {
        conforms(&shape, &rows)?;
        if rows.iter().flatten().any(|&x| x == 0 || x as usize > shape.len()) {
            return Err(Error::Invalid("entries must lie in 1..=n".into()));
        }
        Ok(KeyTabloid { shape, rows })
    }

    pub fn is_valid(&self) -> bool {
        is_valid_tabloid(&self.shape, &self.rows).unwrap_or(false)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// Number of rows, which is also the largest allowed entry.
    pub fn n(&self) -> usize {
        self.shape.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u8>> {
        &mut self.rows
    }

    /// Entry at (row, column), both 1-based.
    pub fn get(&self, r: usize, c: usize) -> Option<u8> {
        self.rows.get(r.wrapping_sub(1))?.get(c.wrapping_sub(1)).copied()
    }

    pub fn width(&self) -> usize {
        self.shape.0.iter().copied().max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn weight(&self) -> Composition {
        let mut w = vec![0; self.n()];
        for row in &self.rows {
            for &x in row {
                w[x as usize - 1] += 1;
            }
        }
        Composition(w)
    }

    /// Sum of legs of the cells whose right neighbour is strictly larger.
    pub fn maj(&self) -> usize {
        let mut m = 0;
        for row in &self.rows {
            for c in 1..row.len() {
                if row[c - 1] < row[c] {
                    m += row.len() - c;
                }
            }
        }
        m
    }

    /// Entries of row r, bottom row first, concatenated.
    pub fn reading_key(&self) -> Vec<u8> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for KeyTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "shape={}", self.shape)?;
        for (r, row) in self.rows.iter().enumerate() {
            let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "; r{}={}", r + 1, s.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for KeyTabloid {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(';').map(str::trim);
        let head = parts.next().unwrap_or("");
        let shape: Composition = head
            .strip_prefix("shape=")
            .ok_or_else(|| Error::Parse(format!("expected shape=… in {s:?}")))?
            .parse()?;
        let mut rows = vec![vec![]; shape.len()];
        for p in parts {
            let (k, v) = p
                .strip_prefix('r')
                .and_then(|p| p.split_once('='))
                .ok_or_else(|| Error::Parse(format!("bad row {p:?}")))?;
            let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad row index {k:?}")))?;
            if k == 0 || k > shape.len() {
                return Err(Error::Parse(format!("row index {k} out of range")));
            }
            rows[k - 1] = if v.trim().is_empty() {
                vec![]
            } else {
                v.split(',')
                    .map(|x| x.trim().parse::<u8>().map_err(|_| Error::Parse(format!("bad entry {x:?}"))))
                    .collect::<Result<_>>()?
            };
        }
        KeyTabloid::new(shape, rows)
    }
}

/// All semistandard key tabloids of the given shape, in canonical order.
pub fn enumerate_sskd(shape: &Composition) -> Vec<KeyTabloid> {
    let n = shape.len();
    let width = shape.0.iter().copied().max().unwrap_or(0);
    let cells: Vec<(usize, usize)> = (0..width)
        .flat_map(|c| (0..n).filter(move |&r| shape.0[r] > c).map(move |r| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u8>> = shape.0.iter().map(|&k| vec![0; k]).collect();
    let mut out = vec![];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        shape: &Composition,
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<KeyTabloid>,
    ) {
        if k == cells.len() {
            out.push(KeyTabloid { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        let (r, c) = cells[k];
        let n = shape.len();
        for v in 1..=n as u8 {
            rows[r][c] = v;
            if cell_ok(&shape.0, rows, r, c, n) {
                go(k + 1, cells, shape, rows, out);
            }
        }
        rows[r][c] = 0;
    }
    go(0, &cells, shape, &mut rows, &mut out);
    out.sort_by(|a, b| a.reading_key().cmp(&b.reading_key()));
    out
}
