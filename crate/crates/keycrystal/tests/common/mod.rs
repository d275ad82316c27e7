//! Brute-force oracles and fixture loading shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::PathBuf;

use keycrystal::comb::{Composition, Partition};
use keycrystal::ssyt::Tableau;

pub fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let mut p = root.join("tests/fixtures").join(name);
    if !p.exists() {
        p = root.join("../keycrystal/tests/fixtures").join(name);
    }
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

/// Vertices and (colour, source, target) edges of a graph fixture.
pub struct GraphFixture {
    pub vertices: Vec<String>,
    pub edges: BTreeSet<(usize, String, String)>,
}

pub fn graph_fixture(name: &str) -> GraphFixture {
    let mut vertices = vec![];
    let mut edges = BTreeSet::new();
    for line in fixture(name).lines().map(str::trim) {
        if let Some(v) = line.strip_prefix("V ") {
            vertices.push(v.to_string());
        } else if let Some(e) = line.strip_prefix("E ") {
            let (col, rest) = e.split_once(' ').unwrap();
            let (a, b) = rest.split_once(" -> ").unwrap();
            edges.insert((col.parse().unwrap(), a.to_string(), b.to_string()));
        }
    }
    GraphFixture { vertices, edges }
}

fn coinv(i: u8, j: u8, k: u8) -> bool {
    i != j && j != k && i != k && ((i < j && j < k) || (j < k && k < i) || (k < i && i < j))
}

/// Direct check of every pair and triple, with basement column 0.
pub fn brute_valid(a: &[usize], rows: &[Vec<u8>]) -> bool {
    let n = a.len();
    let mut cell: HashMap<(usize, usize), u8> = HashMap::new();
    for r in 1..=n {
        cell.insert((r, 0), r as u8);
        for (c, &v) in rows[r - 1].iter().enumerate() {
            cell.insert((r, c + 1), v);
        }
    }
    for (&(r1, c1), &x) in &cell {
        for (&(r2, c2), &y) in &cell {
            if (r1, c1) == (r2, c2) || x != y || (c1 == 0 && c2 == 0) {
                continue;
            }
            if c1 == c2 || (c2 == c1 + 1 && r1 > r2) {
                return false;
            }
        }
    }
    let len = |r: usize| a[r - 1];
    for (&(r, c), &i) in &cell {
        let Some(&j) = cell.get(&(r, c + 1)) else { continue };
        for r2 in 1..=n {
            if r2 > r {
                if let Some(&k) = cell.get(&(r2, c)) {
                    if len(r) > len(r2) && coinv(i, j, k) {
                        return false;
                    }
                }
            }
            if r2 < r {
                if let Some(&k) = cell.get(&(r2, c + 1)) {
                    if len(r) >= len(r2) && coinv(i, j, k) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every filling of `a` with entries in 1..=n that passes [`brute_valid`],
/// as row vectors.
pub fn brute_sskd(a: &Composition) -> BTreeSet<Vec<Vec<u8>>> {
    let n = a.len();
    let total = a.size();
    let mut out = BTreeSet::new();
    let mut vals = vec![1u8; total];
    if n == 0 {
        return out;
    }
    loop {
        let mut it = vals.iter();
        let rows: Vec<Vec<u8>> = a.parts().iter().map(|&k| it.by_ref().take(k).copied().collect()).collect();
        if brute_valid(a.parts(), &rows) {
            out.insert(rows);
        }
        let mut k = 0;
        loop {
            if k == total {
                return out;
            }
            if (vals[k] as usize) < n {
                vals[k] += 1;
                break;
            }
            vals[k] = 1;
            k += 1;
        }
    }
}

/// Weight multiset of the Kohnert closure of the key diagram of a.
pub fn kohnert_character(a: &Composition) -> BTreeMap<Vec<usize>, usize> {
    let n = a.len();
    let start: BTreeSet<(usize, usize)> =
        (0..n).flat_map(|r| (1..=a.parts()[r]).map(move |c| (r + 1, c))).collect();
    let mut seen = BTreeSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(d) = stack.pop() {
        for row in 2..=n {
            let Some(c) = d.iter().filter(|x| x.0 == row).map(|x| x.1).max() else { continue };
            if let Some(r2) = (1..row).rev().find(|&r| !d.contains(&(r, c))) {
                let mut e = d.clone();
                e.remove(&(row, c));
                e.insert((r2, c));
                if seen.insert(e.clone()) {
                    stack.push(e);
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for d in seen {
        let mut w = vec![0; n];
        for (r, _) in d {
            w[r - 1] += 1;
        }
        *out.entry(w).or_insert(0) += 1;
    }
    out
}

/// Number of SSYT of shape λ and weight μ, by filling row by row.
pub fn kostka_number(lam: &Partition, mu: &Partition) -> usize {
    let n = mu.len();
    let shape = lam.parts().to_vec();
    if shape.len() > n {
        return 0;
    }
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|&k| vec![0; k]).collect();
    let mut left = mu.parts().to_vec();
    fn go(k: usize, cells: &[(usize, usize)], rows: &mut Vec<Vec<u8>>, left: &mut Vec<usize>) -> usize {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut tot = 0;
        for v in 1..=left.len() as u8 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            if c > 0 && rows[r][c - 1] > v {
                continue;
            }
            if r > 0 && rows[r - 1][c] >= v {
                continue;
            }
            rows[r][c] = v;
            left[v as usize - 1] -= 1;
            tot += go(k + 1, cells, rows, left);
            left[v as usize - 1] += 1;
        }
        tot
    }
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &k)| (0..k).map(move |c| (r, c))).collect();
    go(0, &cells, &mut rows, &mut left)
}

/// Cocharge by cyclage: move the first reading-word letter to the end and
/// reinsert until a single row remains.
pub fn cocharge(t: &Tableau) -> usize {
    let mut t = t.clone();
    let mut steps = 0;
    while t.rows().len() > 1 {
        let mut w = t.reading_word();
        let x = w.remove(0);
        assert_ne!(x, 1, "first letter of a non-row tableau with partition weight");
        w.push(x);
        t = Tableau::from_word(&w);
        steps += 1;
    }
    steps
}

/// Dominance-minimal lowest weights of the induced subgraph, by full scan.
pub fn scan_lowest<V>(g: &keycrystal::CrystalGraph<V>, members: &[usize]) -> Vec<usize> {
    let inside: BTreeSet<usize> = members.iter().copied().collect();
    let lows: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&k| g.colors().all(|i| g.f(k, i).map_or(true, |w| !inside.contains(&w))))
        .collect();
    let dom = |a: &Composition, b: &Composition| {
        let (mut sa, mut sb) = (0, 0);
        a.parts().iter().zip(b.parts()).all(|(x, y)| {
            sa += x;
            sb += y;
            sa <= sb
        })
    };
    lows.iter()
        .copied()
        .filter(|&z| lows.iter().all(|&y| dom(g.weight(z), g.weight(y))))
        .collect()
}
