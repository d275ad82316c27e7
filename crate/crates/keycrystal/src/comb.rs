//! Weak compositions, partitions, permutations and the orders on them.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weak composition. The length is part of the value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `0^m × a`.
    pub fn pad_front(&self, m: usize) -> Composition {
        let mut v = vec![0; m];
        v.extend_from_slice(&self.0);
        Composition(v)
    }

    pub fn pad_back(&self, n: usize) -> Composition {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        Composition(v)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// `a + α_i` where α_i = e_i − e_{i+1}; `None` if a part would go negative.
    pub fn add_root(&self, i: usize) -> Option<Composition> {
        let mut v = self.0.clone();
        if v[i] == 0 {
            return None;
        }
        v[i] -= 1;
        v[i - 1] += 1;
        Some(Composition(v))
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_parts_unsorted(&self.0)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(t)
        .trim();
    if t.is_empty() {
        return Ok(vec![]);
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {:?} in {:?}", x.trim(), s)))
        })
        .collect()
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_int_list(s).map(Composition)
    }
}

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn from_parts_unsorted(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// n(μ) = Σ (i−1) μ_i.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn padded(&self, n: usize) -> Composition {
        Composition(self.0.clone()).pad_back(n)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = vec![];
        go(n, n, &mut vec![], &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Composition(self.0.clone()).fmt(f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_int_list(s)?)
    }
}

/// The decreasing rearrangement of `a`, zero padded to the same length.
pub fn sort_decreasing(a: &Composition) -> Composition {
    let mut v = a.0.clone();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Composition(v)
}

/// Every prefix sum of `a` is at most the matching prefix sum of `b`.
pub fn dominance_leq(a: &Composition, b: &Composition) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let (mut sa, mut sb) = (0usize, 0usize);
    for k in 0..a.len() {
        sa += a.0[k];
        sb += b.0[k];
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lower covers of `b` in the Bruhat order on weak compositions.
pub fn bruhat_lower_covers(b: &Composition) -> Vec<Composition> {
    let n = b.len();
    let mut out = vec![];
    for i in 0..n {
        for j in i + 1..n {
            if b.0[i] < b.0[j] {
                let mut c = b.0.clone();
                c.swap(i, j);
                out.push(Composition(c));
            }
            if b.0[i] > b.0[j] + 1 {
                let mut c = b.0.clone();
                c[i] = b.0[j] + 1;
                c[j] = b.0[i] - 1;
                out.push(Composition(c));
            }
        }
    }
    out
}

/// `a ≤ b` in the Bruhat order on weak compositions, by search downward from `b`.
pub fn bruhat_leq(a: &Composition, b: &Composition) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.size() != b.size() {
        return Ok(false);
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(b.clone());
    queue.push_back(b.clone());
    while let Some(c) = queue.pop_front() {
        if &c == a {
            return Ok(true);
        }
        for d in bruhat_lower_covers(&c) {
            if seen.insert(d.clone()) {
                queue.push_back(d);
            }
        }
    }
    Ok(false)
}

/// All weak compositions of `size` with exactly `len` parts, lexicographically.
pub fn compositions(size: usize, len: usize) -> Vec<Composition> {
    fn go(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if rest == 0 {
                out.push(Composition(cur.clone()));
            }
            return;
        }
        for p in 0..=rest {
            cur.push(p);
            go(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(size, len, &mut vec![], &mut out);
    out
}

/// All weak compositions with size at most `max_size` and length 1 through `max_len`.
pub fn compositions_up_to(max_size: usize, max_len: usize) -> Vec<Composition> {
    let mut out = vec![];
    for len in 1..=max_len {
        for size in 0..=max_size {
            out.extend(compositions(size, len));
        }
    }
    out
}

/// A permutation in one-line notation, values 1..=n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Invalid(format!("{word:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The simple transposition s_i in S_n.
    pub fn simple(i: usize, n: usize) -> Self {
        let mut w: Vec<usize> = (1..=n).collect();
        w.swap(i - 1, i);
        Permutation(w)
    }

    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// s_{i_1} ∘ s_{i_2} ∘ ⋯ ∘ s_{i_k}.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Permutation::identity(n);
        for &i in word.iter().rev() {
            w = Permutation::simple(i, n).compose(&w);
        }
        w
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// w(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&k| self.0[k - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x - 1] = i + 1;
        }
        Permutation(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// (w·a)_{w(i)} = a_i.
    pub fn act(&self, a: &Composition) -> Composition {
        let mut v = vec![0; a.len()];
        for (i, &p) in a.0.iter().enumerate() {
            v[self.0[i] - 1] = p;
        }
        Composition(v)
    }

    /// i with ℓ(s_i w) < ℓ(w): i+1 sits left of i in the one-line word.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i] < inv.0[i - 1]
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.is_left_descent(i)).collect()
    }

    /// A reduced word, built by peeling the largest left descent each time.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = vec![];
        while let Some(&i) = w.left_descents().last() {
            word.push(i);
            w = Permutation::simple(i, w.n()).compose(&w);
        }
        word
    }

    /// The super-Yamanouchi reduced word, split into its increasing runs.
    /// Concatenated, the blocks multiply (left to right) to `self`.
    pub fn super_yamanouchi_word(&self) -> Vec<Vec<usize>> {
        fn go(rest: &Permutation, blocks: &mut Vec<Vec<usize>>) -> bool {
            if rest.length() == 0 {
                return true;
            }
            let n = rest.n();
            let mut cands = vec![];
            if let Some(b) = blocks.last() {
                let last = *b.last().unwrap();
                if last + 1 < n {
                    cands.push((last + 1, false));
                }
                for s in (1..b[0]).rev() {
                    cands.push((s, true));
                }
            } else {
                for s in (1..n).rev() {
                    cands.push((s, true));
                }
            }
            for (x, fresh) in cands {
                if !rest.is_left_descent(x) {
                    continue;
                }
                if fresh {
                    blocks.push(vec![x]);
                } else {
                    blocks.last_mut().unwrap().push(x);
                }
                let next = Permutation::simple(x, n).compose(rest);
                if go(&next, blocks) {
                    return true;
                }
                if fresh {
                    blocks.pop();
                } else {
                    blocks.last_mut().unwrap().pop();
                }
            }
            false
        }
        let mut blocks = vec![];
        let found = go(self, &mut blocks);
        debug_assert!(found);
        blocks
    }

    /// Left weak order: v = x·u with ℓ(v) = ℓ(x) + ℓ(u).
    pub fn weak_leq(&self, v: &Permutation) -> bool {
        let x = v.compose(&self.inverse());
        x.length() + self.length() == v.length()
    }

    /// All of S_n, lexicographically.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(cur.clone())];
        loop {
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let v: Vec<usize> = if s.contains(',') {
            parse_int_list(s)?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(v)
    }
}

/// The shortest w with w·sort(a) = a. Equal parts keep their relative order.
pub fn shortest_sorting_permutation(a: &Composition) -> Permutation {
    let lambda = sort_decreasing(a);
    let n = a.len();
    let mut used = vec![false; n];
    let mut w = vec![0; n];
    for (i, &p) in lambda.0.iter().enumerate() {
        let pos = (0..n).find(|&k| !used[k] && a.0[k] == p).unwrap();
        used[pos] = true;
        w[i] = pos + 1;
    }
    Permutation(w)
}
