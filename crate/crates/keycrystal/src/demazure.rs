//! Demazure characters, Demazure crystals inside normal crystals, composite
//! lowering operators, the Z algorithm, and the extremal / Demazure subset
//! axiom checkers.

use std::collections::HashSet;
use std::fmt::Display;

use serde::Serialize;

use crate::comb::{dominance_leq, shortest_sorting_permutation, sort_decreasing, Composition, Permutation};
use crate::crystal::CrystalGraph;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// ∂_i(x_i f).
pub fn divided_difference_pi(f: &Poly, i: usize) -> Poly {
    f.demazure_pi(i)
}

/// π_{w(a)} x^{sort(a)}.
pub fn key_polynomial(a: &Composition) -> Poly {
    let w = shortest_sorting_permutation(a);
    let mut p = Poly::x_pow(&sort_decreasing(a));
    for &i in w.reduced_word().iter().rev() {
        p = p.demazure_pi(i);
    }
    p
}

/// Membership mask over the vertices of an ambient crystal.
pub type Members = Vec<bool>;

pub fn members_of(len: usize, idx: &[usize]) -> Members {
    let mut m = vec![false; len];
    for &k in idx {
        m[k] = true;
    }
    m
}

pub fn member_indices(m: &[bool]) -> Vec<usize> {
    m.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k).collect()
}

/// D_i X: everything whose e_i^k lands in X for some k ≥ 0.
pub fn demazure_operator_d<V>(g: &CrystalGraph<V>, x: &[bool], i: usize) -> Members {
    let mut out = x.to_vec();
    for k in 0..g.len() {
        if x[k] {
            let mut v = k;
            while let Some(w) = g.f(v, i) {
                out[w] = true;
                v = w;
            }
        }
    }
    out
}

/// The unique highest weight of a connected crystal.
pub fn unique_highest<V>(g: &CrystalGraph<V>) -> Result<usize> {
    let hw = g.highest_weights();
    if hw.len() != 1 {
        return Err(Error::Precondition(format!("ambient crystal has {} highest weights", hw.len())));
    }
    Ok(hw[0])
}

/// B_w(λ) = D_{i_1} ⋯ D_{i_k} {u_λ} for a reduced word i_1 ⋯ i_k of w.
pub fn demazure_crystal<V>(g: &CrystalGraph<V>, w: &Permutation) -> Result<Members> {
    demazure_crystal_word(g, &w.reduced_word())
}

pub fn demazure_crystal_word<V>(g: &CrystalGraph<V>, word: &[usize]) -> Result<Members> {
    let u = unique_highest(g)?;
    let mut m = members_of(g.len(), &[u]);
    for &i in word.iter().rev() {
        m = demazure_operator_d(g, &m, i);
    }
    Ok(m)
}

/// Outcome of F_{[i,j]}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lowering {
    pub start: usize,
    pub end: usize,
    pub i: usize,
    pub j: usize,
    /// (colour, exponent) in application order j, j−1, …, i.
    pub steps: Vec<(usize, usize)>,
    /// Vertices visited after each single step.
    pub path: Vec<usize>,
    pub faithful: bool,
}

/// F_{[i,j]}: apply f_j as often as possible inside X, then f_{j−1}, …, then f_i.
pub fn composite_lower<V>(g: &CrystalGraph<V>, x: &[bool], b: usize, i: usize, j: usize) -> Lowering {
    assert!(i <= j, "F_[i,j] needs i ≤ j");
    let mut cur = b;
    let mut steps = vec![];
    let mut path = vec![];
    for k in (i..=j).rev() {
        let mut r = 0;
        while let Some(nx) = g.f(cur, k) {
            if !x[nx] {
                break;
            }
            cur = nx;
            path.push(cur);
            r += 1;
        }
        steps.push((k, r));
    }
    let faithful = steps.iter().all(|&(_, r)| r > 0);
    Lowering { start: b, end: cur, i, j, steps, path, faithful }
}

/// No f_i keeps b inside X.
pub fn is_lowest_in<V>(g: &CrystalGraph<V>, x: &[bool], b: usize) -> bool {
    g.colors().all(|i| g.f(b, i).map_or(true, |w| !x[w]))
}

/// The Z algorithm from the highest weight `start`: repeatedly apply the
/// faithful F_{[i,j]} with i minimal and then j maximal.
pub fn demazure_lowest_z<V>(g: &CrystalGraph<V>, x: &[bool], start: usize) -> Result<(usize, Vec<Lowering>)> {
    let mut b = start;
    let mut trace = vec![];
    let top = g.n().saturating_sub(1);
    while !is_lowest_in(g, x, b) {
        let pick = (1..=top).find_map(|i| {
            (i..=top).rev().map(|j| composite_lower(g, x, b, i, j)).find(|l| l.faithful)
        });
        let Some(step) = pick else {
            return Err(Error::Internal("no faithful F_[i,j] away from a lowest weight".into()));
        };
        b = step.end;
        trace.push(step);
    }
    Ok((b, trace))
}

/// A failed axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub condition: String,
    pub vertices: Vec<String>,
    pub colors: Vec<usize>,
}

fn witness<V: Display>(g: &CrystalGraph<V>, cond: &str, vs: &[usize], colors: &[usize]) -> Witness {
    Witness {
        condition: cond.to_string(),
        vertices: vs.iter().map(|&k| g.vertex(k).to_string()).collect(),
        colors: colors.to_vec(),
    }
}

/// Conditions (1)–(3).
pub fn check_extremal<V: Display>(g: &CrystalGraph<V>, x: &[bool]) -> std::result::Result<(), Witness> {
    let u = unique_highest(g).map_err(|_| witness(g, "ambient", &[], &[]))?;
    if !x[u] {
        return Err(witness(g, "(1)", &[u], &[]));
    }
    for k in member_indices(x) {
        for i in g.colors() {
            if let Some(e) = g.e(k, i) {
                if !x[e] {
                    return Err(witness(g, "(2)", &[k, e], &[i]));
                }
            }
            if let (Some(f), Some(e)) = (g.f(k, i), g.e(k, i)) {
                if !x[f] && x[e] {
                    return Err(witness(g, "(3)", &[k, f, e], &[i]));
                }
            }
        }
    }
    Ok(())
}

fn inside(x: &[bool], v: Option<usize>) -> bool {
    v.is_some_and(|k| x[k])
}

/// Extremality plus conditions (4)–(6), quantified over extremal members.
/// The k-clause of (4) forbids f_k f_j^*(x) ∈ X next to a death of f_k at
/// x or y, and (6) asks the y-path to stay nonzero in the ambient crystal.
pub fn check_demazure_subset<V: Display>(g: &CrystalGraph<V>, x: &[bool]) -> std::result::Result<(), Witness> {
    check_extremal(g, x)?;
    let u = unique_highest(g).map_err(|_| witness(g, "ambient", &[], &[]))?;
    let lambda = sort_decreasing(g.weight(u));
    let ext: Vec<usize> = member_indices(x)
        .into_iter()
        .filter(|&k| sort_decreasing(g.weight(k)) == lambda)
        .collect();
    let colors: Vec<usize> = g.colors().collect();
    for &a in &ext {
        for &b in &ext {
            for &i in &colors {
                for &j in &colors {
                    let d = i.abs_diff(j);
                    if d >= 2 {
                        check_far(g, x, a, b, i, j)?;
                    } else if d == 1 {
                        check_near(g, x, a, b, i, j)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_far<V: Display>(g: &CrystalGraph<V>, x: &[bool], a: usize, b: usize, i: usize, j: usize) -> std::result::Result<(), Witness> {
    let (Some(p), Some(q)) = (g.e_star(a, i), g.e_star(b, j)) else {
        return Ok(());
    };
    if p != q || !x[p] {
        return Ok(());
    }
    if !inside(x, g.f(a, j)) || !inside(x, g.f(b, i)) {
        return Err(witness(g, "(4)", &[a, b], &[i, j]));
    }
    if i.abs_diff(j) == 2 {
        // A death of f_k at x or y rules out f_k f_j^*(x) ∈ X.
        let k = i.min(j) + 1;
        let death = |v: Option<usize>| v.is_some_and(|w| !x[w]);
        if inside(x, g.f_star(a, j).and_then(|v| g.f(v, k))) && (death(g.f(a, k)) || death(g.f(b, k))) {
            return Err(witness(g, "(4)", &[a, b], &[i, j, k]));
        }
    }
    Ok(())
}

fn check_near<V: Display>(g: &CrystalGraph<V>, x: &[bool], a: usize, b: usize, i: usize, j: usize) -> std::result::Result<(), Witness> {
    // (5a)
    if let Some(top) = g.e_star(b, i).and_then(|v| g.e_star(v, j)) {
        if top == a {
            if let Some(f) = g.f(a, i) {
                if !x[f] {
                    return Err(witness(g, "(5a)", &[a, b], &[i, j]));
                }
            }
        }
    }
    // (5b)
    if let (Some(p), Some(q)) = (g.e_star(a, i), g.e_star(b, j)) {
        if p == q {
            let fy = inside(x, g.f(b, i));
            let fx = inside(x, g.f(a, j));
            if !fy && !fx {
                return Err(witness(g, "(5b)", &[a, b], &[i, j]));
            }
            if fy && fx {
                let l = g.f_star(a, j).and_then(|v| g.f_star(v, i));
                let r = g.f_star(b, i).and_then(|v| g.f_star(v, j));
                if l.is_none() || l != r || !inside(x, l) {
                    return Err(witness(g, "(5b)", &[a, b], &[i, j]));
                }
            }
        }
    }
    // (6)
    if let (Some(p), Some(q)) = (g.e_star(a, i), g.e_star(b, i).and_then(|v| g.e_star(v, j))) {
        if p == q {
            let n = g.n();
            let mut seen = HashSet::new();
            let mut stack = vec![(a, b, Vec::<usize>::new())];
            while let Some((cx, cy, word)) = stack.pop() {
                for c in g.colors() {
                    let Some(nx) = g.f_star(cx, c) else { continue };
                    if !x[nx] {
                        continue;
                    }
                    let mut w2 = word.clone();
                    w2.push(c);
                    let perm = Permutation::from_word(n, &w2);
                    if perm.length() != w2.len() || perm.is_left_descent(j) {
                        continue;
                    }
                    let Some(ny) = g.f_star(cy, c) else {
                        let mut cols = vec![i, j];
                        cols.extend(&w2);
                        return Err(witness(g, "(6)", &[a, b, nx], &cols));
                    };
                    if seen.insert((nx, ny, perm)) {
                        stack.push((nx, ny, w2));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Lowest weights of X that are dominance-below every other lowest weight.
pub fn demazure_lowest_candidates<V>(g: &CrystalGraph<V>, x: &[bool]) -> Vec<usize> {
    let lows: Vec<usize> = member_indices(x).into_iter().filter(|&k| is_lowest_in(g, x, k)).collect();
    lows.iter()
        .copied()
        .filter(|&z| lows.iter().all(|&y| dominance_leq(g.weight(z), g.weight(y)).unwrap_or(false)))
        .collect()
}
