//! E_b(X;q,0), its Demazure and Schur expansions, charge and the
//! Kostka–Foulkes polynomials.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::comb::{sort_decreasing, Composition, Partition};
use crate::demazure::demazure_lowest_z;
use crate::error::{Error, Result};
use crate::poly::{Poly, QPoly};
use crate::ssyt::{enumerate_ssyt, Tableau};
use crate::tabloid::enumerate_sskd;
use crate::tabloid_crystal::{build_tabloid_crystal, tabloid_raise};

/// Σ_{T ∈ SSKD(b)} q^{maj(T)} x^{wt(T)}.
pub fn macdonald_q0(b: &Composition) -> Poly {
    let mut p = Poly::zero(b.len());
    for t in enumerate_sskd(b) {
        let exp = t.weight().0.iter().map(|&x| x as u32).collect();
        p.add_term(exp, &QPoly::term(1, t.maj()));
    }
    p
}

/// Terms q^k κ_a, one per tabloid component, plus their aggregate K_{a,b}(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureExpansion {
    pub shape: Composition,
    pub terms: Vec<(usize, Composition)>,
    pub aggregated: BTreeMap<Composition, QPoly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub q: usize,
    pub key: Composition,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionJson {
    pub shape: Composition,
    pub terms: Vec<TermJson>,
    pub aggregated: BTreeMap<String, Vec<i64>>,
}

fn display_order(a: &Composition) -> (std::cmp::Reverse<Composition>, std::cmp::Reverse<Composition>) {
    (std::cmp::Reverse(sort_decreasing(a)), std::cmp::Reverse(a.clone()))
}

/// "c·X + c·Y", parenthesising multi-term coefficients.
pub fn format_sum(items: &[(QPoly, String)], var: &str) -> String {
    if items.is_empty() {
        return "0".into();
    }
    items
        .iter()
        .map(|(c, x)| {
            let s = c.display_with(var);
            if c.num_terms() > 1 {
                format!("({s})·{x}")
            } else {
                format!("{s}·{x}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl DemazureExpansion {
    /// Aggregated terms by lowest then highest q-degree, then sort(a) and a,
    /// both decreasing.
    pub fn ordered(&self) -> Vec<(&Composition, &QPoly)> {
        let mut v: Vec<_> = self.aggregated.iter().collect();
        v.sort_by_key(|(a, c)| (c.min_degree(), c.degree(), display_order(a)));
        v
    }

    pub fn to_plain(&self) -> String {
        let items: Vec<(QPoly, String)> =
            self.ordered().into_iter().map(|(a, c)| (c.clone(), format!("κ_{{{a}}}"))).collect();
        format_sum(&items, "q")
    }

    pub fn to_json(&self) -> ExpansionJson {
        ExpansionJson {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(q, a)| TermJson { q: *q, key: a.clone() }).collect(),
            aggregated: self.aggregated.iter().map(|(a, c)| (a.to_string(), c.coeffs().to_vec())).collect(),
        }
    }

    /// Σ_a K_{a,b}(q) κ_a given a way to produce κ_a.
    pub fn evaluate(&self, key: impl Fn(&Composition) -> Poly) -> Poly {
        let mut p = Poly::zero(self.shape.len());
        for (a, c) in &self.aggregated {
            p = &p + &key(a).scale(c);
        }
        p
    }
}

/// q^{maj(C)} κ_{wt(Z_C)} summed over the tabloid components C of SSKD(b).
pub fn demazure_expansion(b: &Composition) -> Result<DemazureExpansion> {
    let tc = build_tabloid_crystal(b)?;
    let g = &tc.graph;
    let mut terms = vec![];
    for (c, members) in g.components().iter().enumerate() {
        let mut mask = vec![false; g.len()];
        for &k in members {
            mask[k] = true;
        }
        let (z, _) = demazure_lowest_z(g, &mask, tc.comp_highest[c])?;
        terms.push((tc.comp_maj[c], g.weight(z).clone()));
    }
    terms.sort_by_key(|(q, a)| (*q, display_order(a)));
    let mut aggregated: BTreeMap<Composition, QPoly> = BTreeMap::new();
    for (q, a) in &terms {
        aggregated.entry(a.clone()).or_default().add_term(1, *q);
    }
    Ok(DemazureExpansion { shape: b.clone(), terms, aggregated })
}

/// Schur-indexed expansion.
pub type SchurExpansion = BTreeMap<Partition, QPoly>;

/// q^{maj(C)} s_{wt(u_C)} over the components C, which are full crystals
/// when b is weakly increasing.
pub fn schur_expansion_of_full_crystal(b: &Composition) -> Result<SchurExpansion> {
    if !b.is_weakly_increasing() {
        return Err(Error::Precondition(format!("{b} is not weakly increasing")));
    }
    let tc = build_tabloid_crystal(b)?;
    let mut out = SchurExpansion::new();
    for (c, &u) in tc.comp_highest.iter().enumerate() {
        let w = tc.graph.weight(u);
        if !w.is_partition() {
            return Err(Error::Internal(format!("highest weight {w} is not dominant")));
        }
        out.entry(w.to_partition()).or_default().add_term(1, tc.comp_maj[c]);
    }
    Ok(out)
}

/// s_λ ↦ s_{λ′}.
pub fn omega(e: &SchurExpansion) -> SchurExpansion {
    e.iter().map(|(l, c)| (l.conjugate(), c.clone())).collect()
}

/// Schur terms by lowest then highest degree, then partition decreasing.
pub fn format_schur(e: &SchurExpansion, var: &str) -> String {
    let mut v: Vec<_> = e.iter().collect();
    v.sort_by_key(|(l, c)| (c.min_degree(), c.degree(), std::cmp::Reverse((*l).clone())));
    let items: Vec<(QPoly, String)> = v.into_iter().map(|(l, c)| (c.clone(), format!("s_{{{l}}}"))).collect();
    format_sum(&items, var)
}

/// Charge of a word with partition content, by cyclic extraction of
/// standard subwords read right to left.
pub fn charge_word(word: &[u8]) -> Result<usize> {
    let top = word.iter().copied().max().unwrap_or(0) as usize;
    let mut count = vec![0usize; top + 1];
    for &x in word {
        count[x as usize] += 1;
    }
    if word.iter().any(|&x| x == 0) || (1..top).any(|k| count[k] < count[k + 1]) {
        return Err(Error::Precondition("content is not a partition".into()));
    }
    let mut used = vec![false; word.len()];
    let mut total = 0;
    let mut left = word.len();
    while left > 0 {
        let find = |used: &[bool], k: u8, mut range: std::iter::Rev<std::ops::Range<usize>>| {
            range.find(|&p| !used[p] && word[p] == k)
        };
        let mut cur = find(&used, 1, (0..word.len()).rev()).expect("a 1 remains");
        used[cur] = true;
        left -= 1;
        let mut idx = 0;
        for k in 2..=top as u8 {
            let next = match find(&used, k, (0..cur).rev()) {
                Some(p) => Some(p),
                None => {
                    let p = find(&used, k, (cur + 1..word.len()).rev());
                    if p.is_some() {
                        idx += 1;
                    }
                    p
                }
            };
            let Some(p) = next else { break };
            used[p] = true;
            left -= 1;
            total += idx;
            cur = p;
        }
    }
    Ok(total)
}

pub fn charge(t: &Tableau) -> Result<usize> {
    charge_word(&t.reading_word())
}

/// Σ t^{c(T)} over SSYT(λ) of weight μ.
pub fn kostka_foulkes_charge(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::Precondition(format!("|{lambda}| ≠ |{mu}|")));
    }
    let n = mu.len().max(1);
    let want = mu.padded(n);
    let mut out = QPoly::zero();
    for t in enumerate_ssyt(lambda, n) {
        if t.weight(n) == want {
            out.add_term(1, charge(&t)?);
        }
    }
    Ok(out)
}

/// Σ t^{maj(T)} over highest weight tabloids of shape 0^m × rev(μ′) and
/// weight λ′.
pub fn kostka_foulkes_maj(lambda: &Partition, mu: &Partition, m: usize) -> Result<QPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::Precondition(format!("|{lambda}| ≠ |{mu}|")));
    }
    let first = mu.parts().first().copied().unwrap_or(0);
    if m + first < mu.size() {
        return Err(Error::Precondition(format!("m = {m} is below |μ| − μ_1 = {}", mu.size() - first)));
    }
    let shape = Composition(mu.conjugate().parts().to_vec()).reversed().pad_front(m);
    let n = shape.len();
    let want = lambda.conjugate();
    if want.len() > n {
        return Ok(QPoly::zero());
    }
    let want = want.padded(n);
    let mut out = QPoly::zero();
    for t in enumerate_sskd(&shape) {
        if t.weight() == want && (1..n).all(|i| tabloid_raise(&t, i).is_none()) {
            out.add_term(1, t.maj());
        }
    }
    Ok(out)
}

/// One λ of the refinement K_{λ,μ}(t) = Σ_{sort(a)=λ′} K_{a,0^m×b}(t).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinementRow {
    pub lambda: Partition,
    pub kostka_foulkes: Vec<i64>,
    pub nonsymmetric_sum: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinementReport {
    pub shape: Composition,
    pub mu: Partition,
    pub ok: bool,
    pub rows: Vec<RefinementRow>,
}

/// μ is the partition of column lengths of b.
pub fn kf_refinement_check(b: &Composition, m: usize) -> Result<RefinementReport> {
    let mu = sort_decreasing(b).to_partition().conjugate();
    let shape = b.pad_front(b.len() + m);
    let exp = demazure_expansion(&shape)?;
    let mut rows = vec![];
    for lambda in Partition::all(b.size()) {
        let lhs = kostka_foulkes_charge(&lambda, &mu)?;
        let target = lambda.conjugate();
        let mut rhs = QPoly::zero();
        for (a, c) in &exp.aggregated {
            if sort_decreasing(a).to_partition() == target {
                rhs = &rhs + c;
            }
        }
        rows.push(RefinementRow {
            lambda,
            kostka_foulkes: lhs.coeffs().to_vec(),
            nonsymmetric_sum: rhs.coeffs().to_vec(),
        });
    }
    let ok = rows.iter().all(|r| r.kostka_foulkes == r.nonsymmetric_sum);
    Ok(RefinementReport { shape, mu, ok, rows })
}
