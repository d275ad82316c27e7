//! Exhaustive property suites over every shape up to a size bound.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::comb::{compositions_up_to, shortest_sorting_permutation, Composition, Partition, Permutation};
use crate::crystal::CrystalGraph;
use crate::demazure::{
    check_demazure_subset, demazure_crystal, demazure_lowest_candidates, demazure_lowest_z, key_polynomial,
    members_of, Members,
};
use crate::diagram::{aries, diagram_of};
use crate::error::{Error, Result};
use crate::expansion::{demazure_expansion, kf_refinement_check, kostka_foulkes_charge, kostka_foulkes_maj, macdonald_q0};
use crate::ssyt::{schur_polynomial, ssyt_crystal, Tableau};
use crate::tabloid::enumerate_sskd;
use crate::tabloid_crystal::{build_tabloid_crystal, i_pairing, tabloid_lower, tabloid_raise};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Pairing,
    Operators,
    Commute,
    Axioms,
    Expansions,
    Kostka,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Pairing, Suite::Operators, Suite::Commute, Suite::Axioms, Suite::Expansions, Suite::Kostka];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pairing => "pairing",
            Suite::Operators => "operators",
            Suite::Commute => "commute",
            Suite::Axioms => "axioms",
            Suite::Expansions => "expansions",
            Suite::Kostka => "kostka",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Shapes b with |b| ≤ max_size and length ≤ max_len; B_w(λ) sweeps use
/// λ ⊢ ≤ max_size and w ∈ S_rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_size: usize,
    pub max_len: usize,
    pub rank: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_size: 6, max_len: 5, rank: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub bounds: Bounds,
    pub shapes: usize,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Failures past this many are counted but not recorded.
const MAX_WITNESSES: usize = 20;

struct Tally {
    shapes: usize,
    checks: usize,
    failed: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn new() -> Self {
        Tally { shapes: 0, checks: 0, failed: 0, failures: vec![] }
    }

    fn check(&mut self, ok: bool, check: &str, case: impl fmt::Display, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(Failure { check: check.into(), case: case.to_string(), detail: detail() });
            }
        }
    }

    fn error(&mut self, check: &str, case: impl fmt::Display, e: Error) {
        self.check(false, check, case, || e.to_string());
    }

    fn finish(self, suite: Suite, bounds: Bounds) -> Report {
        let mut failures = self.failures;
        if self.failed > failures.len() {
            failures.push(Failure {
                check: "truncated".into(),
                case: String::new(),
                detail: format!("{} further failures", self.failed - failures.len()),
            });
        }
        Report { suite, bounds, shapes: self.shapes, checks: self.checks, failures }
    }
}

pub fn run(suite: Suite, bounds: Bounds) -> Report {
    let mut t = Tally::new();
    match suite {
        Suite::Pairing => pairing(&mut t, bounds),
        Suite::Operators => operators(&mut t, bounds),
        Suite::Commute => commute(&mut t, bounds),
        Suite::Axioms => axioms(&mut t, bounds),
        Suite::Expansions => expansions(&mut t, bounds),
        Suite::Kostka => kostka(&mut t, bounds),
    }
    t.finish(suite, bounds)
}

fn shapes(b: Bounds) -> Vec<Composition> {
    compositions_up_to(b.max_size, b.max_len)
}

fn pairing(t: &mut Tally, b: Bounds) {
    for a in shapes(b) {
        t.shapes += 1;
        let n = a.len();
        for x in enumerate_sskd(&a) {
            let d = diagram_of(&x);
            for i in 1..n {
                let p = i_pairing(&x, i);
                let (up, down) = d.vertical_unpaired(i);
                t.check(
                    p.unpaired_close_count() == up.len() && p.unpaired_open_count() == down.len(),
                    "diagram pairing",
                    &x,
                    || format!("i={i}"),
                );
                let closes_first = match (p.unmatched_close.last(), p.unmatched_open.first()) {
                    (Some(c), Some(o)) => c < o,
                    _ => true,
                };
                t.check(closes_first, "brackets", &x, || format!("i={i}"));
            }
            let mut cur = d.clone();
            while let Some((c, next)) = (1..cur.max_col()).find_map(|c| cur.rectify_step(c).map(|e| (c, e))) {
                for i in 1..n {
                    let before = (cur.vertical_unpaired(i).0.len(), cur.vertical_unpaired(i).1.len());
                    let after = (next.vertical_unpaired(i).0.len(), next.vertical_unpaired(i).1.len());
                    t.check(before == after, "rectify keeps vertical pairing", &cur, || format!("c={c} i={i}"));
                }
                cur = next;
            }
            for i in 1..n {
                let Some(up) = d.raise(i) else { continue };
                for c in 1..d.max_col().max(up.max_col()) {
                    let before = (d.horizontal_unpaired(c).0.len(), d.horizontal_unpaired(c).1.len());
                    let after = (up.horizontal_unpaired(c).0.len(), up.horizontal_unpaired(c).1.len());
                    t.check(before == after, "raise keeps horizontal pairing", &d, || format!("i={i} c={c}"));
                }
            }
        }
    }
}

fn alpha_shift(w: &Composition, i: usize) -> Composition {
    let mut v = w.clone();
    v.0[i - 1] += 1;
    v.0[i] -= 1;
    v
}

fn operators(t: &mut Tally, b: Bounds) {
    for a in shapes(b) {
        t.shapes += 1;
        let n = a.len();
        let all = enumerate_sskd(&a);
        for x in &all {
            for i in 1..n {
                if let Some(y) = tabloid_raise(x, i) {
                    t.check(all.binary_search_by(|z| z.reading_key().cmp(&y.reading_key())).is_ok(), "raise lands in SSKD", x, || format!("i={i}"));
                    t.check(y.maj() == x.maj(), "raise keeps maj", x, || format!("i={i}"));
                    t.check(y.weight() == alpha_shift(&x.weight(), i), "raise weight", x, || format!("i={i}"));
                    t.check(tabloid_lower(&y, i).as_ref() == Some(x), "lower undoes raise", x, || format!("i={i}"));
                }
                if let Some(y) = tabloid_lower(x, i) {
                    t.check(y.is_valid(), "lower lands in SSKD", x, || format!("i={i}"));
                    t.check(tabloid_raise(&y, i).as_ref() == Some(x), "raise undoes lower", x, || format!("i={i}"));
                }
                if tabloid_raise(x, i).is_none() {
                    let mut len = 0;
                    let mut cur = x.clone();
                    while let Some(y) = tabloid_lower(&cur, i) {
                        cur = y;
                        len += 1;
                    }
                    let full = i_pairing(x, i).unpaired_open_count();
                    t.check(len == full || len == 0, "string length", x, || format!("i={i} len={len} unpaired={full}"));
                }
            }
        }
        match build_tabloid_crystal(&a) {
            Ok(tc) => {
                for &h in &tc.comp_highest {
                    let w = tc.graph.weight(h);
                    t.check(w.is_partition(), "highest weight is a partition", tc.graph.vertex(h), || w.to_string());
                }
            }
            Err(e) => t.error("crystal", &a, e),
        }
    }
}

fn commute(t: &mut Tally, b: Bounds) {
    for a in shapes(b) {
        t.shapes += 1;
        let n = a.len();
        for x in enumerate_sskd(&a) {
            let d = diagram_of(&x);
            let r = d.rect();
            let img = aries(&x);
            for i in 1..n {
                let Some(y) = tabloid_raise(&x, i) else { continue };
                t.check(tabloid_lower(&y, i).as_ref() == Some(&x), "f e = id", &x, || format!("i={i}"));
                t.check(y.maj() == x.maj(), "maj", &x, || format!("i={i}"));
                let dy = diagram_of(&y);
                t.check(d.raise(i).as_ref() == Some(&dy), "diagram map", &x, || format!("i={i}"));
                t.check(r.raise(i).as_ref() == Some(&dy.rect()), "rectification", &x, || format!("i={i}"));
                t.check(img.raise(i).as_ref() == Some(&aries(&y)), "aries", &x, || format!("i={i}"));
            }
        }
    }
}

/// Ambient crystals and checker verdicts shared across the axiom sweep.
#[derive(Default)]
struct AxiomCache {
    ambient: HashMap<(Partition, usize), CrystalGraph<Tableau>>,
    verdict: HashMap<(Partition, usize, Members), std::result::Result<(), String>>,
}

impl AxiomCache {
    fn ambient(&mut self, lam: &Partition, n: usize) -> &CrystalGraph<Tableau> {
        self.ambient.entry((lam.clone(), n)).or_insert_with(|| ssyt_crystal(lam, n))
    }

    fn verdict(&mut self, lam: &Partition, n: usize, m: &Members) -> std::result::Result<(), String> {
        let key = (lam.clone(), n, m.clone());
        if let Some(v) = self.verdict.get(&key) {
            return v.clone();
        }
        let g = self.ambient(lam, n);
        let v = check_demazure_subset(g, m).map_err(|w| serde_json::to_string(&w).unwrap_or_default());
        self.verdict.insert(key, v.clone());
        v
    }
}

fn axioms(t: &mut Tally, b: Bounds) {
    let mut cache = AxiomCache::default();
    let n = b.rank;
    for size in 0..=b.max_size {
        for lam in Partition::all(size).into_iter().filter(|l| l.len() <= n) {
            t.shapes += 1;
            for w in Permutation::all(n) {
                let m = match demazure_crystal(cache.ambient(&lam, n), &w) {
                    Ok(m) => m,
                    Err(e) => {
                        t.error("B_w", format!("{lam} {w}"), e);
                        continue;
                    }
                };
                let v = cache.verdict(&lam, n, &m);
                t.check(v.is_ok(), "B_w passes", format!("{lam} {w}"), || v.unwrap_err());
            }
        }
    }
    for a in shapes(b) {
        t.shapes += 1;
        let tc = match build_tabloid_crystal(&a) {
            Ok(tc) => tc,
            Err(e) => {
                t.error("crystal", &a, e);
                continue;
            }
        };
        let g = &tc.graph;
        let n = a.len();
        for (k, comp) in g.components().iter().enumerate() {
            let mask = members_of(g.len(), comp);
            let h = tc.comp_highest[k];
            let z = match demazure_lowest_z(g, &mask, h) {
                Ok((z, _)) => z,
                Err(e) => {
                    t.error("Z", &a, e);
                    continue;
                }
            };
            let scan = demazure_lowest_candidates(g, &mask);
            t.check(scan == [z], "Z is the dominance-minimal lowest weight", g.vertex(h), || {
                format!("Z={} scan={:?}", g.vertex(z), scan.iter().map(|&v| g.vertex(v).to_string()).collect::<Vec<_>>())
            });
            let lam = g.weight(h).to_partition();
            let amb = cache.ambient(&lam, n);
            let img: Option<Vec<usize>> = comp.iter().map(|&v| amb.index_of(&aries(g.vertex(v)))).collect();
            let Some(img) = img else {
                t.check(false, "aries lands in B(λ)", g.vertex(h), String::new);
                continue;
            };
            let img_mask = members_of(amb.len(), &img);
            t.check(img.len() == comp.len() && img_mask.iter().filter(|&&x| x).count() == comp.len(), "aries is injective", g.vertex(h), String::new);
            let w = shortest_sorting_permutation(g.weight(z));
            let bw = demazure_crystal(amb, &w);
            t.check(bw.as_ref() == Ok(&img_mask), "aries image is B_w", g.vertex(h), || format!("w={w}"));
            let v = cache.verdict(&lam, n, &img_mask);
            t.check(v.is_ok(), "aries image passes", g.vertex(h), || v.unwrap_err());
        }
    }
}

fn expansions(t: &mut Tally, b: Bounds) {
    for a in shapes(b) {
        t.shapes += 1;
        let e = match demazure_expansion(&a) {
            Ok(e) => e,
            Err(err) => {
                t.error("expansion", &a, err);
                continue;
            }
        };
        t.check(e.evaluate(key_polynomial) == macdonald_q0(&a), "master identity", &a, String::new);
        t.check(e.aggregated.values().all(|c| c.is_nonnegative()), "positivity", &a, String::new);
        if a.is_weakly_increasing() {
            let via_schur = e.evaluate(|k| schur_polynomial(&k.to_partition(), k.len()));
            t.check(via_schur == macdonald_q0(&a), "symmetric case", &a, String::new);
        }
    }
}

fn kostka(t: &mut Tally, b: Bounds) {
    for size in 0..=b.max_size {
        let parts = Partition::all(size);
        for mu in &parts {
            t.shapes += 1;
            let m = size - mu.parts().first().copied().unwrap_or(0);
            for lam in &parts {
                let case = format!("{lam} {mu}");
                match (kostka_foulkes_charge(lam, mu), kostka_foulkes_maj(lam, mu, m)) {
                    (Ok(c), Ok(q)) => t.check(c == q, "charge = maj", &case, || format!("{c:?} vs {q:?}")),
                    (Err(e), _) | (_, Err(e)) => t.error("kostka", &case, e),
                }
            }
            let shape = Composition(mu.conjugate().parts().to_vec()).reversed();
            match kf_refinement_check(&shape, m) {
                Ok(r) => t.check(r.ok, "refinement", &shape, || format!("{:?}", r.rows)),
                Err(e) => t.error("refinement", &shape, e),
            }
        }
    }
}
