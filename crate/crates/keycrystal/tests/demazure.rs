mod common;

use std::collections::BTreeSet;

use keycrystal::comb::{compositions_up_to, shortest_sorting_permutation, Composition, Partition, Permutation};
use keycrystal::demazure::*;
use keycrystal::diagram::aries;
use keycrystal::poly::Poly;
use keycrystal::ssyt::{ssyt_crystal, Tableau};
use keycrystal::tabloid::KeyTabloid;
use keycrystal::tabloid_crystal::build_tabloid_crystal;
use keycrystal::CrystalGraph;

fn c(s: &str) -> Composition {
    s.parse().unwrap()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn t(s: &str) -> KeyTabloid {
    s.parse().unwrap()
}

fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    if w.length() == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for i in w.left_descents() {
        let rest = Permutation::simple(i, w.n()).compose(w);
        for mut tail in reduced_words(&rest) {
            tail.insert(0, i);
            out.push(tail);
        }
    }
    out
}

fn faithful(w: &Permutation, lam: &Composition) -> bool {
    shortest_sorting_permutation(&w.act(lam)) == *w
}

/// Strong Bruhat order by the rank-matrix criterion.
fn bruhat_leq(u: &Permutation, v: &Permutation) -> bool {
    let n = u.n();
    (1..=n).all(|i| {
        (1..=n).all(|k| {
            let cu = (1..=i).filter(|&j| u.apply(j) >= k).count();
            let cv = (1..=i).filter(|&j| v.apply(j) >= k).count();
            cu <= cv
        })
    })
}

fn partitions_up_to(max: usize, len: usize) -> Vec<Partition> {
    (1..=max).flat_map(Partition::all).filter(|l| l.len() <= len).collect()
}

#[test]
fn pi_examples() {
    let f = Poly::x_pow(&c("(2,2,1,0)"));
    let g = divided_difference_pi(&f, 2);
    assert_eq!(g, &f + &Poly::x_pow(&c("(2,1,2,0)")));
    assert_eq!(divided_difference_pi(&g, 2), g);
    let cubic = &(&Poly::x_pow(&c("(2,1,0)")) + &Poly::x_pow(&c("(0,0,3)"))) + &Poly::x_pow(&c("(1,0,1)"));
    let l = divided_difference_pi(&divided_difference_pi(&divided_difference_pi(&cubic, 1), 2), 1);
    let r = divided_difference_pi(&divided_difference_pi(&divided_difference_pi(&cubic, 2), 1), 2);
    assert_eq!(l, r);
}

#[test]
fn key_1202_terms() {
    let k = key_polynomial(&c("(1,2,0,2)"));
    let want = [
        "(2,2,1,0)", "(2,2,0,1)", "(2,1,2,0)", "(2,1,1,1)", "(2,1,0,2)", "(1,2,2,0)", "(1,2,1,1)", "(1,2,0,2)",
    ];
    let mut sum = Poly::zero(4);
    for w in want {
        sum = &sum + &Poly::x_pow(&c(w));
    }
    assert_eq!(k, sum);
}

#[test]
fn key_of_reversed_partition_is_schur() {
    for lam in partitions_up_to(5, 4) {
        let a = lam.padded(4).reversed();
        assert_eq!(key_polynomial(&a), keycrystal::ssyt::schur_polynomial(&lam, 4), "{lam}");
    }
    assert_eq!(key_polynomial(&c("(0,0,0)")), Poly::one(3));
}

#[test]
fn fixture_2413() {
    let g = ssyt_crystal(&p("(2,2,1)"), 4);
    let m = demazure_crystal(&g, &"2413".parse().unwrap()).unwrap();
    let fx = common::graph_fixture("demazure_2413.txt");
    let got: BTreeSet<String> = member_indices(&m).iter().map(|&k| g.vertex(k).to_string()).collect();
    assert_eq!(got, fx.vertices.iter().cloned().collect());
    let edges: BTreeSet<(usize, String, String)> = g
        .edges()
        .into_iter()
        .filter(|&(_, a, b)| m[a] && m[b])
        .map(|(i, a, b)| (i, g.vertex(a).to_string(), g.vertex(b).to_string()))
        .collect();
    assert_eq!(edges, fx.edges);
}

#[test]
fn braid_invariance_of_d() {
    let g = ssyt_crystal(&p("(2,2,1)"), 4);
    for w in Permutation::all(4) {
        let words = reduced_words(&w);
        let first = demazure_crystal_word(&g, &words[0]).unwrap();
        for word in &words[1..] {
            assert_eq!(demazure_crystal_word(&g, word).unwrap(), first, "{w} {word:?}");
        }
    }
}

#[test]
fn d_of_highest_is_string() {
    let g = ssyt_crystal(&p("(3,1)"), 3);
    let u = unique_highest(&g).unwrap();
    let m = demazure_operator_d(&g, &members_of(g.len(), &[u]), 1);
    assert_eq!(member_indices(&m).len(), 3);
}

#[test]
fn demazure_characters_are_keys() {
    for lam in partitions_up_to(6, 4) {
        let g = ssyt_crystal(&lam, 4);
        let l = lam.padded(4);
        for w in Permutation::all(4) {
            let m = demazure_crystal(&g, &w).unwrap();
            assert_eq!(g.character_of(&member_indices(&m)), key_polynomial(&w.act(&l)), "{lam} {w}");
        }
    }
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(x, y)| !x || *y)
}

#[test]
fn containment_and_order() {
    for lam in [p("(3,2,1)"), p("(2,1)"), p("(2,2,1)")] {
        let g = ssyt_crystal(&lam, 4);
        let l = lam.padded(4);
        let perms: Vec<Permutation> = Permutation::all(4).into_iter().filter(|w| faithful(w, &l)).collect();
        let masks: Vec<Members> = perms.iter().map(|w| demazure_crystal(&g, w).unwrap()).collect();
        for (a, u) in perms.iter().enumerate() {
            for (b, v) in perms.iter().enumerate() {
                let inside = subset(&masks[a], &masks[b]);
                if u.weak_leq(v) {
                    assert!(inside, "{lam} {u} {v}");
                }
                if lam.len() == 3 {
                    assert_eq!(inside, bruhat_leq(u, v), "{lam} {u} {v}");
                }
            }
        }
    }
    let s1 = Permutation::simple(1, 3);
    let s1s2 = Permutation::from_word(3, &[1, 2]);
    assert!(!s1.weak_leq(&s1s2));
    let g = ssyt_crystal(&p("(2,1)"), 3);
    assert!(subset(&demazure_crystal(&g, &s1).unwrap(), &demazure_crystal(&g, &s1s2).unwrap()));
}

#[test]
fn extremal_elements_sit_at_string_ends() {
    for lam in partitions_up_to(6, 4) {
        let g = ssyt_crystal(&lam, 4);
        let sorted = lam.padded(4);
        for k in 0..g.len() {
            if keycrystal::comb::sort_decreasing(g.weight(k)) == sorted {
                for i in g.colors() {
                    assert!(g.phi(k, i) == 0 || g.eps(k, i) == 0);
                }
            }
        }
    }
}

#[test]
fn every_bw_passes_the_checker() {
    for lam in partitions_up_to(5, 4) {
        let g = ssyt_crystal(&lam, 4);
        for w in Permutation::all(4) {
            let m = demazure_crystal(&g, &w).unwrap();
            assert_eq!(check_demazure_subset(&g, &m), Ok(()), "{lam} {w}");
        }
        assert_eq!(check_demazure_subset(&g, &vec![true; g.len()]), Ok(()));
    }
}

#[test]
fn far_clause_on_b4231_of_321() {
    // f_2 at x and at y stays inside, while f_2 f_1^*(x) leaves.
    let g = ssyt_crystal(&p("(3,2,1)"), 4);
    let m = demazure_crystal(&g, &"4231".parse().unwrap()).unwrap();
    let id = |s: &str| g.index_of(&s.parse().unwrap()).unwrap();
    let (x, y) = (id("1 1 1/2 4/4"), id("1 2 2/2 3/3"));
    assert_eq!(g.e_star(x, 3), g.e_star(y, 1));
    assert!(m[g.f(x, 2).unwrap()] && m[g.f(y, 2).unwrap()]);
    assert!(!m[g.f(g.f_star(x, 1).unwrap(), 2).unwrap()]);
    assert_eq!(check_demazure_subset(&g, &m), Ok(()));
}

#[test]
fn extremal_failure_witness() {
    let g = ssyt_crystal(&p("(2)"), 3);
    let u = unique_highest(&g).unwrap();
    let mid = g.f(u, 1).unwrap();
    let err = check_extremal(&g, &members_of(g.len(), &[u, mid])).unwrap_err();
    assert_eq!(err.condition, "(3)");
    assert_eq!(err.colors, [1]);
    let err = check_extremal(&g, &members_of(g.len(), &[mid])).unwrap_err();
    assert_eq!(err.condition, "(1)");
    let json = serde_json::to_string(&err).unwrap();
    assert!(json.contains("\"condition\":\"(1)\""));
}

/// Every e-closed subset containing the highest weight, by bitmask.
fn extremal_subsets<V: std::fmt::Display>(g: &CrystalGraph<V>) -> Vec<Members> {
    let n = g.len();
    assert!(n <= 20);
    let ups: Vec<u32> =
        (0..n).map(|k| g.colors().filter_map(|i| g.e(k, i)).fold(0u32, |m, j| m | 1 << j)).collect();
    (0u32..1 << n)
        .filter(|&m| (0..n).all(|k| m >> k & 1 == 0 || ups[k] & !m == 0))
        .map(|m| (0..n).map(|k| m >> k & 1 == 1).collect::<Members>())
        .filter(|x| check_extremal(g, x).is_ok())
        .collect()
}

#[test]
fn checker_rejects_only_non_demazure_subsets() {
    let mut rejected = 0;
    for (lam, n) in [(p("(2,1)"), 3), (p("(2,1)"), 4), (p("(2,2)"), 3), (p("(3,1)"), 3)] {
        let g = ssyt_crystal(&lam, n);
        let bw: BTreeSet<Members> = Permutation::all(n).iter().map(|w| demazure_crystal(&g, w).unwrap()).collect();
        for x in extremal_subsets(&g) {
            if check_demazure_subset(&g, &x).is_err() {
                assert!(!bw.contains(&x), "{lam} n={n} {:?}", member_indices(&x));
                rejected += 1;
            }
        }
    }
    assert!(rejected > 0);
}

#[test]
fn extremal_conditions_miss_non_extremal_gaps() {
    // Only 111 and 222 are extremal here, so (4)-(6) say nothing.
    let g = ssyt_crystal(&p("(3)"), 3);
    let names = ["1 1 1", "1 1 2", "1 2 2", "2 2 2", "1 1 3"];
    let idx: Vec<usize> = names.iter().map(|s| g.index_of(&s.parse().unwrap()).unwrap()).collect();
    let x = members_of(g.len(), &idx);
    assert_eq!(check_demazure_subset(&g, &x), Ok(()));
    assert!(Permutation::all(3).iter().all(|w| demazure_crystal(&g, w).unwrap() != x));
}

#[test]
fn composite_lower_trivial() {
    let g = ssyt_crystal(&p("(2,2,1)"), 4);
    let all = vec![true; g.len()];
    let low = g.lowest_weights()[0];
    let l = composite_lower(&g, &all, low, 1, 3);
    assert_eq!(l.end, low);
    assert!(!l.faithful);
    assert!(is_lowest_in(&g, &all, low));
}

#[test]
fn high_low_runs() {
    let tc = build_tabloid_crystal(&c("(0,3,0,2)")).unwrap();
    let g = &tc.graph;
    let cases = [
        (
            "shape=(0,3,0,2); r2=1,3,2; r4=2,1",
            vec![vec![(3, 1), (2, 2), (1, 2)], vec![(3, 1), (2, 1)]],
            vec![
                "shape=(0,3,0,2); r2=1,4,2; r4=2,1",
                "shape=(0,3,0,2); r2=1,4,3; r4=3,1",
                "shape=(0,3,0,2); r2=2,4,3; r4=3,2",
                "shape=(0,3,0,2); r2=2,4,4; r4=3,2",
                "shape=(0,3,0,2); r2=2,4,4; r4=3,3",
            ],
            "(0,1,2,2)",
        ),
        (
            "shape=(0,3,0,2); r2=1,1,3; r4=2,2",
            vec![vec![(3, 1), (2, 2), (1, 2)], vec![(3, 1)]],
            vec![
                "shape=(0,3,0,2); r2=1,1,4; r4=2,2",
                "shape=(0,3,0,2); r2=1,1,4; r4=3,3",
                "shape=(0,3,0,2); r2=2,2,4; r4=3,3",
                "shape=(0,3,0,2); r2=2,2,4; r4=4,3",
            ],
            "(0,2,1,2)",
        ),
    ];
    for (hw, steps, stops, wt) in cases {
        let h = g.index_of(&t(hw)).unwrap();
        let comp = members_of(g.len(), &g.components()[g.component_of(h)]);
        let (z, trace) = demazure_lowest_z(g, &comp, h).unwrap();
        let got: Vec<Vec<(usize, usize)>> = trace.iter().map(|l| l.steps.clone()).collect();
        assert_eq!(got, steps);
        let mut seen = vec![];
        let mut cur = h;
        for l in &trace {
            for &(col, r) in &l.steps {
                for _ in 0..r {
                    cur = g.f(cur, col).unwrap();
                }
                seen.push(g.vertex(cur).to_string());
            }
        }
        seen.dedup();
        let want: Vec<String> = stops.iter().map(|s| t(s).to_string()).collect();
        assert_eq!(seen, want);
        assert_eq!(g.weight(z).to_string(), wt);
    }
}

#[test]
fn z_matches_full_scan_on_tabloid_components() {
    for a in compositions_up_to(6, 4) {
        let tc = build_tabloid_crystal(&a).unwrap();
        let g = &tc.graph;
        for (k, comp) in g.components().iter().enumerate() {
            let mask = members_of(g.len(), comp);
            let (z, _) = demazure_lowest_z(g, &mask, tc.comp_highest[k]).unwrap();
            assert_eq!(common::scan_lowest(g, comp), vec![z], "{a}");
            assert_eq!(demazure_lowest_candidates(g, &mask), vec![z]);
        }
    }
}

#[test]
fn super_yamanouchi_example() {
    let blocks = vec![vec![5, 6, 7], vec![4, 5], vec![3, 4, 5, 6], vec![1, 2, 3]];
    let w: Permutation = "26714835".parse().unwrap();
    assert_eq!(w.super_yamanouchi_word(), blocks);
    assert_eq!(Permutation::from_word(8, &blocks.concat()), w);
    assert_eq!(w.inverse().to_string(), "41758236");
}

#[test]
fn super_yamanouchi_blocks_are_faithful() {
    for lam in [p("(3,2,1)"), p("(2,1,1)"), p("(4,2,1)")] {
        let g = ssyt_crystal(&lam, 4);
        let l = lam.padded(4);
        let u = unique_highest(&g).unwrap();
        for w in Permutation::all(4).into_iter().filter(|w| faithful(w, &l)) {
            let m = demazure_crystal(&g, &w).unwrap();
            let mut b = u;
            for block in w.super_yamanouchi_word().iter().rev() {
                let step = composite_lower(&g, &m, b, block[0], *block.last().unwrap());
                assert!(step.faithful, "{lam} {w} {block:?}");
                b = step.end;
            }
            let (z, _) = demazure_lowest_z(&g, &m, u).unwrap();
            assert_eq!(b, z, "{lam} {w}");
            assert_eq!(*g.weight(z), w.act(&l));
        }
    }
}

#[test]
fn aries_images_are_demazure_crystals() {
    for a in [c("(0,3,0,2)"), c("(1,2,0,2)"), c("(0,0,2,3)")] {
        let tc = build_tabloid_crystal(&a).unwrap();
        let g = &tc.graph;
        let n = a.len();
        for (k, comp) in g.components().iter().enumerate() {
            let lam = g.weight(tc.comp_highest[k]).to_partition();
            let amb = ssyt_crystal(&lam, n);
            let img: Vec<usize> = comp.iter().map(|&v| amb.index_of(&aries(g.vertex(v))).unwrap()).collect();
            let mask = members_of(amb.len(), &img);
            assert_eq!(check_demazure_subset(&amb, &mask), Ok(()), "{a}");
            let (z, _) = demazure_lowest_z(g, &members_of(g.len(), comp), tc.comp_highest[k]).unwrap();
            let w = shortest_sorting_permutation(g.weight(z));
            assert_eq!(demazure_crystal(&amb, &w).unwrap(), mask, "{a} {w}");
            let (zz, _) = demazure_lowest_z(&amb, &mask, unique_highest(&amb).unwrap()).unwrap();
            assert_eq!(amb.vertex(zz), &aries(g.vertex(z)));
        }
    }
}

#[test]
fn lowest_weight_is_strictly_dominated() {
    let g = ssyt_crystal(&p("(2,2,1)"), 4);
    for w in Permutation::all(4) {
        let m = demazure_crystal(&g, &w).unwrap();
        let lows: Vec<usize> = member_indices(&m).into_iter().filter(|&k| is_lowest_in(&g, &m, k)).collect();
        let z = demazure_lowest_candidates(&g, &m);
        assert_eq!(z.len(), 1);
        for y in lows.into_iter().filter(|&y| y != z[0]) {
            assert_ne!(g.weight(y), g.weight(z[0]));
        }
    }
    let _ = Tableau::superstandard(&p("(1)"));
}
