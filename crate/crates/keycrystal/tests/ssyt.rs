mod common;

use std::collections::BTreeSet;

use keycrystal::comb::Partition;
use keycrystal::crystal::{standard_crystal, tensor_product, trivial_crystal};
use keycrystal::ssyt::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn tab(s: &str) -> Tableau {
    s.parse().unwrap()
}

#[test]
fn counts() {
    assert_eq!(enumerate_ssyt(&p("(2,2,1)"), 4).len(), 20);
    assert_eq!(enumerate_ssyt(&p("(2,1)"), 3).len(), 8);
    assert_eq!(enumerate_ssyt(&p("(1)"), 5).len(), 5);
    assert!(enumerate_ssyt(&p("(1,1,1)"), 2).is_empty());
}

#[test]
fn counts_match_kostka_sums() {
    for n in 1..=4 {
        for size in 1..=5 {
            for lam in Partition::all(size).into_iter().filter(|l| l.len() <= n) {
                let want: usize = keycrystal::comb::compositions(size, n)
                    .iter()
                    .map(|w| {
                        let mut parts: Vec<usize> = w.parts().iter().copied().filter(|&x| x > 0).collect();
                        parts.sort_unstable_by(|a, b| b.cmp(a));
                        common::kostka_number(&lam, &Partition::new(parts).unwrap())
                    })
                    .sum();
                assert_eq!(enumerate_ssyt(&lam, n).len(), want, "{lam} n={n}");
            }
        }
    }
}

#[test]
fn fixture_221() {
    let g = ssyt_crystal(&p("(2,2,1)"), 4);
    let fx = common::graph_fixture("ssyt_crystal_221.txt");
    let verts: BTreeSet<String> = g.vertices().iter().map(|t| t.to_string()).collect();
    assert_eq!(verts, fx.vertices.iter().cloned().collect());
    let edges: BTreeSet<(usize, String, String)> = g
        .edges()
        .into_iter()
        .map(|(i, a, b)| (i, g.vertex(a).to_string(), g.vertex(b).to_string()))
        .collect();
    assert_eq!(edges.len(), 27);
    assert_eq!(edges, fx.edges);
}

#[test]
fn highest_weight_is_superstandard() {
    for size in 1..=6 {
        for lam in Partition::all(size).into_iter().filter(|l| l.len() <= 4) {
            let g = ssyt_crystal(&lam, 4);
            let hw = g.highest_weights();
            assert_eq!(hw.len(), 1);
            assert_eq!(g.vertex(hw[0]), &Tableau::superstandard(&lam));
        }
    }
}

#[test]
fn raise_lower_round_trip_and_strings() {
    for size in 1..=6 {
        for lam in Partition::all(size).into_iter().filter(|l| l.len() <= 4) {
            for t in enumerate_ssyt(&lam, 4) {
                for i in 1..4 {
                    if let Some(u) = t.raise(i) {
                        assert_eq!(u.lower(i).as_ref(), Some(&t));
                    }
                    if let Some(u) = t.lower(i) {
                        assert_eq!(u.raise(i).as_ref(), Some(&t));
                    }
                    let (up, down) = t.unpaired(i);
                    assert_eq!(t.eps(i), up.len());
                    assert_eq!(t.phi(i), down.len());
                    let w = t.weight(4);
                    assert_eq!(t.phi(i) as i64 - t.eps(i) as i64, w.0[i - 1] as i64 - w.0[i] as i64);
                }
            }
        }
    }
}

#[test]
fn weyl_reflections() {
    let all = enumerate_ssyt(&p("(2,2,1)"), 4);
    for t in &all {
        for i in 1..4 {
            let s = t.weyl_reflect(i);
            assert_eq!(s.weyl_reflect(i), *t);
            let (w, v) = (t.weight(4), s.weight(4));
            assert_eq!((v.0[i - 1], v.0[i]), (w.0[i], w.0[i - 1]));
            if w.0[i - 1] == w.0[i] {
                assert_eq!(&s, t);
            }
        }
    }
    for t in enumerate_ssyt(&p("(2,1)"), 3) {
        let l = t.weyl_reflect(1).weyl_reflect(2).weyl_reflect(1);
        let r = t.weyl_reflect(2).weyl_reflect(1).weyl_reflect(2);
        assert_eq!(l, r);
    }
}

#[test]
fn flip_examples() {
    let hw = tab("1 1/2 2/3");
    assert_eq!(crystal_flip(&hw, 4), tab("2 3/3 4/4"));
    assert_eq!(crystal_flip(&tab("2 3/3 4/4"), 4), hw);
    assert_eq!(crystal_flip(&tab("1 2/2 3/3"), 4), tab("2 2/3 3/4"));
}

#[test]
fn flip_matches_path_definition() {
    for lam in [p("(2,2,1)"), p("(3,1)"), p("(2,1,1)")] {
        let g = ssyt_crystal(&lam, 4);
        let u = g.highest_weights()[0];
        let z = g.lowest_weights()[0];
        // Walk f-paths from u and mirror them with e_{n-i} from z.
        let mut image = vec![None; g.len()];
        image[u] = Some(z);
        let mut stack = vec![u];
        while let Some(a) = stack.pop() {
            for i in 1..4 {
                if let Some(b) = g.f(a, i) {
                    let zb = g.e(image[a].unwrap(), 4 - i).expect("mirror path exists");
                    match image[b] {
                        Some(old) => assert_eq!(old, zb),
                        None => {
                            image[b] = Some(zb);
                            stack.push(b);
                        }
                    }
                }
            }
        }
        for k in 0..g.len() {
            assert_eq!(g.vertex(image[k].unwrap()), &crystal_flip(g.vertex(k), 4));
        }
    }
}

#[test]
fn flip_is_involution() {
    for t in enumerate_ssyt(&p("(2,2,1)"), 4) {
        assert_eq!(crystal_flip(&crystal_flip(&t, 4), 4), t);
    }
}

#[test]
fn tensor_of_standard_crystals() {
    let b = standard_crystal(3);
    let g = tensor_product(&b, &b).unwrap();
    let mut hw: Vec<String> = g.highest_weights().iter().map(|&k| g.weight(k).to_string()).collect();
    hw.sort();
    assert_eq!(hw, ["(1,1,0)", "(2,0,0)"]);
    let mut sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
    sizes.sort();
    assert_eq!(sizes, [3, 6]);
    let t = tensor_product(&b, &trivial_crystal(3)).unwrap();
    assert_eq!(t.len(), 3);
    assert_eq!(t.edges(), b.edges());
    assert!(tensor_product(&b, &standard_crystal(4)).is_err());
}

#[test]
fn tensor_character_is_multiplicative() {
    let a = ssyt_crystal(&p("(2,1)"), 3);
    let b = ssyt_crystal(&p("(1,1)"), 3);
    let g = tensor_product(&a, &b).unwrap();
    assert_eq!(g.character(), &a.character() * &b.character());
    let g2 = tensor_product(&standard_crystal(4), &ssyt_crystal(&p("(2)"), 4)).unwrap();
    assert_eq!(g2.character(), &standard_crystal(4).character() * &schur_polynomial(&p("(2)"), 4));
}

#[test]
fn schur_polynomials() {
    let s = schur_polynomial(&p("(2,1)"), 3);
    assert!(s.is_symmetric());
    assert_eq!(s.num_terms(), 7);
    assert_eq!(s.coeff(&[1, 1, 1]).coeff(0), 2);
    assert_eq!(ssyt_crystal(&p("(2,2,1)"), 4).character(), schur_polynomial(&p("(2,2,1)"), 4));
}

#[test]
fn insertion_shapes() {
    let t = Tableau::from_word(&[3, 1, 2, 1]);
    assert_eq!(t.to_string(), "1 1/2/3");
    assert_eq!(Tableau::from_word(&t.reading_word()), t);
}

#[test]
fn parse_errors() {
    assert!("2 1".parse::<Tableau>().is_err());
    assert!("1 1/1".parse::<Tableau>().is_err());
    assert!("1/2 3".parse::<Tableau>().is_err());
}
