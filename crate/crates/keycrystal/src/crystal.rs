//! Finite crystal graphs with colours 1..n-1.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use serde::Serialize;

use crate::comb::Composition;
use crate::error::{Error, Result};
use crate::poly::{Poly, QPoly};

#[derive(Clone, Debug)]
pub struct CrystalGraph<V> {
    n: usize,
    vertices: Vec<V>,
    index: HashMap<V, usize>,
    weights: Vec<Composition>,
    f: Vec<Vec<Option<usize>>>,
    e: Vec<Vec<Option<usize>>>,
    comp: Vec<usize>,
    ncomp: usize,
}

impl<V: Clone + Eq + Hash> CrystalGraph<V> {
    /// Builds the graph from its vertex set and lowering operators.
    /// Every image must be a listed vertex and each f_i must be injective.
    pub fn from_lowering<W, F>(n: usize, vertices: Vec<V>, weight: W, lower: F) -> Result<Self>
    where
        W: Fn(&V) -> Composition,
        F: Fn(&V, usize) -> Option<V>,
    {
        let mut index = HashMap::with_capacity(vertices.len());
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), k).is_some() {
                return Err(Error::Invalid("duplicate vertex".into()));
            }
        }
        let weights: Vec<Composition> = vertices.iter().map(&weight).collect();
        let colors = n.saturating_sub(1);
        let mut f = vec![vec![None; vertices.len()]; colors];
        let mut e = vec![vec![None; vertices.len()]; colors];
        for i in 1..=colors {
            for (k, v) in vertices.iter().enumerate() {
                if let Some(w) = lower(v, i) {
                    let Some(&t) = index.get(&w) else {
                        return Err(Error::Internal(format!("f_{i} leaves the vertex set")));
                    };
                    if e[i - 1][t].is_some() {
                        return Err(Error::Internal(format!("f_{i} is not injective")));
                    }
                    f[i - 1][k] = Some(t);
                    e[i - 1][t] = Some(k);
                }
            }
        }
        let mut g = CrystalGraph { n, vertices, index, weights, f, e, comp: vec![], ncomp: 0 };
        g.label_components();
        Ok(g)
    }

    fn label_components(&mut self) {
        let len = self.vertices.len();
        let mut comp = vec![usize::MAX; len];
        let mut c = 0;
        for s in 0..len {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = c;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for i in 0..self.f.len() {
                    for w in [self.f[i][v], self.e[i][v]].into_iter().flatten() {
                        if comp[w] == usize::MAX {
                            comp[w] = c;
                            stack.push(w);
                        }
                    }
                }
            }
            c += 1;
        }
        self.comp = comp;
        self.ncomp = c;
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }
}

impl<V> CrystalGraph<V> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> &V {
        &self.vertices[k]
    }

    pub fn weight(&self, k: usize) -> &Composition {
        &self.weights[k]
    }

    pub fn f(&self, k: usize, i: usize) -> Option<usize> {
        self.f[i - 1][k]
    }

    pub fn e(&self, k: usize, i: usize) -> Option<usize> {
        self.e[i - 1][k]
    }

    pub fn phi(&self, k: usize, i: usize) -> usize {
        let (mut c, mut v) = (0, k);
        while let Some(w) = self.f(v, i) {
            c += 1;
            v = w;
        }
        c
    }

    pub fn eps(&self, k: usize, i: usize) -> usize {
        let (mut c, mut v) = (0, k);
        while let Some(w) = self.e(v, i) {
            c += 1;
            v = w;
        }
        c
    }

    /// Bottom of the i-string through k, or `None` if f_i(k) = 0.
    pub fn f_star(&self, k: usize, i: usize) -> Option<usize> {
        let mut v = self.f(k, i)?;
        while let Some(w) = self.f(v, i) {
            v = w;
        }
        Some(v)
    }

    /// Top of the i-string through k, or `None` if e_i(k) = 0.
    pub fn e_star(&self, k: usize, i: usize) -> Option<usize> {
        let mut v = self.e(k, i)?;
        while let Some(w) = self.e(v, i) {
            v = w;
        }
        Some(v)
    }

    pub fn colors(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n.saturating_sub(1)
    }

    pub fn is_highest(&self, k: usize) -> bool {
        self.colors().all(|i| self.e(k, i).is_none())
    }

    pub fn is_lowest(&self, k: usize) -> bool {
        self.colors().all(|i| self.f(k, i).is_none())
    }

    pub fn component_of(&self, k: usize) -> usize {
        self.comp[k]
    }

    pub fn num_components(&self) -> usize {
        self.ncomp
    }

    /// Vertex indices of each component, components ordered by first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]; self.ncomp];
        for (k, &c) in self.comp.iter().enumerate() {
            out[c].push(k);
        }
        out
    }

    pub fn highest_weights(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.is_highest(k)).collect()
    }

    pub fn lowest_weights(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.is_lowest(k)).collect()
    }

    /// All edges as (colour, source, target) of f.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = vec![];
        for i in self.colors() {
            for k in 0..self.len() {
                if let Some(t) = self.f(k, i) {
                    out.push((i, k, t));
                }
            }
        }
        out
    }

    pub fn character(&self) -> Poly {
        self.character_of((0..self.len()).collect::<Vec<_>>().as_slice())
    }

    pub fn character_of(&self, members: &[usize]) -> Poly {
        let mut p = Poly::zero(self.n);
        for &k in members {
            p.add_term(self.weights[k].0.iter().map(|&x| x as u32).collect(), &QPoly::one());
        }
        p
    }

    /// Graphviz rendering. Edge classes are c1, c2, …; nodes follow vertex order.
    pub fn to_dot<L, T>(&self, name: &str, label: L, tooltip: T) -> String
    where
        L: Fn(&V) -> String,
        T: Fn(usize) -> String,
    {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", esc(name));
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                s,
                "  v{k} [label=\"{}\", tooltip=\"{}\"];",
                esc(&label(v)),
                esc(&tooltip(k))
            );
        }
        for (i, a, b) in self.edges() {
            let _ = writeln!(s, "  v{a} -> v{b} [class=\"c{i}\", label=\"{i}\"];");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json<L>(&self, label: L) -> GraphJson
    where
        L: Fn(&V) -> String,
    {
        GraphJson {
            n: self.n,
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(k, v)| VertexJson {
                    id: k,
                    label: label(v),
                    weight: self.weights[k].clone(),
                    component: self.comp[k],
                })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(color, source, target)| EdgeJson { color, source, target })
                .collect(),
        }
    }
}

fn esc(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexJson {
    pub id: usize,
    pub label: String,
    pub weight: Composition,
    pub component: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeJson {
    pub color: usize,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

/// The standard crystal B(n) on the letters 1..n.
pub fn standard_crystal(n: usize) -> CrystalGraph<u8> {
    let verts: Vec<u8> = (1..=n as u8).collect();
    CrystalGraph::from_lowering(
        n,
        verts,
        |&b| {
            let mut w = vec![0; n];
            w[b as usize - 1] = 1;
            Composition(w)
        },
        |&b, i| (b as usize == i).then_some(b + 1),
    )
    .expect("standard crystal")
}

/// A single vertex of weight zero.
pub fn trivial_crystal(n: usize) -> CrystalGraph<()> {
    CrystalGraph::from_lowering(n, vec![()], |_| Composition::zeros(n), |_, _| None)
        .expect("trivial crystal")
}

/// Tensor product with f_i(b1⊗b2) = f_i(b1)⊗b2 when ε_i(b2) < φ_i(b1),
/// and b1⊗f_i(b2) otherwise.
pub fn tensor_product<A, B>(g1: &CrystalGraph<A>, g2: &CrystalGraph<B>) -> Result<CrystalGraph<(usize, usize)>>
where
    A: Clone + Eq + Hash,
    B: Clone + Eq + Hash,
{
    if g1.n() != g2.n() {
        return Err(Error::LengthMismatch(g1.n(), g2.n()));
    }
    let verts: Vec<(usize, usize)> =
        (0..g1.len()).flat_map(|a| (0..g2.len()).map(move |b| (a, b))).collect();
    CrystalGraph::from_lowering(
        g1.n(),
        verts,
        |&(a, b)| {
            Composition(g1.weight(a).0.iter().zip(&g2.weight(b).0).map(|(x, y)| x + y).collect())
        },
        |&(a, b), i| {
            if g2.eps(b, i) < g1.phi(a, i) {
                g1.f(a, i).map(|a2| (a2, b))
            } else {
                g2.f(b, i).map(|b2| (a, b2))
            }
        },
    )
}
