//! Exact polynomials: univariate in q (or t) and multivariate over ℤ[q].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::comb::Composition;

/// Integer polynomial in one variable, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QPoly(Vec<i64>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(vec![])
    }

    pub fn one() -> Self {
        QPoly(vec![1])
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// c·q^k
    pub fn term(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        QPoly::from_coeffs(v)
    }

    pub fn from_coeffs(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        QPoly(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.0.iter().position(|&c| c != 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn add_term(&mut self, c: i64, k: usize) {
        if self.0.len() <= k {
            self.0.resize(k + 1, 0);
        }
        self.0[k] += c;
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn num_terms(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("q"))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![0; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(v)
    }
}

/// Exponent vector of a monomial in x_1..x_n.
pub type Exponent = Vec<u32>;

/// Polynomial in x_1..x_n with ℤ[q] coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Exponent, QPoly>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Poly::monomial(vec![0; n], QPoly::one())
    }

    pub fn monomial(exp: Exponent, c: QPoly) -> Self {
        let mut p = Poly::zero(exp.len());
        p.add_term(exp, &c);
        p
    }

    pub fn x_pow(a: &Composition) -> Self {
        Poly::monomial(a.0.iter().map(|&k| k as u32).collect(), QPoly::one())
    }

    /// x_i, 1-based.
    pub fn var(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Poly::monomial(e, QPoly::one())
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &QPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> QPoly {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: Exponent, c: &QPoly) {
        assert_eq!(exp.len(), self.n, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                let v = o.get() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
        }
    }

    pub fn scale(&self, c: &QPoly) -> Poly {
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &(v * c));
        }
        out
    }

    /// Exchange x_i and x_{i+1}.
    pub fn swap_vars(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i - 1, i);
            out.add_term(e2, v);
        }
        out
    }

    /// ∂_i f = (f − s_i f)/(x_i − x_{i+1}).
    pub fn divided_difference(&self, i: usize) -> Poly {
        let (a, b) = (i - 1, i);
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            let (p, r) = (e[a], e[b]);
            if p == r {
                continue;
            }
            let (hi, lo, sign) = if p > r { (p, r, 1) } else { (r, p, -1) };
            let c = if sign > 0 { v.clone() } else { -v };
            for k in 0..hi - lo {
                let mut e2 = e.clone();
                e2[a] = hi - 1 - k;
                e2[b] = lo + k;
                out.add_term(e2, &c);
            }
        }
        debug_assert!({
            let lhs = &(&Poly::var(i, self.n) - &Poly::var(i + 1, self.n)) * &out;
            lhs == self - &self.swap_vars(i)
        });
        out
    }

    /// Demazure operator π_i f = ∂_i(x_i f).
    pub fn demazure_pi(&self, i: usize) -> Poly {
        (&Poly::var(i, self.n) * self).divided_difference(i)
    }

    /// Set x_{m+1}, …, x_n to zero, leaving a polynomial in m variables.
    pub fn truncate(&self, m: usize) -> Poly {
        let mut out = Poly::zero(m);
        for (e, v) in &self.terms {
            if e[m..].iter().all(|&k| k == 0) {
                out.add_term(e[..m].to_vec(), v);
            }
        }
        out
    }

    /// Substitute a value for q.
    pub fn eval_q(&self, q: i64) -> Poly {
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &QPoly::constant(v.eval(q)));
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| &self.swap_vars(i) == self)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_nonnegative())
    }
}

fn fmt_monomial(e: &[u32]) -> String {
    let mut s = String::new();
    for (k, &p) in e.iter().enumerate() {
        match p {
            0 => {}
            1 => s.push_str(&format!("x{}", k + 1)),
            _ => s.push_str(&format!("x{}^{}", k + 1, p)),
        }
    }
    s
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let m = fmt_monomial(e);
            let cs = c.to_string();
            match (m.is_empty(), cs.as_str()) {
                (true, _) => write!(f, "{cs}")?,
                (false, "1") => write!(f, "{m}")?,
                (false, _) if c.num_terms() == 1 && c.coeff(c.degree().unwrap()) > 0 => {
                    write!(f, "{cs}·{m}")?
                }
                _ => write!(f, "({cs})·{m}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (e, v) in &o.terms {
            out.add_term(e.clone(), v);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (e, v) in &o.terms {
            out.add_term(e.clone(), &-v);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        assert_eq!(self.n, o.n);
        let mut out = Poly::zero(self.n);
        for (e1, v1) in &self.terms {
            for (e2, v2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(v1 * v2));
            }
        }
        out
    }
}
