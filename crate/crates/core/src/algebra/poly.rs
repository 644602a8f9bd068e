use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Polynomial,
    /// Squares to zero structurally.
    Exterior,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
    pub parity: Parity,
}

impl Variable {
    pub fn poly(name: &str, degree: u32) -> Self {
        Variable {
            name: name.to_string(),
            degree,
            parity: Parity::Polynomial,
        }
    }

    pub fn exterior(name: &str, degree: u32) -> Self {
        Variable {
            name: name.to_string(),
            degree,
            parity: Parity::Exterior,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Exponent vector, one entry per ring variable. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self, vars: &[Variable]) -> u32 {
        self.0.iter().zip(vars).map(|(e, v)| e * v.degree).sum()
    }

    /// Graded-commutative product: `None` when an exterior variable would be
    /// squared, otherwise the monomial and the Koszul sign (`true` = negative).
    pub fn mul(&self, other: &Monomial, vars: &[Variable]) -> Option<(Monomial, bool)> {
        let n = vars.len();
        let mut exps = Vec::with_capacity(n);
        for i in 0..n {
            let e = self.0[i] + other.0[i];
            if vars[i].parity == Parity::Exterior && e > 1 {
                return None;
            }
            exps.push(e);
        }
        // moving odd generators of `other` left past odd generators of `self`
        // with a larger index
        let mut swaps = 0u64;
        for b in 0..n {
            if !vars[b].is_odd() || other.0[b] == 0 {
                continue;
            }
            let later: u64 = (b + 1..n)
                .filter(|&a| vars[a].is_odd())
                .map(|a| self.0[a] as u64)
                .sum();
            swaps += later * other.0[b] as u64;
        }
        Some((Monomial(exps), swaps % 2 == 1))
    }

    pub fn render(&self, vars: &[Variable]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| {
                if *e == 1 {
                    v.name.clone()
                } else {
                    format!("{}^{}", v.name, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// All monomials of exactly `degree`, in lexicographic order.
pub fn monomials_of_degree(vars: &[Variable], degree: u32) -> Vec<Monomial> {
    fn rec(
        vars: &[Variable],
        idx: usize,
        remaining: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if idx == vars.len() {
            if remaining == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let v = &vars[idx];
        let max = if v.degree == 0 {
            0
        } else {
            let m = remaining / v.degree;
            if v.parity == Parity::Exterior {
                m.min(1)
            } else {
                m
            }
        };
        for e in 0..=max {
            cur.push(e);
            rec(vars, idx + 1, remaining - e * v.degree, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, 0, degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Polynomial with integer coefficients over a fixed variable list.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct IntPoly {
    pub terms: BTreeMap<Monomial, i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        IntPoly::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut p = IntPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        IntPoly::monomial(Monomial::var(nvars, v), 1)
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let sum = self.coefficient(&m) + c;
        if sum == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), *c);
        }
        r
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> IntPoly {
        let mut r = IntPoly::zero();
        for (m, v) in &self.terms {
            r.add_term(m.clone(), v * c);
        }
        r
    }

    pub fn mul(&self, other: &IntPoly, vars: &[Variable]) -> IntPoly {
        let mut r = IntPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, neg)) = m1.mul(m2, vars) {
                    let c = c1 * c2;
                    r.add_term(m, if neg { -c } else { c });
                }
            }
        }
        r
    }

    pub fn pow(&self, e: u32, vars: &[Variable]) -> IntPoly {
        let mut r = IntPoly::constant(vars.len(), 1);
        for _ in 0..e {
            r = r.mul(self, vars);
        }
        r
    }

    /// Common degree of all terms; `None` for the zero polynomial or when
    /// terms disagree.
    pub fn homogeneous_degree(&self, vars: &[Variable]) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree(vars));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, vars: &[Variable]) -> bool {
        self.is_zero() || self.homogeneous_degree(vars).is_some()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn render(&self, vars: &[Variable]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = m.render(vars);
            let abs = c.abs();
            let body = match (abs, mono.as_str()) {
                (_, "1") => abs.to_string(),
                (1, _) => mono,
                _ => format!("{abs}*{mono}"),
            };
            if i == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *c < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

pub struct DisplayPoly<'a>(pub &'a IntPoly, pub &'a [Variable]);

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_square_vanishes() {
        let vars = vec![Variable::poly("x", 2), Variable::exterior("s", 3)];
        let s = Monomial::var(2, 1);
        assert!(s.mul(&s, &vars).is_none());
    }

    #[test]
    fn odd_generators_anticommute() {
        let vars = vec![Variable::exterior("a", 1), Variable::exterior("b", 1)];
        let a = Monomial::var(2, 0);
        let b = Monomial::var(2, 1);
        let (ab, s1) = a.mul(&b, &vars).unwrap();
        let (ba, s2) = b.mul(&a, &vars).unwrap();
        assert_eq!(ab, ba);
        assert!(!s1);
        assert!(s2);
    }

    #[test]
    fn monomial_enumeration() {
        let vars = vec![Variable::poly("x1", 2), Variable::poly("x2", 2)];
        let ms = monomials_of_degree(&vars, 4);
        assert_eq!(
            ms,
            vec![Monomial(vec![0, 2]), Monomial(vec![1, 1]), Monomial(vec![2, 0])]
        );
        assert!(monomials_of_degree(&vars, 3).is_empty());
    }

    #[test]
    fn homogeneity() {
        let vars = vec![Variable::poly("x", 2), Variable::poly("y", 4)];
        let x = IntPoly::var(2, 0);
        let y = IntPoly::var(2, 1);
        assert!(x.mul(&x, &vars).sub(&y).is_homogeneous(&vars));
        assert!(!x.add(&y).is_homogeneous(&vars));
    }
}
