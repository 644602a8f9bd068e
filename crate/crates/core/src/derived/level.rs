use std::collections::{BTreeMap, HashMap};

use crate::algebra::{monomials_of_degree, Field, Matrix, Monomial, PrimeField, Variable};
use crate::error::{Error, Result};

/// Sparse element of one level: monomial to nonzero coefficient in `F_p`.
pub type Chain = BTreeMap<Monomial, u64>;

/// `(r, p, alpha)` for the resolution of `F_p[x]/(x^{r+1})`, `|x| = alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResolutionParams {
    pub r: u32,
    pub p: u64,
    pub alpha: u32,
}

impl ResolutionParams {
    pub fn new(r: u32, p: u64, alpha: u32) -> Result<Self> {
        crate::loopcoh::TruncSpaceParams::new(r, p, alpha)?;
        Ok(ResolutionParams { r, p, alpha })
    }

    pub fn y_degree(&self) -> u32 {
        (self.r + 1) * self.alpha
    }

    /// Default internal cutoff `3((r+1) alpha - 1) + alpha`.
    pub fn default_cutoff(&self) -> u32 {
        3 * (self.y_degree() - 1) + self.alpha
    }
}

/// `F_p[x, y_1..y_q] (x) Lambda(dx, dy_1..dy_q)`, variables ordered
/// `x, y_1..y_q, dx, dy_1..dy_q`.
#[derive(Debug, Clone)]
pub struct ResolutionLevel {
    pub q: usize,
    pub params: ResolutionParams,
    pub cutoff: u32,
    vars: Vec<Variable>,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl ResolutionLevel {
    pub fn new(params: ResolutionParams, q: usize, cutoff: u32) -> Self {
        let a = params.alpha;
        let yd = params.y_degree();
        let mut vars = vec![Variable::poly("x", a)];
        vars.extend((1..=q).map(|j| Variable::poly(&format!("y{j}"), yd)));
        vars.push(Variable::exterior("dx", a - 1));
        vars.extend((1..=q).map(|j| Variable::exterior(&format!("dy{j}"), yd - 1)));
        let bases: Vec<Vec<Monomial>> = (0..=cutoff).map(|d| monomials_of_degree(&vars, d)).collect();
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect())
            .collect();
        ResolutionLevel {
            q,
            params,
            cutoff,
            vars,
            bases,
            index,
        }
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn x(&self) -> usize {
        0
    }

    pub fn y(&self, j: usize) -> usize {
        j
    }

    pub fn dx(&self) -> usize {
        self.q + 1
    }

    pub fn dy(&self, j: usize) -> usize {
        self.q + 1 + j
    }

    pub fn basis(&self, d: u32) -> &[Monomial] {
        self.bases.get(d as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim(&self, d: u32) -> usize {
        self.basis(d).len()
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.degree(&self.vars)
    }

    pub fn generator(&self, v: usize) -> Chain {
        single(Monomial::var(self.nvars(), v), 1)
    }

    pub fn one(&self) -> Chain {
        single(Monomial::one(self.nvars()), 1)
    }

    pub fn monomial(&self, exps: &[(usize, u32)]) -> Monomial {
        let mut e = vec![0; self.nvars()];
        for &(v, k) in exps {
            e[v] += k;
        }
        Monomial(e)
    }

    /// Coordinates of a homogeneous chain of degree `d`.
    pub fn vector(&self, c: &Chain, d: u32) -> Result<Vec<u64>> {
        let idx = self.index.get(d as usize).ok_or(Error::BeyondCutoff {
            degree: d as usize,
            cutoff: self.cutoff as usize,
        })?;
        let mut v = vec![0; idx.len()];
        for (m, x) in c {
            let k = idx.get(m).ok_or_else(|| {
                Error::Invalid(format!("chain term of degree {} in degree {d}", self.degree(m)))
            })?;
            v[*k] = *x;
        }
        Ok(v)
    }

    pub fn chain(&self, v: &[u64], d: u32) -> Chain {
        let mut c = Chain::new();
        for (m, x) in self.basis(d).iter().zip(v) {
            if *x != 0 {
                c.insert(m.clone(), *x);
            }
        }
        c
    }

    pub fn render(&self, c: &Chain) -> String {
        if c.is_empty() {
            return "0".to_string();
        }
        c.iter()
            .map(|(m, x)| {
                let name = m.render(&self.vars);
                if *x == 1 {
                    name
                } else {
                    format!("{x}*{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn single(m: Monomial, c: u64) -> Chain {
    let mut ch = Chain::new();
    if c != 0 {
        ch.insert(m, c);
    }
    ch
}

/// Field operations on sparse chains.
#[derive(Debug, Clone, Copy)]
pub struct ChainOps {
    pub field: PrimeField,
}

impl ChainOps {
    pub fn new(p: u64) -> Result<Self> {
        Ok(ChainOps {
            field: PrimeField::new(p)?,
        })
    }

    pub fn add_term(&self, c: &mut Chain, m: Monomial, x: u64) {
        let f = &self.field;
        let x = x % f.p();
        if x == 0 {
            return;
        }
        let sum = f.add(c.get(&m).unwrap_or(&0), &x);
        if sum == 0 {
            c.remove(&m);
        } else {
            c.insert(m, sum);
        }
    }

    pub fn add(&self, a: &Chain, b: &Chain) -> Chain {
        let mut out = a.clone();
        for (m, x) in b {
            self.add_term(&mut out, m.clone(), *x);
        }
        out
    }

    pub fn scale(&self, k: i64, a: &Chain) -> Chain {
        let k = self.field.from_i64(k);
        let mut out = Chain::new();
        for (m, x) in a {
            self.add_term(&mut out, m.clone(), self.field.mul(&k, x));
        }
        out
    }

    pub fn sub(&self, a: &Chain, b: &Chain) -> Chain {
        self.add(a, &self.scale(-1, b))
    }

    pub fn mul(&self, a: &Chain, b: &Chain, vars: &[Variable]) -> Chain {
        let f = &self.field;
        let mut out = Chain::new();
        for (ma, xa) in a {
            for (mb, xb) in b {
                if let Some((m, neg)) = ma.mul(mb, vars) {
                    let mut c = f.mul(xa, xb);
                    if neg {
                        c = f.neg(&c);
                    }
                    self.add_term(&mut out, m, c);
                }
            }
        }
        out
    }

    /// Algebra map sending variable `v` to `images[v]`.
    pub fn hom(&self, c: &Chain, images: &[Chain], target: &[Variable]) -> Chain {
        let mut out = Chain::new();
        for (m, x) in c {
            let mut acc = single(Monomial::one(target.len()), *x);
            for (v, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    acc = self.mul(&acc, &images[v], target);
                    if acc.is_empty() {
                        break;
                    }
                }
            }
            for (mm, xx) in acc {
                self.add_term(&mut out, mm, xx);
            }
        }
        out
    }

    /// Derivation of odd degree sending variable `v` to `images[v]`, with
    /// `D(ab) = D(a) b + (-1)^{|a|} a D(b)`.
    pub fn derivation(&self, c: &Chain, images: &[Chain], vars: &[Variable]) -> Chain {
        let n = vars.len();
        let mut out = Chain::new();
        for (m, x) in c {
            // expand the monomial into its ordered list of generators
            let gens: Vec<usize> = m
                .exponents()
                .iter()
                .enumerate()
                .flat_map(|(v, &e)| std::iter::repeat_n(v, e as usize))
                .collect();
            for k in 0..gens.len() {
                if images[gens[k]].is_empty() {
                    continue;
                }
                let mut prefix = vec![0u32; n];
                for &g in &gens[..k] {
                    prefix[g] += 1;
                }
                let mut suffix = vec![0u32; n];
                for &g in &gens[k + 1..] {
                    suffix[g] += 1;
                }
                let prefix = Monomial(prefix);
                let sign_odd = prefix.degree(vars) % 2 == 1;
                let term = self.mul(
                    &self.mul(&single(prefix, *x), &images[gens[k]], vars),
                    &single(Monomial(suffix), 1),
                    vars,
                );
                let term = if sign_odd { self.scale(-1, &term) } else { term };
                for (mm, xx) in term {
                    self.add_term(&mut out, mm, xx);
                }
            }
        }
        out
    }

    /// Matrix of a linear map given on basis monomials, from `src` degree
    /// `d_src` to `tgt` degree `d_tgt`.
    pub fn matrix<M>(
        &self,
        src: &ResolutionLevel,
        d_src: u32,
        tgt: &ResolutionLevel,
        d_tgt: u32,
        map: M,
    ) -> Result<Matrix<PrimeField>>
    where
        M: Fn(&Chain) -> Chain,
    {
        let columns: Vec<Vec<u64>> = src
            .basis(d_src)
            .iter()
            .map(|m| tgt.vector(&map(&single(m.clone(), 1)), d_tgt))
            .collect::<Result<_>>()?;
        Ok(Matrix::from_columns(self.field, tgt.dim(d_tgt), &columns))
    }
}
