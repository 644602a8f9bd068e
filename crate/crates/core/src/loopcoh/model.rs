use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::index_sets::IndexSet;
use super::TruncSpaceParams;
use crate::algebra::{binomial, binomial_mod, Field, FieldTag, Matrix, PrimeField};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LoopCase {
    /// `p` divides `r + 1`.
    Divisible,
    Coprime,
}

/// Basis monomials of `H^*(LX)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LoopBasis {
    /// `x^j (dx)^eps gamma_i(omega)`.
    Divided { j: u32, eps: u8, i: u64 },
    Unit,
    /// `b_0^{j-1} b_i`.
    B { i: u64, j: u32 },
    /// `b_0^{j-1} a_i`.
    A { i: u64, j: u32 },
}

impl LoopBasis {
    pub fn name(&self) -> String {
        match *self {
            LoopBasis::Divided { j, eps, i } => {
                let mut parts = Vec::new();
                match j {
                    0 => {}
                    1 => parts.push("x".to_string()),
                    _ => parts.push(format!("x^{j}")),
                }
                if eps == 1 {
                    parts.push("dx".to_string());
                }
                if i > 0 {
                    parts.push(format!("g{i}"));
                }
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            }
            LoopBasis::Unit => "1".to_string(),
            LoopBasis::B { i, j } => with_b0_power(j, format!("b{i}")),
            LoopBasis::A { i, j } => with_b0_power(j, format!("a{i}")),
        }
    }
}

fn with_b0_power(j: u32, tail: String) -> String {
    match j {
        1 => tail,
        2 => format!("b0*{tail}"),
        _ => format!("b0^{}*{tail}", j - 1),
    }
}

/// Explicit model of `H^*(LX)` with the action differential `d` of degree -1,
/// over `F_p` or over `Q`.
#[derive(Debug, Clone)]
pub struct LoopAlgebraModel {
    pub r: u32,
    pub alpha: u32,
    pub field: FieldTag,
    pub case: LoopCase,
    pub cutoff: u64,
    basis: Vec<Vec<LoopBasis>>,
    position: HashMap<LoopBasis, (u64, usize)>,
}

impl LoopAlgebraModel {
    /// The mod-p model for `params`, with every degree up to `cutoff`.
    pub fn new(params: TruncSpaceParams, cutoff: u64) -> Self {
        let case = if params.divisible() {
            LoopCase::Divisible
        } else {
            LoopCase::Coprime
        };
        Self::build(params.r, params.alpha, FieldTag::PrimeField(params.p), case, cutoff)
    }

    pub(crate) fn build(r: u32, alpha: u32, field: FieldTag, case: LoopCase, cutoff: u64) -> Self {
        let rho = (r as u64 + 1) * alpha as u64 - 2;
        let a = alpha as u64;
        let mut elems: Vec<(u64, LoopBasis)> = Vec::new();
        match case {
            LoopCase::Divisible => {
                for i in 0..=cutoff / rho {
                    for j in 0..=r {
                        for eps in 0..=1u8 {
                            let deg = a * j as u64 + eps as u64 * (a - 1) + rho * i;
                            elems.push((deg, LoopBasis::Divided { j, eps, i }));
                        }
                    }
                }
            }
            LoopCase::Coprime => {
                elems.push((0, LoopBasis::Unit));
                for i in 0..=cutoff / rho {
                    for j in 1..=r {
                        let deg = rho * i + a * j as u64;
                        elems.push((deg, LoopBasis::B { i, j }));
                        elems.push((deg - 1, LoopBasis::A { i, j }));
                    }
                }
            }
        }
        let mut basis = vec![Vec::new(); cutoff as usize + 1];
        for (deg, b) in elems {
            if deg <= cutoff {
                basis[deg as usize].push(b);
            }
        }
        let mut position = HashMap::new();
        for (deg, list) in basis.iter_mut().enumerate() {
            list.sort();
            for (k, b) in list.iter().enumerate() {
                position.insert(*b, (deg as u64, k));
            }
        }
        LoopAlgebraModel {
            r,
            alpha,
            field,
            case,
            cutoff,
            basis,
            position,
        }
    }

    pub fn rho(&self) -> u64 {
        (self.r as u64 + 1) * self.alpha as u64 - 2
    }

    pub fn basis(&self, degree: u64) -> &[LoopBasis] {
        self.basis
            .get(degree as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn dim(&self, degree: u64) -> usize {
        self.basis(degree).len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn degree_of(&self, b: &LoopBasis) -> Option<u64> {
        self.position.get(b).map(|(d, _)| *d)
    }

    pub fn index_of(&self, b: &LoopBasis) -> Option<usize> {
        self.position.get(b).map(|(_, k)| *k)
    }

    fn reduce(&self, c: i64) -> i64 {
        match self.field {
            FieldTag::PrimeField(p) => c.rem_euclid(p as i64),
            FieldTag::Rationals => c,
        }
    }

    fn choose(&self, n: u64, k: u64) -> i64 {
        match self.field {
            FieldTag::PrimeField(p) => binomial_mod(n, k, p) as i64,
            FieldTag::Rationals => binomial(n, k),
        }
    }

    /// `d(b)` as a scalar multiple of a basis element, `None` when zero.
    pub fn differential(&self, b: &LoopBasis) -> Option<(i64, LoopBasis)> {
        let (c, target) = match *b {
            LoopBasis::Divided { j, eps: 0, i } if j > 0 => {
                (j as i64, LoopBasis::Divided { j: j - 1, eps: 1, i })
            }
            LoopBasis::B { i, j } => (
                (self.r as i64 + 1) * i as i64 + j as i64,
                LoopBasis::A { i, j },
            ),
            _ => return None,
        };
        let c = self.reduce(c);
        (c != 0).then_some((c, target))
    }

    /// Product of two basis elements as a scalar multiple of a basis element.
    pub fn product(&self, a: &LoopBasis, b: &LoopBasis) -> Option<(i64, LoopBasis)> {
        let (c, m) = match (*a, *b) {
            (LoopBasis::Unit, other) | (other, LoopBasis::Unit) => (1, other),
            (
                LoopBasis::Divided { j: j1, eps: e1, i: i1 },
                LoopBasis::Divided { j: j2, eps: e2, i: i2 },
            ) => {
                if e1 + e2 > 1 || j1 + j2 > self.r {
                    return None;
                }
                (
                    self.choose(i1 + i2, i1),
                    LoopBasis::Divided {
                        j: j1 + j2,
                        eps: e1 + e2,
                        i: i1 + i2,
                    },
                )
            }
            (LoopBasis::A { .. }, LoopBasis::A { .. }) => return None,
            (LoopBasis::B { i: i1, j: j1 }, LoopBasis::B { i: i2, j: j2 }) => {
                if j1 + j2 > self.r {
                    return None;
                }
                let c = self.choose(i1 + i2, i1);
                (c, LoopBasis::B { i: i1 + i2, j: j1 + j2 })
            }
            (LoopBasis::B { i: i1, j: j1 }, LoopBasis::A { i: i2, j: j2 })
            | (LoopBasis::A { i: i2, j: j2 }, LoopBasis::B { i: i1, j: j1 }) => {
                if j1 + j2 > self.r {
                    return None;
                }
                let c = self.choose(i1 + i2, i1);
                (c, LoopBasis::A { i: i1 + i2, j: j1 + j2 })
            }
            _ => return None,
        };
        let c = self.reduce(c);
        if c == 0 {
            return None;
        }
        self.degree_of(&m).map(|_| (c, m))
    }

    /// Matrix of `d: H^k -> H^{k-1}` (rows index degree `k - 1`).
    pub fn action_matrix<F: Field>(&self, field: &F, k: u64) -> Matrix<F> {
        let src = self.basis(k);
        let tgt = if k == 0 { &[][..] } else { self.basis(k - 1) };
        let mut m = Matrix::zeros(field.clone(), tgt.len(), src.len());
        for (col, b) in src.iter().enumerate() {
            if let Some((c, t)) = self.differential(b) {
                let row = self.index_of(&t).expect("differential stays below the cutoff");
                m.set(row, col, field.from_i64(c));
            }
        }
        m
    }

    /// Rank of `d: H^k -> H^{k-1}` over the model's field.
    pub fn action_rank(&self, k: u64) -> usize {
        match self.field {
            FieldTag::PrimeField(p) => {
                let f = PrimeField::new(p).expect("model field is prime");
                self.action_matrix(&f, k).rank()
            }
            FieldTag::Rationals => self.action_matrix(&crate::algebra::Rationals, k).rank(),
        }
    }
}

/// Kernel, image and cokernel dimensions of `d: H^{2k} -> H^{2k-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionCounts {
    pub kernel: usize,
    pub image: usize,
    pub cokernel: usize,
}

/// Counts computed by rank from the explicit model.
pub fn action_counts(model: &LoopAlgebraModel, k: u64) -> Result<ActionCounts> {
    if k == 0 || 2 * k > model.cutoff {
        return Err(Error::BeyondCutoff {
            degree: 2 * k as usize,
            cutoff: model.cutoff as usize,
        });
    }
    let rank = model.action_rank(2 * k);
    Ok(ActionCounts {
        kernel: model.dim(2 * k) - rank,
        image: rank,
        cokernel: model.dim(2 * k - 1) - rank,
    })
}

/// Counts predicted from the index sets alone.
pub fn predicted_counts(params: TruncSpaceParams, k: u64) -> ActionCounts {
    let deg = 2 * k;
    let in_free = IndexSet::free(params).contains(deg);
    let in_torsion = IndexSet::torsion(params).contains(deg);
    let rho = params.rho();
    let cokernel = if params.divisible() {
        (in_free && !deg.is_multiple_of(rho)) || (k > 1 && deg % rho == 2 % rho)
    } else {
        in_free
    };
    ActionCounts {
        kernel: usize::from(in_free),
        image: usize::from(in_torsion),
        cokernel: usize::from(cokernel),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn model(r: u32, p: u64, alpha: u32, cutoff: u64) -> LoopAlgebraModel {
        LoopAlgebraModel::new(TruncSpaceParams::new(r, p, alpha).unwrap(), cutoff)
    }

    #[test]
    fn two_sphere_mod_two() {
        let m = model(1, 2, 2, 8);
        assert_eq!(m.case, LoopCase::Divisible);
        assert_eq!(m.dims(), vec![1, 1, 2, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn coprime_differential_example() {
        let m = model(2, 2, 2, 20);
        let b0b1 = LoopBasis::B { i: 1, j: 2 };
        assert_eq!(m.degree_of(&b0b1), Some(8));
        assert_eq!(m.differential(&b0b1), Some((1, LoopBasis::A { i: 1, j: 2 })));
    }

    #[test]
    fn even_and_odd_dims_agree_in_coprime_case() {
        for (r, p) in [(2, 2), (1, 3), (3, 3), (4, 3)] {
            let m = model(r, p, 2, 60);
            for k in 1..30 {
                assert_eq!(m.dim(2 * k), m.dim(2 * k - 1));
            }
        }
    }

    #[test]
    fn d_squared_vanishes() {
        for (r, p, alpha) in [(1, 2, 2), (2, 3, 2), (2, 2, 2), (3, 2, 4)] {
            let m = model(r, p, alpha, 50);
            for deg in 0..=m.cutoff {
                for b in m.basis(deg) {
                    if let Some((_, t)) = m.differential(b) {
                        assert!(m.differential(&t).is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn counting_items_match_ranks() {
        for r in 1..=5 {
            for p in [2, 3, 5, 7] {
                let prm = TruncSpaceParams::projective(r, p).unwrap();
                let m = LoopAlgebraModel::new(prm, 4 * prm.rho() * p + 2);
                for k in 1..=(2 * prm.rho() * p) {
                    assert_eq!(
                        action_counts(&m, k).unwrap(),
                        predicted_counts(prm, k),
                        "r={r} p={p} k={k}"
                    );
                }
            }
        }
    }

    fn apply_d(m: &LoopAlgebraModel, terms: &[(i64, LoopBasis)]) -> HashMap<LoopBasis, i64> {
        let mut out = HashMap::new();
        for (c, b) in terms {
            if let Some((e, t)) = m.differential(b) {
                *out.entry(t).or_insert(0) += c * e;
            }
        }
        out
    }

    fn normalize(m: &LoopAlgebraModel, v: HashMap<LoopBasis, i64>) -> Vec<(LoopBasis, i64)> {
        let mut out: Vec<_> = v
            .into_iter()
            .map(|(b, c)| (b, m.reduce(c)))
            .filter(|(_, c)| *c != 0)
            .collect();
        out.sort();
        out
    }

    proptest! {
        #[test]
        fn d_is_a_derivation(r in 1u32..5, pi in 0usize..4, x in 0usize..40, y in 0usize..40) {
            let p = [2u64, 3, 5, 7][pi];
            let m = model(r, p, 2, 80);
            let all: Vec<LoopBasis> = (0..=80).flat_map(|d| m.basis(d).to_vec()).collect();
            let a = all[x % all.len()];
            let b = all[y % all.len()];
            let da = m.degree_of(&a).unwrap();
            let db = m.degree_of(&b).unwrap();
            prop_assume!(da + db <= 80);
            let lhs = match m.product(&a, &b) {
                Some((c, ab)) => apply_d(&m, &[(c, ab)]),
                None => HashMap::new(),
            };
            let mut rhs: HashMap<LoopBasis, i64> = HashMap::new();
            if let Some((c, t)) = m.differential(&a) {
                if let Some((e, prod)) = m.product(&t, &b) {
                    *rhs.entry(prod).or_insert(0) += c * e;
                }
            }
            if let Some((c, t)) = m.differential(&b) {
                if let Some((e, prod)) = m.product(&a, &t) {
                    let sign = if da % 2 == 1 { -1 } else { 1 };
                    *rhs.entry(prod).or_insert(0) += sign * c * e;
                }
            }
            prop_assert_eq!(normalize(&m, lhs), normalize(&m, rhs));
        }

        #[test]
        fn products_are_associative(r in 1u32..4, pi in 0usize..3, x in 0usize..30, y in 0usize..30, z in 0usize..30) {
            let p = [2u64, 3, 5][pi];
            let m = model(r, p, 2, 60);
            let all: Vec<LoopBasis> = (0..=60).flat_map(|d| m.basis(d).to_vec()).collect();
            let (a, b, c) = (all[x % all.len()], all[y % all.len()], all[z % all.len()]);
            let deg: u64 = [a, b, c].iter().map(|e| m.degree_of(e).unwrap()).sum();
            prop_assume!(deg <= 60);
            let left = m.product(&a, &b).and_then(|(s, ab)| m.product(&ab, &c).map(|(t, e)| (m.reduce(s * t), e)));
            let right = m.product(&b, &c).and_then(|(s, bc)| m.product(&a, &bc).map(|(t, e)| (m.reduce(s * t), e)));
            prop_assert_eq!(left, right);
        }
    }
}
