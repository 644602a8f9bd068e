use serde::{Deserialize, Serialize};

use super::page::BigradedPage;
use crate::algebra::binomial_mod;
use crate::error::Result;
use crate::loopcoh::{
    main_poincare, IndexKind, IndexSet, LoopAlgebraModel, LoopBasis, TruncSpaceParams,
};
use crate::series::{series_of_index_set, PowerSeries};

/// `E_2 = F_p[u] (x) H^*(LX)` with `|u| = (2, 0)`, to total degree `cutoff`.
pub fn serre_e2(params: TruncSpaceParams, cutoff: u64) -> BigradedPage {
    let model = LoopAlgebraModel::new(params, cutoff);
    let mut page = BigradedPage::new(2, cutoff);
    for s in (0..=cutoff).step_by(2) {
        for t in 0..=cutoff - s {
            page.add(s, t, model.dim(t), None);
        }
    }
    page
}

/// `d_2(u^a y) = u^{a+1} dy`: the target bidegree and basis element with its
/// coefficient, or `None` when `dy = 0`.
pub fn serre_d2(
    model: &LoopAlgebraModel,
    s: u64,
    y: &LoopBasis,
) -> Option<(i64, (u64, u64), LoopBasis)> {
    let t = model.degree_of(y)?;
    let (c, dy) = model.differential(y)?;
    Some((c, (s + 2, t - 1), dy))
}

/// Ranks of `d: H^t -> H^{t-1}` for `t` in `0..=cutoff + 1`.
fn action_ranks(model: &LoopAlgebraModel, cutoff: u64) -> Vec<usize> {
    (0..=cutoff + 1).map(|t| model.action_rank(t)).collect()
}

/// `E_3` from the ranks of `d_2`: column 0 is `ker d`, columns `s >= 2` are
/// the homology `H(d)`.
pub fn serre_e3(params: TruncSpaceParams, cutoff: u64) -> BigradedPage {
    let model = LoopAlgebraModel::new(params, cutoff + 1);
    let ranks = action_ranks(&model, cutoff);
    let mut page = BigradedPage::new(3, cutoff);
    for t in 0..=cutoff {
        let ker = model.dim(t) - ranks[t as usize];
        page.add(0, t, ker, None);
        let homology = ker - ranks[t as usize + 1];
        for s in (2..=cutoff - t).step_by(2) {
            page.add(s, t, homology, None);
        }
    }
    page
}

/// Series of `im(d)` inside column 0 of `E_3`, by degree.
pub fn image_series(params: TruncSpaceParams, cutoff: u64) -> PowerSeries {
    let model = LoopAlgebraModel::new(params, cutoff + 1);
    let dims: Vec<usize> = (0..=cutoff).map(|t| model.action_rank(t + 1)).collect();
    PowerSeries::from_dims(&dims)
}

/// Generators of the `E_3` presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum E3Generator {
    U,
    Phi,
    Q,
    Delta(u32),
    Gamma(u64),
    V { i: u64, k: u32 },
    W { i: u64, k: u32 },
    T { i: u64, h: u32 },
}

impl E3Generator {
    pub fn name(&self) -> String {
        match *self {
            E3Generator::U => "u".into(),
            E3Generator::Phi => "phi".into(),
            E3Generator::Q => "q".into(),
            E3Generator::Delta(j) => format!("delta{j}"),
            E3Generator::Gamma(i) => format!("gamma{i}"),
            E3Generator::V { i, k } => format!("v{i}^({k})"),
            E3Generator::W { i, k } => format!("w{i}^({k})"),
            E3Generator::T { i, h } => format!("T{i}^({h})"),
        }
    }
}

/// A normal-form basis monomial of the presented algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum E3Monomial {
    /// `u^a phi^b q^c gamma_i`, or `phi^b delta_j gamma_i` when `delta` is set.
    Divisible {
        a: u64,
        b: u32,
        q: bool,
        delta: Option<u32>,
        i: u64,
    },
    /// `u^a` times at most one of `v`, `w`, `T` (never `u T`).
    Coprime { a: u64, g: Option<E3Generator> },
}

/// The presentation of `E_3` as an algebra over `F_p`: generators with
/// bidegrees, relations applied as a rewriting system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct E3Presentation {
    pub params: TruncSpaceParams,
    pub cutoff: u64,
    pub generators: Vec<(E3Generator, (u64, u64))>,
}

impl E3Presentation {
    pub fn new(params: TruncSpaceParams, cutoff: u64) -> Self {
        let TruncSpaceParams { r, p, alpha } = params;
        let a = alpha as u64;
        let rho = params.rho();
        let mut generators = vec![(E3Generator::U, (2, 0))];
        if params.divisible() {
            generators.push((E3Generator::Phi, (0, p * a)));
            generators.push((E3Generator::Q, (0, p * a - 1)));
            for j in 0..=(p as u32).saturating_sub(2) {
                generators.push((E3Generator::Delta(j), (0, j as u64 * a + a - 1)));
            }
            for i in 1..=cutoff / rho {
                generators.push((E3Generator::Gamma(i), (0, rho * i)));
            }
        } else {
            for i in 0..=cutoff / rho {
                for k in 1..=r {
                    let deg = rho * i + a * k as u64;
                    if ((r as u64 + 1) * i + k as u64).is_multiple_of(p) {
                        generators.push((E3Generator::V { i, k }, (0, deg)));
                        generators.push((E3Generator::W { i, k }, (0, deg - 1)));
                    } else {
                        generators.push((E3Generator::T { i, h: k }, (0, deg - 1)));
                    }
                }
            }
        }
        generators.retain(|(_, (s, t))| s + t <= cutoff);
        E3Presentation {
            params,
            cutoff,
            generators,
        }
    }

    fn phi_height(&self) -> u32 {
        ((self.params.r as u64 + 1) / self.params.p) as u32
    }

    pub fn generator_bidegree(&self, g: E3Generator) -> (u64, u64) {
        let a = self.params.alpha as u64;
        let rho = self.params.rho();
        let p = self.params.p;
        match g {
            E3Generator::U => (2, 0),
            E3Generator::Phi => (0, p * a),
            E3Generator::Q => (0, p * a - 1),
            E3Generator::Delta(j) => (0, j as u64 * a + a - 1),
            E3Generator::Gamma(i) => (0, rho * i),
            E3Generator::V { i, k } => (0, rho * i + a * k as u64),
            E3Generator::W { i, k } | E3Generator::T { i, h: k } => {
                (0, rho * i + a * k as u64 - 1)
            }
        }
    }

    pub fn bidegree(&self, m: &E3Monomial) -> (u64, u64) {
        let (mut s, mut t) = (0, 0);
        let mut add = |g: E3Generator, n: u64| {
            let (gs, gt) = self.generator_bidegree(g);
            s += gs * n;
            t += gt * n;
        };
        match *m {
            E3Monomial::Divisible { a, b, q, delta, i } => {
                add(E3Generator::U, a);
                add(E3Generator::Phi, b as u64);
                add(E3Generator::Q, q as u64);
                if let Some(j) = delta {
                    add(E3Generator::Delta(j), 1);
                }
                add(E3Generator::Gamma(i), u64::from(i > 0));
            }
            E3Monomial::Coprime { a, g } => {
                add(E3Generator::U, a);
                if let Some(g) = g {
                    add(g, 1);
                }
            }
        }
        (s, t)
    }

    pub fn one(&self) -> E3Monomial {
        if self.params.divisible() {
            E3Monomial::Divisible {
                a: 0,
                b: 0,
                q: false,
                delta: None,
                i: 0,
            }
        } else {
            E3Monomial::Coprime { a: 0, g: None }
        }
    }

    /// The generator as a normal-form monomial.
    pub fn monomial_of(&self, g: E3Generator) -> E3Monomial {
        match (self.one(), g) {
            (E3Monomial::Divisible { .. }, g) => {
                let (mut a, mut b, mut q, mut delta, mut i) = (0, 0, false, None, 0);
                match g {
                    E3Generator::U => a = 1,
                    E3Generator::Phi => b = 1,
                    E3Generator::Q => q = true,
                    E3Generator::Delta(j) => delta = Some(j),
                    E3Generator::Gamma(k) => i = k,
                    _ => panic!("{} is not a generator here", g.name()),
                }
                E3Monomial::Divisible { a, b, q, delta, i }
            }
            (E3Monomial::Coprime { .. }, E3Generator::U) => E3Monomial::Coprime { a: 1, g: None },
            (E3Monomial::Coprime { .. }, g) => E3Monomial::Coprime { a: 0, g: Some(g) },
        }
    }

    /// Product of two normal forms reduced by the relations: a coefficient
    /// in `F_p` and a normal form, or `None` for zero. Signs are not
    /// tracked since every product of two odd generators vanishes.
    pub fn multiply(&self, x: &E3Monomial, y: &E3Monomial) -> Option<(u64, E3Monomial)> {
        let p = self.params.p;
        let r = self.params.r;
        match (*x, *y) {
            (
                E3Monomial::Divisible { a: a1, b: b1, q: q1, delta: d1, i: i1 },
                E3Monomial::Divisible { a: a2, b: b2, q: q2, delta: d2, i: i2 },
            ) => {
                let (a, b) = (a1 + a2, b1 + b2);
                if b >= self.phi_height() || (q1 && q2) {
                    return None;
                }
                let q = q1 || q2;
                let delta = match (d1, d2) {
                    (Some(_), Some(_)) => return None,
                    (d, None) | (None, d) => d,
                };
                if delta.is_some() && (a > 0 || q) {
                    return None;
                }
                let c = binomial_mod(i1 + i2, i1, p);
                (c != 0).then_some((c, E3Monomial::Divisible { a, b, q, delta, i: i1 + i2 }))
            }
            (E3Monomial::Coprime { a: a1, g: g1 }, E3Monomial::Coprime { a: a2, g: g2 }) => {
                let a = a1 + a2;
                let (c, g) = match (g1, g2) {
                    (None, g) | (g, None) => (1, g),
                    (Some(g1), Some(g2)) => {
                        let (c, g) = coprime_product(g1, g2, r, p)?;
                        (c, Some(g))
                    }
                };
                if a > 0 && matches!(g, Some(E3Generator::T { .. })) {
                    return None;
                }
                Some((c, E3Monomial::Coprime { a, g }))
            }
            _ => panic!("monomials from different cases"),
        }
    }

    /// The normal-form monomials with `s + t <= cutoff`.
    pub fn basis(&self) -> Vec<E3Monomial> {
        let n = self.cutoff;
        let mut out = Vec::new();
        // generators other than u, phi and the divided powers appear at most once
        let single: Vec<E3Generator> = self
            .generators
            .iter()
            .map(|(g, _)| *g)
            .filter(|g| !matches!(g, E3Generator::U | E3Generator::Phi | E3Generator::Gamma(_)))
            .collect();
        if self.params.divisible() {
            let rho = self.params.rho();
            for i in 0..=n / rho {
                for b in 0..self.phi_height() {
                    for a in 0..=n / 2 {
                        for q in [false, true] {
                            out.push(E3Monomial::Divisible { a, b, q, delta: None, i });
                        }
                    }
                    for g in &single {
                        if let E3Generator::Delta(j) = g {
                            out.push(E3Monomial::Divisible {
                                a: 0,
                                b,
                                q: false,
                                delta: Some(*j),
                                i,
                            });
                        }
                    }
                }
            }
        } else {
            for a in 0..=n / 2 {
                out.push(E3Monomial::Coprime { a, g: None });
                for g in &single {
                    if a == 0 || !matches!(g, E3Generator::T { .. }) {
                        out.push(E3Monomial::Coprime { a, g: Some(*g) });
                    }
                }
            }
        }
        out.retain(|m| {
            let (s, t) = self.bidegree(m);
            s + t <= n
        });
        out.sort();
        out.dedup();
        out
    }

    pub fn name(&self, m: &E3Monomial) -> String {
        let mut parts = Vec::new();
        let mut power = |name: &str, k: u64| match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{k}")),
        };
        match *m {
            E3Monomial::Divisible { a, b, q, delta, i } => {
                power("u", a);
                power("phi", b as u64);
                power("q", q as u64);
                if let Some(j) = delta {
                    power(&format!("delta{j}"), 1);
                }
                if i > 0 {
                    power(&format!("gamma{i}"), 1);
                }
            }
            E3Monomial::Coprime { a, g } => {
                power("u", a);
                if let Some(g) = g {
                    power(&g.name(), 1);
                }
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// The page spanned by the normal forms.
    pub fn page(&self, with_labels: bool) -> BigradedPage {
        let mut page = BigradedPage::new(3, self.cutoff);
        for m in self.basis() {
            let (s, t) = self.bidegree(&m);
            page.add(s, t, 1, with_labels.then(|| self.name(&m)));
        }
        page
    }

    /// Associativity and commutativity of the rewriting on all triples of
    /// basis monomials with total degree at most `bound`.
    pub fn check_algebra(&self, bound: u64) -> Vec<String> {
        let small: Vec<E3Monomial> = self
            .basis()
            .into_iter()
            .filter(|m| {
                let (s, t) = self.bidegree(m);
                s + t <= bound
            })
            .collect();
        let p = self.params.p;
        let mut failures = Vec::new();
        let times = |c: u64, m: Option<(u64, E3Monomial)>, z: &E3Monomial| {
            m.and_then(|(c1, m)| {
                self.multiply(&m, z)
                    .map(|(c2, m)| (c * c1 % p * c2 % p, m))
            })
            .filter(|(c, _)| *c != 0)
        };
        for x in &small {
            for y in &small {
                let xy = self.multiply(x, y);
                if xy != self.multiply(y, x) {
                    failures.push(format!("{} {} do not commute", self.name(x), self.name(y)));
                }
                if let Some((_, m)) = xy {
                    let (s, t) = self.bidegree(&m);
                    let (sx, tx) = self.bidegree(x);
                    let (sy, ty) = self.bidegree(y);
                    if (s, t) != (sx + sy, tx + ty) {
                        failures.push(format!("{} {} not bigraded", self.name(x), self.name(y)));
                    }
                }
                for z in &small {
                    let left = times(1, xy, z);
                    let right = self
                        .multiply(y, z)
                        .and_then(|(c, yz)| self.multiply(x, &yz).map(|(c2, m)| (c * c2 % p, m)))
                        .filter(|(c, _)| *c != 0);
                    if left != right {
                        failures.push(format!(
                            "({} {}) {} is not associative",
                            self.name(x),
                            self.name(y),
                            self.name(z)
                        ));
                    }
                }
            }
        }
        failures
    }
}

fn epsilon(r: u32, s: u32) -> bool {
    (1..=r).contains(&s)
}

fn coprime_product(g1: E3Generator, g2: E3Generator, r: u32, p: u64) -> Option<(u64, E3Generator)> {
    use E3Generator::*;
    let (v, other) = match (g1, g2) {
        (V { .. }, _) => (g1, g2),
        (_, V { .. }) => (g2, g1),
        _ => return None,
    };
    let V { i, k } = v else { unreachable!() };
    let (j, l, make): (u64, u32, fn(u64, u32) -> E3Generator) = match other {
        V { i, k } => (i, k, |i, k| V { i, k }),
        W { i, k } => (i, k, |i, k| W { i, k }),
        T { i, h } => (i, h, |i, h| T { i, h }),
        _ => return None,
    };
    if !epsilon(r, k + l) {
        return None;
    }
    let c = binomial_mod(i + j, i, p);
    (c != 0).then(|| (c, make(i + j, k + l)))
}

/// The closed-form Poincaré series of `E_3`, expanded to `cutoff`.
pub fn e3_closed_form(params: TruncSpaceParams, cutoff: usize) -> PowerSeries {
    let TruncSpaceParams { r, p, alpha } = params;
    let (a, p) = (alpha as usize, p as usize);
    let n = cutoff;
    let mono = |k: usize, c: i64| PowerSeries::monomial(k, c, n);
    if params.divisible() {
        let first = mono(0, 1).add(&mono(p * a - 1, 1)).div_one_minus(2);
        let second = mono(a - 1, 1).sub(&mono(p * a - 1, 1)).div_one_minus(a);
        first
            .add(&second)
            .mul(&mono(0, 1).sub(&mono((r as usize + 1) * a, 1)))
            .div_one_minus(p * a)
            .div_one_minus(params.rho() as usize)
    } else {
        let free = series_of_index_set(&IndexSet::free(params), n + 1);
        let torsion = series_of_index_set(&IndexSet::torsion(params), n + 1);
        mono(0, 1)
            .add(&free.truncate(n))
            .add(&free.div_t())
            .div_one_minus(2)
            .add(&torsion.div_t())
    }
}

/// `E_3` computed both ways, with the comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreReport {
    pub params: TruncSpaceParams,
    pub cutoff: u64,
    /// Bidegrees `(s, t, by rank, by presentation)` that disagree.
    pub presentation_mismatches: Vec<(u64, u64, usize, usize)>,
    /// Total degrees where the rank page differs from the closed form.
    pub closed_form_mismatches: Vec<usize>,
    /// Degrees where `im(d)` differs from the shifted torsion index set.
    pub image_mismatches: Vec<usize>,
    /// Degrees where `E_3` differs from `P_{r,p}`; only for `alpha = 2`.
    pub collapse_mismatches: Option<Vec<usize>>,
}

impl SerreReport {
    pub fn passes(&self) -> bool {
        self.presentation_mismatches.is_empty()
            && self.closed_form_mismatches.is_empty()
            && self.image_mismatches.is_empty()
            && self.collapse_mismatches.as_ref().is_none_or(Vec::is_empty)
    }
}

pub fn serre_report(params: TruncSpaceParams, cutoff: u64) -> Result<SerreReport> {
    let by_rank = serre_e3(params, cutoff);
    let by_presentation = E3Presentation::new(params, cutoff).page(false);
    let total = by_rank.total_series();
    let n = cutoff as usize;
    let torsion = IndexSet::torsion(params);
    let image = image_series(params, cutoff);
    let image_mismatches = (0..=n)
        .filter(|&t| image.coeff_i64(t) != i64::from(torsion.contains(t as u64 + 1)))
        .collect();
    let collapse_mismatches = if params.alpha == 2 {
        Some(total.mismatches(&main_poincare(params.r, params.p, n)?))
    } else {
        None
    };
    Ok(SerreReport {
        params,
        cutoff,
        presentation_mismatches: by_rank.differences(&by_presentation),
        closed_form_mismatches: total.mismatches(&e3_closed_form(params, n)),
        image_mismatches,
        collapse_mismatches,
    })
}

/// `E_3 = E_infinity`: the total series of `E_3` equals `P_{r,p}` up to
/// `cutoff`.
pub fn serre_collapse_check(r: u32, p: u64, cutoff: u64) -> Result<bool> {
    let params = TruncSpaceParams::projective(r, p)?;
    let total = serre_e3(params, cutoff).total_series();
    Ok(total.mismatches(&main_poincare(r, p, cutoff as usize)?).is_empty())
}

/// The two index-set series identities for `alpha = 2`: the sum of the
/// free and torsion series, and the reassembly of `P_{r,p}` from the
/// module generators. Returns the names of the failing identities.
pub fn index_series_identities(r: u32, p: u64, cutoff: usize) -> Result<Vec<String>> {
    let params = TruncSpaceParams::projective(r, p)?;
    let n = cutoff;
    let free = series_of_index_set(&IndexSet::free(params), n + 1);
    let torsion = series_of_index_set(&IndexSet::torsion(params), n + 1);
    let prime = series_of_index_set(&IndexSet::new(IndexKind::IFPrime, params)?, n + 1);
    let mut failures = Vec::new();

    let two_r = 2 * r as usize;
    let mut rhs = PowerSeries::monomial(2, 1, n).div_one_minus(2);
    if params.divisible() {
        rhs = rhs.add(&PowerSeries::monomial(two_r, 1, n).div_one_minus(two_r));
    }
    if !free.truncate(n).add(&torsion.truncate(n)).mismatches(&rhs).is_empty() {
        failures.push("free plus torsion index series".to_string());
    }

    let reassembled = PowerSeries::one(n)
        .add(&free.truncate(n))
        .add(&prime.div_t())
        .div_one_minus(2)
        .add(&torsion.div_t());
    if !reassembled.mismatches(&main_poincare(r, p, n)?).is_empty() {
        failures.push("reassembly of P_{r,p} from the generators".to_string());
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: u32, p: u64) -> TruncSpaceParams {
        TruncSpaceParams::projective(r, p).unwrap()
    }

    #[test]
    fn d2_lands_in_filtration_two() {
        let pr = params(2, 2);
        let model = LoopAlgebraModel::new(pr, 20);
        let b = LoopBasis::B { i: 1, j: 2 };
        let (c, (s, t), dy) = serre_d2(&model, 0, &b).unwrap();
        assert_eq!((s, t), (2, model.degree_of(&b).unwrap() - 1));
        assert_eq!((c, dy), (1, LoopBasis::A { i: 1, j: 2 }));
        let (_, (s, _), _) = serre_d2(&model, 4, &b).unwrap();
        assert_eq!(s, 6);
        // (r + 1) i + j = 4 vanishes mod 2
        assert!(serre_d2(&model, 0, &LoopBasis::B { i: 1, j: 1 }).is_none());
    }

    #[test]
    fn collapse_examples() {
        for (r, p) in [(1, 2), (2, 3), (2, 2)] {
            let n = params(r, p).default_cutoff();
            assert!(serre_collapse_check(r, p, n).unwrap());
        }
    }

    #[test]
    fn both_paths_and_closed_forms_agree() {
        for r in 1..=4 {
            for p in [2, 3, 5] {
                for alpha in [2, 4] {
                    let pr = TruncSpaceParams::new(r, p, alpha).unwrap();
                    let report = serre_report(pr, pr.default_cutoff()).unwrap();
                    assert!(report.passes(), "{report:?}");
                }
            }
        }
    }

    #[test]
    fn presentation_is_an_algebra() {
        for (r, p) in [(1, 2), (2, 2), (2, 3), (3, 2), (4, 3), (5, 3)] {
            let pres = E3Presentation::new(params(r, p), 40);
            let failures = pres.check_algebra(24);
            assert!(failures.is_empty(), "{failures:?}");
        }
    }

    #[test]
    fn index_identities_hold() {
        for r in 1..=6 {
            for p in [2, 3, 5, 7] {
                let n = params(r, p).default_cutoff() as usize;
                let f = index_series_identities(r, p, n).unwrap();
                assert!(f.is_empty(), "{r} {p} {f:?}");
            }
        }
    }

    #[test]
    fn projective_line_mod_two_page() {
        let page = serre_e3(params(1, 2), 6);
        // column 0 is ker d: 1, x, dx g_i, g_i and x dx g_i
        assert_eq!(page.dim(0, 0), 1);
        assert_eq!(page.dim(2, 0), 1);
        assert_eq!(page.total_series().coefficient_line(), "1 1 2 2 3 3 4");
    }
}
