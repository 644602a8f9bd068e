//! Brute-force derived functors: the simplicial resolution of a truncated
//! polynomial algebra by polynomial algebras, its levelwise de Rham algebras,
//! normalized chains and their homology over `F_p`.

pub mod homology;
pub mod level;
pub mod resolution;
pub mod shuffle;

use serde::{Deserialize, Serialize};

pub use homology::{closed_form_classes, closed_form_dim, BidegreeCell, BidegreeHomology, DerivedComplex};
pub use level::{Chain, ChainOps, ResolutionLevel, ResolutionParams};
pub use resolution::SimplicialResolution;
pub use shuffle::{shuffle_product, shuffles};

use crate::algebra::binomial_mod;
use crate::error::Result;
use crate::loopcoh::{LoopAlgebraModel, TruncSpaceParams};

/// One named check of the derived-functor suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// One row of the dimension table: brute force against the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedRow {
    pub i: usize,
    pub j: u32,
    pub dim_bruteforce: usize,
    pub dim_closed_form: usize,
    pub dim_unnormalized: usize,
}

impl DerivedRow {
    pub fn matches(&self) -> bool {
        self.dim_bruteforce == self.dim_closed_form && self.dim_bruteforce == self.dim_unnormalized
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedReport {
    pub r: u32,
    pub p: u64,
    pub alpha: u32,
    pub max_simplicial: usize,
    pub internal_cutoff: u32,
    pub rows: Vec<DerivedRow>,
    pub checks: Vec<DerivedCheck>,
    pub warnings: Vec<String>,
}

impl DerivedReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(DerivedRow::matches) && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .rows
            .iter()
            .filter(|r| !r.matches())
            .map(|r| {
                format!(
                    "dims at ({}, {}): brute {} closed {} unnormalized {}",
                    r.i, r.j, r.dim_bruteforce, r.dim_closed_form, r.dim_unnormalized
                )
            })
            .collect();
        out.extend(
            self.checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{}: {}", c.name, c.detail)),
        );
        out
    }
}

struct Checks(Vec<DerivedCheck>);

impl Checks {
    fn record(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(DerivedCheck {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Build the complex and run every check up to `max_simplicial`.
pub fn verify_derived(
    params: ResolutionParams,
    max_simplicial: usize,
    internal_cutoff: u32,
) -> Result<DerivedReport> {
    let cx = DerivedComplex::new(params, max_simplicial, internal_cutoff)?;
    let mut rows = Vec::new();
    for i in 0..=max_simplicial {
        for j in 0..=internal_cutoff {
            let row = DerivedRow {
                i,
                j,
                dim_bruteforce: cx.homology_dim(i, j)?,
                dim_closed_form: closed_form_dim(params, i, j),
                dim_unnormalized: cx.unnormalized_dim(i, j)?,
            };
            if row.dim_bruteforce + row.dim_closed_form + row.dim_unnormalized > 0 {
                rows.push(row);
            }
        }
    }
    let mut checks = Checks(Vec::new());
    simplicial_identities(&cx, &mut checks);
    derivation_identities(&cx, &mut checks);
    named_cycles(&cx, &mut checks)?;
    shuffle_identities(&cx, &mut checks)?;
    de_rham_identities(&cx, &mut checks)?;
    loop_model_comparison(&cx, &mut checks)?;
    Ok(DerivedReport {
        r: params.r,
        p: params.p,
        alpha: params.alpha,
        max_simplicial,
        internal_cutoff,
        rows,
        checks: checks.0,
        warnings: cx.res.warnings.clone(),
    })
}

fn basis_chains(cx: &DerivedComplex, q: usize) -> Vec<Chain> {
    let lvl = cx.res.level(q).expect("level exists");
    (0..=cx.cutoff())
        .flat_map(|d| {
            lvl.basis(d)
                .iter()
                .map(|m| level::single(m.clone(), 1))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn simplicial_identities(cx: &DerivedComplex, checks: &mut Checks) {
    let res = &cx.res;
    let top = res.top();
    let mut failures = Vec::new();
    for q in 0..=top {
        for c in basis_chains(cx, q) {
            // d_i d_j = d_{j-1} d_i for i < j
            if q >= 2 {
                for j in 1..=q {
                    for i in 0..j {
                        let lhs = res.face(q - 1, i, &res.face(q, j, &c));
                        let rhs = res.face(q - 1, j - 1, &res.face(q, i, &c));
                        if lhs != rhs {
                            failures.push(format!("d{i}d{j} at level {q}"));
                        }
                    }
                }
            }
            if q < top {
                for j in 0..=q {
                    let s = res.degeneracy(q, j, &c);
                    for i in 0..=q + 1 {
                        let lhs = res.face(q + 1, i, &s);
                        let rhs = if i < j {
                            res.degeneracy(q - 1, j - 1, &res.face(q, i, &c))
                        } else if i == j || i == j + 1 {
                            c.clone()
                        } else {
                            res.degeneracy(q - 1, j, &res.face(q, i - 1, &c))
                        };
                        if lhs != rhs {
                            failures.push(format!("d{i}s{j} at level {q}"));
                        }
                    }
                }
            }
            if q + 2 <= top {
                for j in 0..=q {
                    for i in 0..=j {
                        let lhs = res.degeneracy(q + 1, i, &res.degeneracy(q, j, &c));
                        let rhs = res.degeneracy(q + 1, j + 1, &res.degeneracy(q, i, &c));
                        if lhs != rhs {
                            failures.push(format!("s{i}s{j} at level {q}"));
                        }
                    }
                }
            }
        }
    }
    failures.dedup();
    checks.record("simplicial identities", failures.is_empty(), failures.join("; "));
}

fn derivation_identities(cx: &DerivedComplex, checks: &mut Checks) {
    let res = &cx.res;
    let top = res.top();
    let mut failures = Vec::new();
    for q in 0..=top {
        for c in basis_chains(cx, q) {
            if !res.theta(q, &res.theta(q, &c)).is_empty() {
                failures.push(format!("theta^2 at level {q}"));
            }
            if !res.de_rham(q, &res.de_rham(q, &c)).is_empty() {
                failures.push(format!("d^2 at level {q}"));
            }
            if q >= 1 {
                for i in 0..=q {
                    let face = res.face(q, i, &c);
                    if res.face(q, i, &res.theta(q, &c)) != res.theta(q - 1, &face) {
                        failures.push(format!("theta vs d{i} at level {q}"));
                    }
                    if res.face(q, i, &res.de_rham(q, &c)) != res.de_rham(q - 1, &face) {
                        failures.push(format!("de Rham vs d{i} at level {q}"));
                    }
                }
            }
            if q < top {
                for i in 0..=q {
                    let s = res.degeneracy(q, i, &c);
                    if res.degeneracy(q, i, &res.theta(q, &c)) != res.theta(q + 1, &s) {
                        failures.push(format!("theta vs s{i} at level {q}"));
                    }
                }
            }
        }
    }
    failures.dedup();
    checks.record("theta and de Rham identities", failures.is_empty(), failures.join("; "));
}

fn divisible(cx: &DerivedComplex) -> bool {
    let p = cx.params();
    (p.r as u64 + 1).is_multiple_of(p.p)
}

fn fits(cx: &DerivedComplex, q: usize, c: &Chain) -> Option<u32> {
    let d = cx.res.degree_of(q, c)?;
    (q <= cx.max_simplicial && d <= cx.cutoff()).then_some(d)
}

fn named_cycles(cx: &DerivedComplex, checks: &mut Checks) -> Result<()> {
    let res = &cx.res;
    let params = cx.params();
    let mut failures = Vec::new();
    for i in 0..=cx.max_simplicial {
        // d_0 omega_i = (r+1) x^r dx omega_{i-1}
        if i >= 1 {
            let lvl = res.level(i - 1)?;
            let expected = res.ops.scale(
                params.r as i64 + 1,
                &res.multiply(
                    i - 1,
                    &level::single(lvl.monomial(&[(lvl.x(), params.r), (lvl.dx(), 1)]), 1),
                    &res.omega(i - 1)?,
                ),
            );
            if res.face(i, 0, &res.omega(i)?) != expected {
                failures.push(format!("d0 omega_{i}"));
            }
        }
        let named: Vec<(&str, Chain)> = if divisible(cx) {
            vec![("omega", res.omega(i)?)]
        } else {
            vec![("alpha", res.alpha_cycle(i)?), ("beta", res.beta_cycle(i)?)]
        };
        for (name, c) in named {
            let Some(d) = fits(cx, i, &c) else { continue };
            if !cx.in_normalized(i, &c) {
                failures.push(format!("{name}_{i} not normalized"));
            } else if !cx.is_cycle(i, &c) {
                failures.push(format!("{name}_{i} not a cycle"));
            } else if !cx.is_nonzero_class(i, d, &c)? {
                failures.push(format!("{name}_{i} is a boundary"));
            }
        }
        if res.beta_cycle(i)? != res.beta_explicit(i)? {
            failures.push(format!("beta_{i} explicit formula"));
        }
    }
    checks.record("named cycles", failures.is_empty(), failures.join("; "));
    Ok(())
}

/// Zero in homology (the chain is a boundary of normalized chains).
fn vanishes_in_homology(cx: &DerivedComplex, q: usize, c: &Chain) -> Result<bool> {
    match fits(cx, q, c) {
        None => Ok(c.is_empty() || q > cx.max_simplicial),
        Some(d) => Ok(!cx.is_nonzero_class(q, d, c)?),
    }
}

fn shuffle_identities(cx: &DerivedComplex, checks: &mut Checks) -> Result<()> {
    let res = &cx.res;
    let p = cx.params().p;
    let top = cx.max_simplicial;
    let mut failures = Vec::new();
    for i in 0..=top {
        let unit = res.unit(0);
        let omega = res.omega(i)?;
        if shuffle_product(res, 0, &unit, i, &omega)? != omega {
            failures.push(format!("unit * omega_{i}"));
        }
    }
    for i in 0..=top {
        for j in 0..=top - i {
            let n = i + j;
            let c = binomial_mod(n as u64, i as u64, p) as i64;
            let prod = shuffle_product(res, i, &res.omega(i)?, j, &res.omega(j)?)?;
            let expected = res.ops.scale(c, &res.omega(n)?);
            if prod != expected {
                failures.push(format!("omega_{i} * omega_{j}"));
            }
            let aa = shuffle_product(res, i, &res.alpha_cycle(i)?, j, &res.alpha_cycle(j)?)?;
            if !vanishes_in_homology(cx, n, &aa)? {
                failures.push(format!("alpha_{i} * alpha_{j}"));
            }
            let bb = shuffle_product(res, i, &res.beta_cycle(i)?, j, &res.beta_cycle(j)?)?;
            let beta0_beta = res.multiply(n, &res.beta_cycle(0).map(|b| lift(res, &b, n))?, &res.beta_cycle(n)?);
            let diff = res.ops.sub(&bb, &res.ops.scale(c, &beta0_beta));
            if !vanishes_in_homology(cx, n, &diff)? {
                failures.push(format!("beta_{i} * beta_{j}"));
            }
            // graded commutativity with sign (-1)^{ij + |v||w|}
            for (v, w) in [
                (res.beta_cycle(i)?, res.alpha_cycle(j)?),
                (res.alpha_cycle(i)?, res.beta_cycle(j)?),
            ] {
                let vw = shuffle_product(res, i, &v, j, &w)?;
                let wv = shuffle_product(res, j, &w, i, &v)?;
                let dv = res.degree_of(i, &v).unwrap_or(0) as usize;
                let dw = res.degree_of(j, &w).unwrap_or(0) as usize;
                let sign = if (i * j + dv * dw) % 2 == 1 { -1 } else { 1 };
                let diff = res.ops.sub(&vw, &res.ops.scale(sign, &wv));
                if !vanishes_in_homology(cx, n, &diff)? {
                    failures.push(format!("commutativity at ({i}, {j})"));
                }
            }
        }
    }
    checks.record("shuffle products", failures.is_empty(), failures.join("; "));
    Ok(())
}

/// A level-0 chain pushed to level `n` by the degeneracies `s_0`.
fn lift(res: &SimplicialResolution, c: &Chain, n: usize) -> Chain {
    let mut out = c.clone();
    for q in 0..n {
        out = res.degeneracy(q, 0, &out);
    }
    out
}

fn de_rham_identities(cx: &DerivedComplex, checks: &mut Checks) -> Result<()> {
    let res = &cx.res;
    let r = cx.params().r as i64;
    let mut failures = Vec::new();
    for i in 0..=cx.max_simplicial {
        if !res.de_rham(i, &res.omega(i)?).is_empty() {
            failures.push(format!("d(omega_{i})"));
        }
        if !res.de_rham(i, &res.alpha_cycle(i)?).is_empty() {
            failures.push(format!("d(alpha_{i})"));
        }
        let lhs = res.de_rham(i, &res.beta_cycle(i)?);
        let rhs = res.ops.scale(1 + (r + 1) * i as i64, &res.alpha_cycle(i)?);
        if lhs != rhs {
            failures.push(format!("d(beta_{i})"));
        }
    }
    checks.record("de Rham on cycles", failures.is_empty(), failures.join("; "));
    Ok(())
}

/// Totalized homology against the explicit loop-space model: dimensions by
/// total degree `j - i` and ranks of the de Rham map against the action
/// differential.
fn loop_model_comparison(cx: &DerivedComplex, checks: &mut Checks) -> Result<()> {
    let params = cx.params();
    let tp = TruncSpaceParams::new(params.r, params.p, params.alpha)?;
    let rho = tp.rho();
    let max = cx.max_simplicial as u64;
    let limit = (cx.cutoff() as u64 - max).min(rho * (max + 1) - 1);
    let model = LoopAlgebraModel::new(tp, limit);
    let mut failures = Vec::new();
    for k in 0..=limit {
        let mut dim = 0;
        let mut rank = 0;
        for q in 0..=cx.max_simplicial {
            let d = (k + q as u64) as u32;
            dim += cx.homology_dim(q, d)?;
            rank += cx.de_rham_rank(q, d)?;
        }
        if dim != model.dim(k) {
            failures.push(format!("dim in total degree {k}: {dim} vs {}", model.dim(k)));
        }
        if rank != model.action_rank(k) {
            failures.push(format!("rank in total degree {k}: {rank} vs {}", model.action_rank(k)));
        }
    }
    checks.record(
        "agreement with the loop-space model",
        failures.is_empty(),
        if failures.is_empty() {
            format!("total degrees 0..={limit}")
        } else {
            failures.join("; ")
        },
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_zero_dims() {
        let params = ResolutionParams::new(1, 2, 2).unwrap();
        let lvl = ResolutionLevel::new(params, 0, 7);
        let dims: Vec<usize> = (0..=7).map(|d| lvl.dim(d)).collect();
        assert_eq!(dims, vec![1; 8]);
        let params = ResolutionParams::new(1, 2, 4).unwrap();
        let lvl = ResolutionLevel::new(params, 0, 8);
        let dims: Vec<usize> = (0..=8).map(|d| lvl.dim(d)).collect();
        assert_eq!(dims, vec![1, 0, 0, 1, 1, 0, 0, 1, 1]);
    }

    #[test]
    fn first_face_of_dy() {
        let params = ResolutionParams::new(2, 3, 2).unwrap();
        let res = SimplicialResolution::new(params, 1, 12).unwrap();
        let l1 = res.level(1).unwrap();
        let l0 = res.level(0).unwrap();
        let dy1 = l1.generator(l1.dy(1));
        let expected = level::single(l0.monomial(&[(l0.x(), 2), (l0.dx(), 1)]), 3 % 3);
        assert_eq!(res.face(1, 0, &dy1), expected);
        let params = ResolutionParams::new(2, 5, 2).unwrap();
        let res = SimplicialResolution::new(params, 1, 12).unwrap();
        let l0 = res.level(0).unwrap();
        let l1 = res.level(1).unwrap();
        let got = res.face(1, 0, &l1.generator(l1.dy(1)));
        assert_eq!(got, level::single(l0.monomial(&[(l0.x(), 2), (l0.dx(), 1)]), 3));
    }

    #[test]
    fn small_cutoff_warns() {
        let params = ResolutionParams::new(2, 3, 2).unwrap();
        let res = SimplicialResolution::new(params, 1, 4).unwrap();
        assert_eq!(res.warnings.len(), 1);
    }

    #[test]
    fn two_sphere_mod_two() {
        let params = ResolutionParams::new(1, 2, 2).unwrap();
        let report = verify_derived(params, 2, params.default_cutoff()).unwrap();
        assert!(report.passes(), "{:?}", report.failures());
        let cx = DerivedComplex::new(params, 1, 8).unwrap();
        let h0: Vec<usize> = (0..4).map(|d| cx.homology_dim(0, d).unwrap()).collect();
        assert_eq!(h0, vec![1, 1, 1, 1]);
    }

    #[test]
    fn coprime_degrees() {
        let params = ResolutionParams::new(2, 2, 2).unwrap();
        let cx = DerivedComplex::new(params, 1, 10).unwrap();
        assert_eq!(cx.homology_dim(1, 6).unwrap(), 1);
        assert_eq!(cx.homology_dim(1, 7).unwrap(), 1);
        assert_eq!(cx.homology_dim(1, 8).unwrap(), 1);
        assert_eq!(cx.homology_dim(1, 9).unwrap(), 1);
        assert_eq!(cx.homology_dim(1, 5).unwrap(), 0);
    }

    #[test]
    fn shuffle_overflow() {
        let params = ResolutionParams::new(1, 2, 2).unwrap();
        let res = SimplicialResolution::new(params, 2, 6).unwrap();
        let w = res.omega(1).unwrap();
        assert!(shuffle_product(&res, 1, &w, 2, &res.omega(2).unwrap()).is_err());
        assert_eq!(shuffles(2, 1).len(), 3);
    }
}
