use serde::{Deserialize, Serialize};

use super::index_sets::{IndexKind, IndexSet};
use super::TruncSpaceParams;
use crate::error::Result;
use crate::series::{series_of_index_set, PowerSeries, RationalSeries};

/// Graded module over `F_p[u]`, `|u| = 2`, presented as a sum of free cyclic
/// modules and copies of `F_p[u]/(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedUModule {
    pub free: Vec<u64>,
    pub torsion: Vec<u64>,
    pub cutoff: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UGenerator {
    Free(usize),
    Torsion(usize),
}

/// `u^power * generator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UElement {
    pub power: u64,
    pub generator: UGenerator,
}

impl GradedUModule {
    pub fn new(mut free: Vec<u64>, mut torsion: Vec<u64>, cutoff: u64) -> Self {
        free.retain(|&d| d <= cutoff);
        torsion.retain(|&d| d <= cutoff);
        free.sort_unstable();
        torsion.sort_unstable();
        GradedUModule {
            free,
            torsion,
            cutoff,
        }
    }

    pub fn generator_degree(&self, g: UGenerator) -> u64 {
        match g {
            UGenerator::Free(k) => self.free[k],
            UGenerator::Torsion(k) => self.torsion[k],
        }
    }

    pub fn degree(&self, e: &UElement) -> u64 {
        self.generator_degree(e.generator) + 2 * e.power
    }

    /// Monomial basis `u^a g` of degree `d`.
    pub fn basis(&self, d: u64) -> Vec<UElement> {
        let mut out: Vec<UElement> = self
            .free
            .iter()
            .enumerate()
            .filter(|(_, &f)| f <= d && (d - f).is_multiple_of(2))
            .map(|(k, &f)| UElement {
                power: (d - f) / 2,
                generator: UGenerator::Free(k),
            })
            .collect();
        out.extend(
            self.torsion
                .iter()
                .enumerate()
                .filter(|(_, &t)| t == d)
                .map(|(k, _)| UElement {
                    power: 0,
                    generator: UGenerator::Torsion(k),
                }),
        );
        out
    }

    /// `u * e`, or `None` when `u` kills it.
    pub fn multiply_u(&self, e: &UElement) -> Option<UElement> {
        match e.generator {
            UGenerator::Torsion(_) => None,
            UGenerator::Free(_) => Some(UElement {
                power: e.power + 1,
                generator: e.generator,
            }),
        }
    }

    pub fn poincare(&self) -> PowerSeries {
        let n = self.cutoff as usize;
        PowerSeries::from_degrees(self.free.iter().copied(), n)
            .div_one_minus(2)
            .add(&PowerSeries::from_degrees(self.torsion.iter().copied(), n))
    }
}

/// The F_p[u]-module `H^*(LX_hT; F_p)` for `X = CP^r`, truncated at `cutoff`.
pub fn main_module(r: u32, p: u64, cutoff: u64) -> Result<GradedUModule> {
    let params = TruncSpaceParams::projective(r, p)?;
    let free_set = IndexSet::free(params);
    let prime_set = IndexSet::new(IndexKind::IFPrime, params)?;
    let torsion_set = IndexSet::torsion(params);
    let mut free = vec![0];
    let mut torsion = Vec::new();
    for k in 1..=cutoff / 2 + 1 {
        let deg = 2 * k;
        if free_set.contains(deg) {
            free.push(deg);
        }
        if prime_set.contains(deg) {
            free.push(deg - 1);
        }
        if torsion_set.contains(deg) {
            torsion.push(deg - 1);
        }
    }
    Ok(GradedUModule::new(free, torsion, cutoff))
}

/// `P_{r,p}(t) = (1 + sum_{k in IF} t^k) / (1 - t)` expanded to `cutoff`.
pub fn main_poincare(r: u32, p: u64, cutoff: usize) -> Result<PowerSeries> {
    let params = TruncSpaceParams::projective(r, p)?;
    Ok(PowerSeries::one(cutoff)
        .add(&series_of_index_set(&IndexSet::free(params), cutoff))
        .div_one_minus(1))
}

/// The product form of `P_{r,p}`, available when `p` divides `r + 1`.
pub fn main_closed_form(r: u32, p: u64) -> Result<Option<RationalSeries>> {
    let params = TruncSpaceParams::projective(r, p)?;
    if !params.divisible() {
        return Ok(None);
    }
    let top = 2 * (r as usize + 1);
    Ok(Some(RationalSeries::from_terms(
        &[(0, 1), (top, -1)],
        &[1, 2 * r as usize, 2 * p as usize],
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_case() {
        let s = main_poincare(1, 2, 6).unwrap();
        assert_eq!(s.coefficient_line(), "1 1 2 2 3 3 4");
        let m = main_module(1, 2, 6).unwrap();
        assert_eq!(m.poincare(), s);
    }

    #[test]
    fn module_matches_closed_form() {
        for r in 1..=8 {
            for p in [2, 3, 5, 7] {
                let n = 6 * (2 * r as u64) * p;
                let m = main_module(r, p, n).unwrap();
                let s = main_poincare(r, p, n as usize).unwrap();
                assert_eq!(m.poincare(), s, "r={r} p={p}");
                assert_eq!(s.coeff_i64(0), 1);
                if let Some(closed) = main_closed_form(r, p).unwrap() {
                    assert_eq!(closed.expand(n as usize), s, "r={r} p={p}");
                }
            }
        }
    }

    #[test]
    fn u_kills_torsion_only() {
        let m = main_module(2, 2, 40).unwrap();
        assert!(!m.torsion.is_empty());
        for d in 0..=40 {
            for e in m.basis(d) {
                match e.generator {
                    UGenerator::Torsion(_) => assert!(m.multiply_u(&e).is_none()),
                    UGenerator::Free(_) => {
                        let ue = m.multiply_u(&e).unwrap();
                        assert_eq!(m.degree(&ue), d + 2);
                    }
                }
            }
        }
    }

    #[test]
    fn json_schema() {
        let m = GradedUModule::new(vec![0, 4], vec![3], 6);
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"free":[0,4],"torsion":[3],"cutoff":6}"#);
        assert_eq!(serde_json::from_str::<GradedUModule>(&text).unwrap(), m);
    }
}
