use serde::{Deserialize, Serialize};

use super::TruncSpaceParams;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexKind {
    /// Degrees of free generators.
    IF,
    /// Degrees of transfer (u-torsion) classes.
    IT,
    /// The shifted variant of `IF` locating odd free generators.
    IFPrime,
}

/// One of the arithmetic index sets of even degrees attached to `(r, p, alpha)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexSet {
    pub kind: IndexKind,
    pub params: TruncSpaceParams,
}

impl IndexSet {
    pub fn new(kind: IndexKind, params: TruncSpaceParams) -> Result<Self> {
        if kind == IndexKind::IFPrime && params.alpha != 2 {
            return Err(Error::PrimeSetNeedsAlphaTwo(params.alpha));
        }
        Ok(IndexSet { kind, params })
    }

    pub fn free(params: TruncSpaceParams) -> Self {
        IndexSet {
            kind: IndexKind::IF,
            params,
        }
    }

    pub fn torsion(params: TruncSpaceParams) -> Self {
        IndexSet {
            kind: IndexKind::IT,
            params,
        }
    }

    /// All `(i, j)` with `rho i + alpha j = k`, `chi <= j <= r`, and the
    /// divisibility condition of the set. Empty for `IFPrime`.
    pub fn witnesses(&self, k: u64) -> Vec<(u64, u32)> {
        let want_divisible = match self.kind {
            IndexKind::IF => true,
            IndexKind::IT => false,
            IndexKind::IFPrime => return Vec::new(),
        };
        if k == 0 {
            return Vec::new();
        }
        let TruncSpaceParams { r, p, alpha } = self.params;
        let rho = self.params.rho();
        let lo = self.params.chi() as u64;
        let mut out = Vec::new();
        for i in 0..=k / rho {
            let rest = k - rho * i;
            if !rest.is_multiple_of(alpha as u64) {
                continue;
            }
            let j = rest / alpha as u64;
            if j < lo || j > r as u64 {
                continue;
            }
            let divides = ((r as u64 + 1) * i + j).is_multiple_of(p);
            if divides == want_divisible {
                out.push((i, j as u32));
            }
        }
        out
    }

    pub fn contains(&self, k: u64) -> bool {
        if k == 0 {
            return false;
        }
        match self.kind {
            IndexKind::IF | IndexKind::IT => !self.witnesses(k).is_empty(),
            IndexKind::IFPrime => {
                let base = IndexSet::free(self.params).contains(k);
                if !self.params.divisible() {
                    return base;
                }
                let two_r = 2 * self.params.r as u64;
                let in_multiples = k.is_multiple_of(two_r);
                let shifted = k > 2 && (k - 2).is_multiple_of(two_r);
                (base && !in_multiples) || shifted
            }
        }
    }

    /// Members in `1..=n`, ascending.
    pub fn enumerate(&self, n: u64) -> Vec<u64> {
        (1..=n).filter(|&k| self.contains(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: u32, p: u64) -> TruncSpaceParams {
        TruncSpaceParams::projective(r, p).unwrap()
    }

    #[test]
    fn published_examples() {
        assert_eq!(IndexSet::free(params(2, 2)).enumerate(16), vec![4, 6, 12, 14]);
        assert_eq!(IndexSet::free(params(2, 5)).enumerate(34), vec![8, 14, 28, 34]);
        assert_eq!(IndexSet::free(params(2, 3)).enumerate(16), vec![4, 8, 12, 16]);
        assert_eq!(IndexSet::free(params(2, 7)).enumerate(48), vec![10, 20, 38, 48]);
    }

    #[test]
    fn prime_set_needs_alpha_two() {
        let p = TruncSpaceParams::new(2, 3, 4).unwrap();
        assert_eq!(
            IndexSet::new(IndexKind::IFPrime, p),
            Err(Error::PrimeSetNeedsAlphaTwo(4))
        );
    }

    #[test]
    fn witnesses_are_unique() {
        for r in 1..=6 {
            for p in [2, 3, 5, 7] {
                let prm = params(r, p);
                for k in 1..=4 * prm.rho() * p {
                    assert!(IndexSet::free(prm).witnesses(k).len() <= 1);
                    assert!(IndexSet::torsion(prm).witnesses(k).len() <= 1);
                }
            }
        }
    }

    #[test]
    fn periodic_modulo_rho_p() {
        for r in 1..=5 {
            for p in [2, 3, 5] {
                for alpha in [2, 4] {
                    let prm = TruncSpaceParams::new(r, p, alpha).unwrap();
                    let period = prm.rho() * p;
                    for set in [IndexSet::free(prm), IndexSet::torsion(prm)] {
                        for k in 1..=2 * period {
                            assert_eq!(set.contains(k), set.contains(k + period), "{set:?} {k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn intersection_and_union() {
        for r in 1..=6 {
            for p in [2, 3, 5, 7] {
                let prm = params(r, p);
                let n = 6 * prm.rho() * p;
                for k in 1..=n {
                    let f = IndexSet::free(prm).contains(k);
                    let t = IndexSet::torsion(prm).contains(k);
                    let in_multiples = k % (2 * r as u64) == 0;
                    assert_eq!(f && t, prm.divisible() && in_multiples, "r={r} p={p} k={k}");
                    assert_eq!(f || t, k % 2 == 0, "r={r} p={p} k={k}");
                }
            }
        }
    }
}
