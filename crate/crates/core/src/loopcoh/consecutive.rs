//! Runs of consecutive even degrees in the free index set: the arithmetic
//! behind the existence of connecting trajectories between iterated
//! geodesics.

use serde::{Deserialize, Serialize};

use super::index_sets::{IndexKind, IndexSet};
use super::TruncSpaceParams;
use crate::error::Result;

/// Start degrees `2k` with `2k, 2k+2, .., 2k+2(len-1)` all in `set`, for
/// `2k + 2(len-1) <= cutoff`.
pub fn consecutive_runs(set: &IndexSet, len: u64, cutoff: u64) -> Vec<u64> {
    let members: std::collections::BTreeSet<u64> = set.enumerate(cutoff).into_iter().collect();
    members
        .iter()
        .copied()
        .filter(|&k| (1..len).all(|s| members.contains(&(k + 2 * s))))
        .collect()
}

/// A pair `{2k, 2k+2}` in the free set, with the witnesses of both ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub k: u64,
    pub lower: (u64, u32),
    pub upper: (u64, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsecutiveReport {
    pub r: u32,
    pub p: u64,
    pub cutoff: u64,
    pub triples: Vec<u64>,
    pub pairs: Vec<PairWitness>,
    /// Windows `2rpm+2 ..= 2r(pm+1)` lying entirely in `IF'` (or, when `p`
    /// divides `r + 1`, degrees `2rpm` in `IF'`).
    pub full_windows: Vec<u64>,
    pub violations: Vec<String>,
}

impl ConsecutiveReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For `alpha = 2`: triples never occur when `p` does not divide `r + 1`;
/// pairs occur only for `p = 2` and `r` even, as `2k = 2r(i+1)` with the
/// lower end witnessed by `(i, r)`, `i` even, and the upper by `(i+1, 1)`;
/// and for `r >= 2` no window of `r` consecutive even degrees above `2rpm`
/// lies in `IF'`.
pub fn consecutive_report(r: u32, p: u64, cutoff: u64) -> Result<ConsecutiveReport> {
    let params = TruncSpaceParams::projective(r, p)?;
    let free = IndexSet::free(params);
    let mut violations = Vec::new();
    let mut triples = Vec::new();
    let mut pairs = Vec::new();
    if !params.divisible() {
        triples = consecutive_runs(&free, 3, cutoff);
        for t in &triples {
            violations.push(format!("triple starting at {t}"));
        }
        for k2 in consecutive_runs(&free, 2, cutoff) {
            let lower = free.witnesses(k2)[0];
            let upper = free.witnesses(k2 + 2)[0];
            let k = k2 / 2;
            let (i, j) = lower;
            let expected = p == 2
                && r.is_multiple_of(2)
                && j == r
                && i % 2 == 0
                && upper == (i + 1, 1)
                && k == r as u64 * (i + 1);
            if !expected {
                violations.push(format!("unexpected pair at {k2} with witnesses {lower:?} {upper:?}"));
            }
            pairs.push(PairWitness { k, lower, upper });
        }
        if p == 2 && r.is_multiple_of(2) {
            let r64 = r as u64;
            let found: Vec<u64> = pairs.iter().map(|w| w.k).collect();
            for i in (0..).step_by(2).take_while(|i| 2 * r64 * (i + 1) + 2 <= cutoff) {
                if !found.contains(&(r64 * (i + 1))) {
                    violations.push(format!("missing pair at {}", 2 * r64 * (i + 1)));
                }
            }
        }
    }
    let mut full_windows = Vec::new();
    if r >= 2 {
        let prime = IndexSet::new(IndexKind::IFPrime, params)?;
        let period = 2 * r as u64 * p;
        let mut m = 1;
        while period * m + 2 * r as u64 <= cutoff {
            let base = period * m;
            let window_full = (1..=r as u64).all(|s| prime.contains(base + 2 * s));
            let bottom = params.divisible() && prime.contains(base);
            if window_full || bottom {
                full_windows.push(base);
                violations.push(format!("generators fill the window above {base}"));
            }
            m += 1;
        }
    }
    Ok(ConsecutiveReport {
        r,
        p,
        cutoff,
        triples,
        pairs,
        full_windows,
        violations,
    })
}

/// Start degrees `8m + 2` with `8m + 2` and `8m + 4` both in `IF(2,2,2)`.
pub fn plane_mod_two_pairs(cutoff: u64) -> Vec<u64> {
    let params = TruncSpaceParams::projective(2, 2).expect("valid parameters");
    consecutive_runs(&IndexSet::free(params), 2, cutoff)
        .into_iter()
        .filter(|k| k % 8 == 2)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_mod_two() {
        let report = consecutive_report(2, 2, 200).unwrap();
        assert!(report.passes(), "{:?}", report.violations);
        let starts: Vec<u64> = report.pairs.iter().map(|w| 2 * w.k).collect();
        assert_eq!(&starts[..3], &[4, 12, 20]);
        assert!(plane_mod_two_pairs(1000).is_empty());
    }

    #[test]
    fn pairs_need_p_two() {
        for r in 1..=10 {
            for p in [2, 3, 5, 7, 11] {
                let params = TruncSpaceParams::projective(r, p).unwrap();
                let report = consecutive_report(r, p, 10 * params.rho() * p).unwrap();
                assert!(report.passes(), "{r} {p} {:?}", report.violations);
                if p != 2 || r % 2 == 1 {
                    assert!(report.pairs.is_empty());
                }
            }
        }
    }

    #[test]
    fn divisible_case_has_runs() {
        // every even degree is free for r = 1, p = 2
        let params = TruncSpaceParams::projective(1, 2).unwrap();
        assert_eq!(consecutive_runs(&IndexSet::free(params), 3, 10), vec![2, 4, 6]);
    }
}
