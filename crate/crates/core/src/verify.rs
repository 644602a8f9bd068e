//! The verification suite: every invariant of the library, run over a grid
//! of `(r, p)` and reported one line per check.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::derived::{verify_derived, ResolutionParams};
use crate::error::Result;
use crate::geodesy::{kernel_of_x1_minus_x2_with, qcheck_agreement, QSequence};
use crate::loopcoh::{
    action_counts, consecutive_report, main_closed_form, main_module, main_poincare, plane_mod_two_pairs,
    predicted_counts, rational_borel_series, rational_loop_model, IndexSet, LoopAlgebraModel, TruncSpaceParams,
};
use crate::specseq::{index_series_identities, serre_report, structural_checks_with};

/// Deliberate corruptions used to check that the suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Flip the sign of the leading term of every `Q_k`, `k >= 2`.
    QkSign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub r_values: Vec<u32>,
    pub primes: Vec<u64>,
    pub alpha: u32,
    /// Fixed cutoff; `None` means `6 rho p` per cell.
    pub cutoff: Option<u64>,
    pub mutation: Option<Mutation>,
    /// Also run the derived functor brute force.
    pub strict: bool,
    pub max_simplicial: usize,
    pub internal_cutoff: Option<u32>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            r_values: (1..=4).collect(),
            primes: vec![2, 3, 5],
            alpha: 2,
            cutoff: None,
            mutation: None,
            strict: false,
            max_simplicial: 3,
            internal_cutoff: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub r: u32,
    pub p: u64,
    pub cutoff: u64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {} r={} p={} N={}", self.check, self.r, self.p, self.cutoff);
        if !self.detail.is_empty() {
            s.push_str(": ");
            s.push_str(&self.detail);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub options: VerifyOptions,
    pub results: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.results.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|c| !c.passed).collect()
    }
}

/// Run the suite on the current rayon pool. Results are ordered by `r`,
/// then `p`, then check.
pub fn run_verify(options: &VerifyOptions) -> Result<VerifyReport> {
    let cells: Vec<(u32, u64)> = options
        .r_values
        .iter()
        .flat_map(|&r| options.primes.iter().map(move |&p| (r, p)))
        .collect();
    let per_cell = cells
        .par_iter()
        .map(|&(r, p)| verify_cell(r, p, options))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        options: options.clone(),
        results: per_cell.into_iter().flatten().collect(),
    })
}

fn summarize<T: std::fmt::Debug>(items: &[T]) -> String {
    match items.len() {
        0 => String::new(),
        1..=4 => format!("{items:?}"),
        n => format!("{:?} and {} more", &items[..4], n - 4),
    }
}

/// All checks for one grid cell.
pub fn verify_cell(r: u32, p: u64, options: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let params = TruncSpaceParams::new(r, p, options.alpha)?;
    let cutoff = options.cutoff.unwrap_or_else(|| params.default_cutoff());
    let q = match options.mutation {
        Some(Mutation::QkSign) => QSequence::mutated(r),
        None => QSequence::new(r),
    };
    let mut out = Vec::new();
    let mut push = |check: &str, passed: bool, detail: String| {
        out.push(CheckResult {
            check: check.to_string(),
            r,
            p,
            cutoff,
            passed,
            detail,
        })
    };
    let n = cutoff as usize;
    let projective = options.alpha == 2;

    let serre = serre_report(params, cutoff)?;
    if let Some(collapse) = &serre.collapse_mismatches {
        push("serre-collapse", collapse.is_empty(), summarize(collapse));
    }
    let mut detail = Vec::new();
    if !serre.presentation_mismatches.is_empty() {
        detail.push(format!("bidegrees {}", summarize(&serre.presentation_mismatches)));
    }
    if !serre.closed_form_mismatches.is_empty() {
        detail.push(format!("closed form at {}", summarize(&serre.closed_form_mismatches)));
    }
    if !serre.image_mismatches.is_empty() {
        detail.push(format!("image at {}", summarize(&serre.image_mismatches)));
    }
    push("serre-presentation", detail.is_empty(), detail.join("; "));

    if projective {
        let failures = index_series_identities(r, p, n)?;
        push("index-series", failures.is_empty(), failures.join("; "));
    }

    let failures = counting_failures(params, cutoff)?;
    push("counting", failures.is_empty(), summarize(&failures));

    if projective {
        let module = main_module(r, p, cutoff)?.poincare();
        let main = main_poincare(r, p, n)?;
        let mut f = Vec::new();
        if !module.mismatches(&main).is_empty() {
            f.push("module generators".to_string());
        }
        if let Some(closed) = main_closed_form(r, p)? {
            if !closed.expand(n).mismatches(&main).is_empty() {
                f.push("product form".to_string());
            }
        }
        push("main-module", f.is_empty(), f.join("; "));

        let structural = structural_checks_with(&q, p, cutoff)?;
        push("morse-structural", structural.passes(), summarize(&structural.failures()));

        let mut bad = Vec::new();
        for m in 0..=2 * r + 4 {
            let a = qcheck_agreement(&q, p, m, 4096)?;
            if !a.agrees() {
                bad.push(m);
            }
        }
        push(
            "geodesy-qcheck",
            bad.is_empty(),
            if bad.is_empty() { String::new() } else { format!("degrees m = {}", summarize(&bad)) },
        );
        let kernel = kernel_of_x1_minus_x2_with(&q, p)?;
        push(
            "geodesy-kernel",
            kernel.passes(),
            if kernel.passes() {
                String::new()
            } else {
                format!(
                    "kernel {} cokernel {} expected {}",
                    kernel.kernel_total, kernel.cokernel_total, kernel.expected_total
                )
            },
        );

        let bound = 10 * params.rho() * p;
        let mut f = consecutive_report(r, p, bound)?.violations;
        if r == 2 && p == 2 {
            f.extend(plane_mod_two_pairs(bound).into_iter().map(|k| format!("pair at {k}")));
        }
        push("consecutive-degrees", f.is_empty(), summarize(&f));
    }

    let f = rational_failures(r, options.alpha, cutoff)?;
    push("rational", f.is_empty(), summarize(&f));

    if options.strict {
        let rp = ResolutionParams::new(r, p, options.alpha)?;
        let internal = options.internal_cutoff.unwrap_or_else(|| rp.default_cutoff());
        let report = verify_derived(rp, options.max_simplicial, internal)?;
        push("derived", report.passes(), summarize(&report.failures()));
    }
    Ok(out)
}

/// The six counting statements for `d: H^{2k} -> H^{2k-1}`, each by index
/// sets and by ranks in the explicit model.
pub fn counting_failures(params: TruncSpaceParams, cutoff: u64) -> Result<Vec<String>> {
    let rho = params.rho();
    let p = params.p;
    let r = params.r as usize;
    let top = cutoff.max(3 * rho * p + 2);
    let model = LoopAlgebraModel::new(params, top);
    let free = IndexSet::free(params);
    let mut f = Vec::new();
    let mut counts = Vec::new();
    for k in 1..=top / 2 {
        let actual = action_counts(&model, k)?;
        let predicted = predicted_counts(params, k);
        if actual != predicted {
            f.push(format!("2k = {}: {actual:?} vs {predicted:?}", 2 * k));
        }
        if actual.kernel > 1 || actual.image > 1 || actual.cokernel > 1 {
            f.push(format!("2k = {}: dimension above one", 2 * k));
        }
        counts.push(actual);
    }
    for m in 1..=3u64 {
        let upper = rho * p * m;
        let kernel: usize = counts[..(upper / 2) as usize].iter().map(|c| c.kernel).sum();
        let by_sets = free.enumerate(upper).len();
        let expected = if params.divisible() { m as usize * (r + 1) } else { m as usize * r };
        if kernel != expected || by_sets != expected {
            f.push(format!("kernel sum to {upper}: rank {kernel}, sets {by_sets}, expected {expected}"));
        }
        let (upper, expected) = if params.divisible() {
            (upper + 2, m as usize * (r + 1))
        } else {
            (upper, m as usize * r)
        };
        let cokernel: usize = counts[..(upper / 2) as usize].iter().map(|c| c.cokernel).sum();
        let by_sets: usize = (1..=upper / 2).map(|k| predicted_counts(params, k).cokernel).sum();
        if cokernel != expected || by_sets != expected {
            f.push(format!("cokernel sum to {upper}: rank {cokernel}, sets {by_sets}, expected {expected}"));
        }
    }
    Ok(f)
}

/// Over `Q`: `d` is injective exactly on the listed even degrees, and the
/// Serre page built from the model ranks has the stated Borel series.
pub fn rational_failures(r: u32, alpha: u32, cutoff: u64) -> Result<Vec<String>> {
    let model = rational_loop_model(r, alpha, cutoff + 1)?;
    let even = crate::loopcoh::rational::rational_even_degrees(r, alpha, cutoff + 1)?;
    let mut f = Vec::new();
    let rank = |k: u64| if k == 0 { 0 } else { model.action_rank(k) };
    for k in 1..=cutoff + 1 {
        if rank(k) != usize::from(even.contains(&k)) {
            f.push(format!("rank of d out of degree {k}"));
        }
    }
    let n = cutoff as usize;
    let kernel: Vec<usize> = (0..=cutoff).map(|k| model.dim(k) - rank(k)).collect();
    let homology: Vec<usize> = (0..=cutoff).map(|k| kernel[k as usize] - rank(k + 1)).collect();
    let dims: Vec<usize> = (0..=n)
        .map(|t| kernel[t] + (2..=t).step_by(2).map(|s| homology[t - s]).sum::<usize>())
        .collect();
    let borel = rational_borel_series(r, alpha, n)?;
    let page = crate::series::PowerSeries::from_dims(&dims);
    for d in page.mismatches(&borel) {
        f.push(format!("Borel series in degree {d}"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let opts = VerifyOptions {
            r_values: vec![1, 2],
            primes: vec![2, 3],
            ..VerifyOptions::default()
        };
        let report = run_verify(&opts).unwrap();
        let failures: Vec<String> = report.failures().iter().map(|c| c.line()).collect();
        assert!(failures.is_empty(), "{failures:?}");
        assert_eq!(report.results[0].r, 1);
        assert_eq!(report.results.last().unwrap().p, 3);
    }

    #[test]
    fn mutation_is_noticed_for_odd_primes() {
        let opts = VerifyOptions {
            r_values: vec![2],
            primes: vec![3],
            mutation: Some(Mutation::QkSign),
            ..VerifyOptions::default()
        };
        let report = run_verify(&opts).unwrap();
        assert!(!report.passes());
        assert!(report.failures().iter().any(|c| c.check == "geodesy-qcheck"));
    }

    #[test]
    fn counting_for_alpha_four() {
        for (r, p) in [(1, 2), (2, 3), (3, 2)] {
            let params = TruncSpaceParams::new(r, p, 4).unwrap();
            let f = counting_failures(params, params.default_cutoff()).unwrap();
            assert!(f.is_empty(), "{r} {p}: {f:?}");
        }
    }

    #[test]
    fn rational_circle() {
        assert!(rational_failures(1, 2, 20).unwrap().is_empty());
        assert!(rational_failures(3, 4, 60).unwrap().is_empty());
    }
}
