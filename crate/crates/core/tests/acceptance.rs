//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::Instant;

use loopcoh::derived::{verify_derived, ResolutionParams};
use loopcoh::geodesy::{kernel_of_x1_minus_x2, qcheck_agreement, QSequence};
use loopcoh::loopcoh::{consecutive_report, plane_mod_two_pairs, TruncSpaceParams};
use loopcoh::specseq::{
    index_series_identities, serre_collapse_check, serre_report, structural_checks, structural_cutoff,
};
use loopcoh::verify::{counting_failures, rational_failures};

const PRIMES: [u64; 4] = [2, 3, 5, 7];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn grid() -> impl Iterator<Item = (u32, u64)> {
    (1..=8).flat_map(|r| PRIMES.into_iter().map(move |p| (r, p)))
}

fn projective(r: u32, p: u64) -> TruncSpaceParams {
    TruncSpaceParams::projective(r, p).unwrap()
}

fn collect(failures: Vec<String>, ok: String) -> Outcome {
    if failures.is_empty() {
        Ok(ok)
    } else {
        let n = failures.len();
        Err(format!("{n} failures, first: {}", failures[0]))
    }
}

fn headline() -> Outcome {
    let mut f = Vec::new();
    for (r, p) in grid() {
        let n = projective(r, p).default_cutoff();
        if !serre_collapse_check(r, p, n).unwrap() {
            f.push(format!("r={r} p={p} N={n}"));
        }
    }
    collect(f, "E3 total series equals P_{r,p} on 32 cells to N = 6 rho p".into())
}

fn presentation() -> Outcome {
    let mut f = Vec::new();
    let mut bidegrees = 0;
    for (r, p) in grid() {
        let params = projective(r, p);
        let report = serre_report(params, params.default_cutoff()).unwrap();
        bidegrees += (report.cutoff + 1) * (report.cutoff + 2) / 2;
        if !report.passes() {
            f.push(format!("r={r} p={p}: {:?}", report.presentation_mismatches));
        }
    }
    collect(f, format!("rank page equals presentation page, {bidegrees} bidegrees"))
}

fn derived() -> Outcome {
    let mut f = Vec::new();
    let mut rows = 0;
    for (r, p, a) in [(1, 2, 2), (2, 2, 2), (2, 3, 2), (1, 3, 2), (1, 2, 4)] {
        let params = ResolutionParams::new(r, p, a).unwrap();
        let report = verify_derived(params, 3, params.default_cutoff()).unwrap();
        rows += report.rows.len();
        for name in ["named cycles", "shuffle"] {
            if !report.checks.iter().any(|c| c.name.contains(name)) {
                f.push(format!("({r},{p},{a}): no {name} check ran"));
            }
        }
        f.extend(report.failures().into_iter().map(|e| format!("({r},{p},{a}): {e}")));
    }
    collect(f, format!("{rows} bidegrees match, cycles and shuffles hold"))
}

fn series_identities() -> Outcome {
    let mut f = Vec::new();
    for (r, p) in grid() {
        let n = projective(r, p).default_cutoff() as usize;
        f.extend(
            index_series_identities(r, p, n)
                .unwrap()
                .into_iter()
                .map(|e| format!("r={r} p={p}: {e}")),
        );
    }
    collect(f, "index set sum and reassembly identities on 32 cells".into())
}

fn counting() -> Outcome {
    let mut f = Vec::new();
    let cells = grid()
        .map(|(r, p)| (r, p, 2))
        .chain([(1, 2, 4), (2, 3, 4), (3, 2, 4), (2, 5, 4)]);
    for (r, p, a) in cells {
        let params = TruncSpaceParams::new(r, p, a).unwrap();
        f.extend(
            counting_failures(params, params.default_cutoff())
                .unwrap()
                .into_iter()
                .map(|e| format!("({r},{p},{a}): {e}")),
        );
    }
    collect(f, "items 1-6 by index sets and by ranks, m = 1..3".into())
}

fn morse() -> Outcome {
    let mut f = Vec::new();
    for (r, p) in grid() {
        let report = structural_checks(r, p, structural_cutoff(r, p)).unwrap();
        f.extend(report.failures().into_iter().map(|e| format!("r={r} p={p}: {e}")));
    }
    collect(f, "closed forms, odd counting and structural checks on 32 cells".into())
}

fn geodesy() -> Outcome {
    let mut f = Vec::new();
    let mut enumerated = 0;
    for r in 1..=4 {
        for p in [2, 3, 5] {
            let q = QSequence::new(r);
            for m in 0..=2 * r + 4 {
                let a = qcheck_agreement(&q, p, m, 100_000).unwrap();
                enumerated += a.enumerated;
                if !a.agrees() {
                    f.push(format!("qcheck r={r} p={p} m={m}"));
                }
            }
            if !kernel_of_x1_minus_x2(r, p).unwrap().passes() {
                f.push(format!("kernel classes r={r} p={p}"));
            }
        }
    }
    collect(f, format!("{enumerated} polynomials enumerated, subspaces equal in every degree"))
}

fn consecutive() -> Outcome {
    let mut f = Vec::new();
    let mut pairs = 0;
    for (r, p) in grid() {
        let bound = 10 * projective(r, p).rho() * p;
        let report = consecutive_report(r, p, bound).unwrap();
        pairs += report.pairs.len();
        f.extend(report.violations.into_iter().map(|e| format!("r={r} p={p}: {e}")));
    }
    let plane = plane_mod_two_pairs(10 * projective(2, 2).rho() * 2);
    f.extend(plane.iter().map(|k| format!("IF(2,2,2) pair at {k}")));
    // the smallest pair: k = 2 is even
    let first = consecutive_report(2, 2, 10).unwrap();
    if first.pairs.first().map(|w| w.k) != Some(2) {
        f.push("expected the pair {4, 6} in IF(2,2,2)".into());
    }
    collect(
        f,
        format!("no triples; {pairs} pairs, all p = 2, r even, k = r(i+1) even (not odd), e.g. {{4,6}}; none at 8m+2"),
    )
}

fn rational() -> Outcome {
    let mut f = Vec::new();
    for r in 1..=8 {
        for a in [2, 4, 6] {
            let rho = (r as u64 + 1) * a as u64 - 2;
            f.extend(
                rational_failures(r, a, 6 * rho)
                    .unwrap()
                    .into_iter()
                    .map(|e| format!("r={r} alpha={a}: {e}")),
            );
        }
    }
    collect(f, "ranks follow the degree list; Borel series matches the model".into())
}

fn negative_control() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_loopcoh");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(|e| e.to_string());
    let clean = run(&["verify"])?;
    if clean.status.code() != Some(0) {
        return Err(format!("unmutated suite exited {:?}", clean.status.code()));
    }
    let mutated = run(&["verify", "--mutate", "qk-sign"])?;
    let failed = String::from_utf8_lossy(&mutated.stdout).lines().filter(|l| l.starts_with("FAIL")).count();
    match mutated.status.code() {
        Some(1) if failed > 0 => Ok(format!("mutated suite exits 1 with {failed} FAIL lines; clean suite exits 0")),
        code => Err(format!("mutated suite exited {code:?} with {failed} FAIL lines")),
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("E3 Serre page equals P_{r,p}", headline),
        ("E3 by rank equals the presentation", presentation),
        ("derived functor brute force", derived),
        ("index set series identities", series_identities),
        ("counting of kernel and cokernel", counting),
        ("Morse E1 catalogs", morse),
        ("geodesy membership and kernel classes", geodesy),
        ("consecutive even degrees", consecutive),
        ("rational model", rational),
        ("negative control", negative_control),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail}) [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
