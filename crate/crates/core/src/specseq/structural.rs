use serde::{Deserialize, Serialize};

use super::morse::{morse_closed_form, morse_e1_with, morse_three_term_form, ColumnKind, MorseE1Catalog};
use crate::error::Result;
use crate::geodesy::{geodesic_borel_ring, presentation_series, unit_tangent_ring, QSequence};
use crate::loopcoh::main_poincare;
use crate::series::PowerSeries;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralCheck {
    pub name: String,
    pub failures: Vec<String>,
}

impl StructuralCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub r: u32,
    pub p: u64,
    pub cutoff: u64,
    pub checks: Vec<StructuralCheck>,
}

impl StructuralReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(StructuralCheck::passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .flat_map(|c| c.failures.iter().map(move |f| format!("{}: {f}", c.name)))
            .collect()
    }
}

/// Default cutoff: six periods `2pr` of the column pattern.
pub fn structural_cutoff(r: u32, p: u64) -> u64 {
    6 * 2 * r as u64 * p
}

pub fn structural_checks(r: u32, p: u64, cutoff: u64) -> Result<StructuralReport> {
    structural_checks_with(&QSequence::new(r), p, cutoff)
}

/// `E_1` series minus the abutment `P_{r,p}`.
pub fn collapse_gap(r: u32, p: u64, cutoff: u64) -> Result<PowerSeries> {
    let e1 = morse_e1_with(&QSequence::new(r), p, true, cutoff)?.total_series();
    Ok(e1.sub(&main_poincare(r, p, cutoff as usize)?))
}

pub fn structural_checks_with(q: &QSequence, p: u64, cutoff: u64) -> Result<StructuralReport> {
    let r = q.r;
    let eq = morse_e1_with(q, p, true, cutoff)?;
    let plain = morse_e1_with(q, p, false, cutoff)?;
    let n = cutoff as usize;
    let mut checks = Vec::new();
    let mut check = |name: &str, failures: Vec<String>| {
        checks.push(StructuralCheck {
            name: name.to_string(),
            failures,
        })
    };

    let total = eq.total_series();
    let mut f = Vec::new();
    if !total.mismatches(&morse_closed_form(r, p).expand(n)).is_empty() {
        f.push("catalog differs from the product closed form".into());
    }
    if !total.mismatches(&morse_three_term_form(r, p, n)).is_empty() {
        f.push("catalog differs from the three-term sum".into());
    }
    check("E1 closed forms", f);

    // (i) even total degrees only in columns divisible by p
    let f = eq
        .columns
        .iter()
        .filter(|c| c.n % p != 0)
        .flat_map(|c| {
            let even = c.series.even_part();
            (0..=n)
                .filter(move |&d| even.coeff_i64(d) != 0)
                .map(move |d| format!("column {} degree {d}", c.n))
        })
        .collect();
    check("even entries only in columns pm", f);

    // (ii) odd part is t times even part
    let shifted_even = total.even_part().shift(1);
    let f = total
        .odd_part()
        .mismatches(&shifted_even)
        .into_iter()
        .map(|d| format!("degree {d}"))
        .collect();
    check("odd series is t times even series", f);

    // (iii) free rank of column pm against the total size of plain column m
    let mut f = Vec::new();
    for c in eq.columns.iter().filter(|c| c.n > 0 && c.n % p == 0) {
        let m = c.n / p;
        let rank = c.generators.iter().filter(|g| g.free).count();
        match plain.column(m) {
            Some(pc) if pc.shift + 4 * r as u64 + 2 <= cutoff => {
                let size: i64 = pc.series.coeffs().iter().map(|x| x.try_into().unwrap_or(0i64)).sum();
                if rank as i64 != size {
                    f.push(format!("column {}: free rank {rank}, plain column {m} has {size}", c.n));
                }
            }
            _ => {}
        }
    }
    check("free rank of column pm equals plain column m", f);

    // (iv) equivariant column pm is F_p[u] tensor plain column pm, and the
    // Borel ring of the iterated geodesics is F_p[u] tensor the unit tangent ring
    let mut f = Vec::new();
    for c in eq.columns.iter().filter(|c| c.n > 0 && c.n % p == 0) {
        let pc = plain.column(c.n).expect("same columns");
        if !c.series.mismatches(&pc.series.div_one_minus(2)).is_empty() {
            f.push(format!("column {}", c.n));
        }
    }
    let small = 4 * r + 6;
    let borel = presentation_series(&geodesic_borel_ring(r, p, p)?.ring, small)?;
    let tangent = presentation_series(&unit_tangent_ring(r, p)?, small)?.div_one_minus(2);
    if !borel.mismatches(&tangent).is_empty() {
        f.push("Borel ring of the p-fold geodesics".into());
    }
    check("equivariant column is F_p[u] tensor plain column", f);

    // (v) abutment bounded by E1; odd classes of each column map onto the plain ones
    let main = main_poincare(r, p, n)?;
    let mut f: Vec<String> = total
        .sub(&main)
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, x)| x.sign() == num_bigint::Sign::Minus)
        .map(|(d, _)| format!("abutment exceeds E1 in degree {d}"))
        .collect();
    for c in &eq.columns {
        let pc = plain.column(c.n).expect("same columns");
        for d in (1..=n).step_by(2) {
            if c.series.coeff_i64(d) < pc.series.coeff_i64(d) {
                f.push(format!("column {} degree {d} not onto", c.n));
            }
        }
    }
    check("abutment bounded by E1 and odd surjectivity", f);

    // differentials cancel classes in pairs starting in even degree
    let gap = total.sub(&main);
    let pairs = gap.div_one_plus_t();
    let mut f = Vec::new();
    if !pairs.is_nonnegative() {
        f.push("negative pair count".into());
    }
    for d in (1..=n).step_by(2) {
        if pairs.coeff_i64(d) != 0 {
            f.push(format!("differential leaving odd degree {d}"));
        }
    }
    check("collapse gap is a sum of (1 + t) t^even", f);

    // odd cohomology of the energy filtration
    let divisible = (r as u64 + 1).is_multiple_of(p);
    let per_column = if divisible { r as i64 + 1 } else { r as i64 };
    let mut f = Vec::new();
    let mut acc = 0;
    for c in &plain.columns {
        if c.n == 0 {
            continue;
        }
        if c.shift + 4 * r as u64 + 2 > cutoff {
            break;
        }
        let odd: i64 = (1..=n).step_by(2).map(|d| c.series.coeff_i64(d)).sum();
        if odd != per_column {
            f.push(format!("column {} has {odd} odd classes", c.n));
        }
        acc += odd;
        if acc != per_column * c.n as i64 {
            f.push(format!("filtration {} has {acc} odd classes", c.n));
        }
    }
    check("odd counting", f);

    Ok(StructuralReport {
        r,
        p,
        cutoff,
        checks,
    })
}

/// True iff `E_1` is no larger than the abutment: no differentials needed.
pub fn e1_equals_abutment(cat: &MorseE1Catalog) -> Result<bool> {
    let main = main_poincare(cat.r, cat.p, cat.cutoff as usize)?;
    Ok(cat.total_series().mismatches(&main).is_empty())
}

/// Columns of the given kind.
pub fn columns_of(cat: &MorseE1Catalog, kind: ColumnKind) -> Vec<u64> {
    cat.columns.iter().filter(|c| c.kind == kind).map(|c| c.n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specseq::morse::morse_e1;

    #[test]
    fn grid_passes() {
        for r in 1..=6 {
            for p in [2, 3, 5, 7] {
                let report = structural_checks(r, p, structural_cutoff(r, p)).unwrap();
                assert!(report.passes(), "{r} {p}: {:?}", report.failures());
            }
        }
    }

    #[test]
    fn circle_case_needs_no_differentials() {
        let cat = morse_e1(1, 2, true, 40).unwrap();
        assert!(e1_equals_abutment(&cat).unwrap());
    }

    #[test]
    fn plane_mod_two_has_differentials() {
        let cat = morse_e1(2, 2, true, 40).unwrap();
        assert!(!e1_equals_abutment(&cat).unwrap());
        let gap = collapse_gap(2, 2, 40).unwrap();
        assert!(gap.is_nonnegative() && !gap.is_zero());
    }

    #[test]
    fn torsion_columns_listed() {
        let cat = morse_e1(1, 3, true, 20).unwrap();
        assert_eq!(columns_of(&cat, ColumnKind::Free), vec![3, 6, 9]);
        assert_eq!(columns_of(&cat, ColumnKind::Torsion), vec![1, 2, 4, 5, 7, 8, 10]);
    }
}
