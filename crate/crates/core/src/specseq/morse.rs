use serde::{Deserialize, Serialize};

use crate::algebra::{FieldTag, IntPoly, Presentation, Variable};
use crate::error::Result;
use crate::geodesy::{projective_bundle_ring_with, unit_tangent_ring, QSequence};
use crate::series::{PowerSeries, RationalSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColumnKind {
    /// The constant loops.
    Base,
    /// `u`-torsion: columns `n` with `p` not dividing `n`.
    Torsion,
    /// Free over `F_p[u]`: columns `pm`, and every column `n >= 1` in the
    /// non-equivariant sequence.
    Free,
}

/// One named generator of a column, with its total degree and filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseGenerator {
    pub name: String,
    pub total_degree: u64,
    pub filtration: u64,
    pub free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseColumn {
    pub n: u64,
    pub kind: ColumnKind,
    /// Total degree of the Thom class `alpha_n`.
    pub shift: u64,
    /// Dimensions by total degree up to the catalog cutoff.
    pub series: PowerSeries,
    pub generators: Vec<MorseGenerator>,
}

/// The `E_1` page of the energy filtration spectral sequence, column by column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseE1Catalog {
    pub r: u32,
    pub p: u64,
    pub equivariant: bool,
    pub cutoff: u64,
    pub columns: Vec<MorseColumn>,
}

impl MorseE1Catalog {
    pub fn column(&self, n: u64) -> Option<&MorseColumn> {
        self.columns.iter().find(|c| c.n == n)
    }

    /// Sum of the column series.
    pub fn total_series(&self) -> PowerSeries {
        self.columns
            .iter()
            .fold(PowerSeries::zero(self.cutoff as usize), |acc, c| acc.add(&c.series))
    }
}

/// Total degree of `alpha_n`: the dimension `2r(n-1) + 1` of the negative bundle.
pub fn thom_shift(r: u32, n: u64) -> u64 {
    2 * r as u64 * (n - 1) + 1
}

fn truncated_line(r: u32, p: u64) -> Result<Presentation> {
    let vars = vec![Variable::poly("x", 2)];
    let rel = IntPoly::var(1, 0).pow(r + 1, &vars);
    Presentation::new(vars, vec![rel], crate::algebra::Coefficients::Field(FieldTag::prime(p)?))
}

/// Dimensions of a finite ring, degrees `0..=top`, with basis names.
fn finite_ring(pres: &Presentation, p: u64, top: u32) -> Result<(Vec<usize>, Vec<Vec<String>>)> {
    let ring = pres.over_prime(p, top)?;
    let names = (0..=top).map(|d| ring.basis_names(d)).collect::<Result<_>>()?;
    Ok((ring.dims(), names))
}

fn shifted(dims: &[usize], shift: u64, cutoff: u64) -> PowerSeries {
    PowerSeries::from_degrees(
        dims.iter()
            .enumerate()
            .flat_map(|(d, &k)| std::iter::repeat_n(d as u64 + shift, k)),
        cutoff as usize,
    )
}

fn named(names: &[Vec<String>], prefix: &str, shift: u64, n: u64, free: bool) -> Vec<MorseGenerator> {
    names
        .iter()
        .enumerate()
        .flat_map(|(d, list)| {
            list.iter().map(move |name| MorseGenerator {
                name: if name == "1" {
                    prefix.to_string()
                } else {
                    format!("{prefix}*{name}")
                },
                total_degree: d as u64 + shift,
                filtration: n,
                free,
            })
        })
        .collect()
}

pub fn morse_e1(r: u32, p: u64, equivariant: bool, cutoff: u64) -> Result<MorseE1Catalog> {
    morse_e1_with(&QSequence::new(r), p, equivariant, cutoff)
}

/// The catalog with the geodesic rings built from the given `Q` sequence.
pub fn morse_e1_with(
    q: &QSequence,
    p: u64,
    equivariant: bool,
    cutoff: u64,
) -> Result<MorseE1Catalog> {
    let r = q.r;
    let tag = FieldTag::prime(p)?;
    let top = 4 * r + 2;
    let (line, line_names) = finite_ring(&truncated_line(r, p)?, p, top)?;
    let (tangent, tangent_names) = finite_ring(&unit_tangent_ring(r, p)?, p, top)?;
    let (bundle, bundle_names) = finite_ring(&projective_bundle_ring_with(q, tag)?, p, top)?;
    let divisible = (r as u64 + 1).is_multiple_of(p);

    let mut columns = Vec::new();
    let base = shifted(&line, 0, cutoff);
    columns.push(MorseColumn {
        n: 0,
        kind: ColumnKind::Base,
        shift: 0,
        series: if equivariant { base.div_one_minus(2) } else { base },
        generators: named(&line_names, "1", 0, 0, equivariant),
    });
    let mut n = 1;
    while thom_shift(r, n) <= cutoff {
        let shift = thom_shift(r, n);
        let alpha = format!("alpha{n}");
        let column = if !equivariant {
            MorseColumn {
                n,
                kind: ColumnKind::Free,
                shift,
                series: shifted(&tangent, shift, cutoff),
                generators: named(&tangent_names, &alpha, shift, n, false),
            }
        } else if n % p != 0 {
            MorseColumn {
                n,
                kind: ColumnKind::Torsion,
                shift,
                series: shifted(&bundle, shift, cutoff),
                generators: named(&bundle_names, &alpha, shift, n, false),
            }
        } else {
            MorseColumn {
                n,
                kind: ColumnKind::Free,
                shift,
                series: shifted(&tangent, shift, cutoff).div_one_minus(2),
                generators: free_generator_table(r, n, divisible),
            }
        };
        columns.push(column);
        n += 1;
    }
    Ok(MorseE1Catalog {
        r,
        p,
        equivariant,
        cutoff,
        columns,
    })
}

/// The free `F_p[u]`-generators of column `n = pm`.
pub fn free_generator_table(r: u32, n: u64, divisible: bool) -> Vec<MorseGenerator> {
    let r64 = r as u64;
    let gen = |name: String, total_degree: u64| MorseGenerator {
        name,
        total_degree,
        filtration: n,
        free: true,
    };
    let power = |i: u64| match i {
        0 => String::new(),
        1 => "*x".to_string(),
        _ => format!("*x^{i}"),
    };
    let top = if divisible { r64 } else { r64 - 1 };
    let mut out: Vec<MorseGenerator> = (0..=top)
        .map(|i| gen(format!("alpha{n}{}", power(i)), 2 * r64 * (n - 1) + 2 * i + 1))
        .collect();
    for i in 0..=top {
        out.push(if divisible {
            gen(format!("zeta{n}{}", power(i)), 2 * r64 * n + 2 * i)
        } else {
            gen(format!("zetabar{n}{}", power(i)), 2 * r64 * n + 2 + 2 * i)
        });
    }
    out
}

/// `(1 - t^{2r+2}) / ((1-t)(1-t^2)(1-t^{2pr}))`, or with numerator
/// `1 - t^{2r+2} - t^{2pr} + t^{2pr+2}` when `p` does not divide `r + 1`.
pub fn morse_closed_form(r: u32, p: u64) -> RationalSeries {
    let (r, p) = (r as usize, p as usize);
    let den = [1, 2, 2 * p * r];
    if (r + 1) % p == 0 {
        RationalSeries::from_terms(&[(0, 1), (2 * r + 2, -1)], &den)
    } else {
        RationalSeries::from_terms(
            &[(0, 1), (2 * r + 2, -1), (2 * p * r, -1), (2 * p * r + 2, 1)],
            &den,
        )
    }
}

/// The same series as the sum of its three column families.
pub fn morse_three_term_form(r: u32, p: u64, cutoff: usize) -> PowerSeries {
    let (r, p) = (r as usize, p as usize);
    let m = |k: usize, c: i64| PowerSeries::monomial(k, c, cutoff);
    let one_minus = |k: usize| m(0, 1).sub(&m(k, 1));
    let line = one_minus(2 * r + 2).div_one_minus(2).div_one_minus(2);
    let base = line.clone();
    let torsion = m(1, 1)
        .mul(&one_minus(2 * r * (p - 1)).div_one_minus(2 * r))
        .mul(&one_minus(2 * r).div_one_minus(2))
        .mul(&one_minus(2 * r + 2).div_one_minus(2))
        .div_one_minus(2 * p * r);
    let free = if (r + 1) % p == 0 {
        line.mul(&m(2 * r * (p - 1) + 1, 1).add(&m(2 * r * p, 1)))
    } else {
        one_minus(2 * r)
            .div_one_minus(2)
            .div_one_minus(2)
            .mul(&m(2 * r * (p - 1) + 1, 1).add(&m(2 * p * r + 2, 1)))
    }
    .div_one_minus(2 * p * r);
    base.add(&torsion).add(&free)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_zero_is_borel_of_constants() {
        let cat = morse_e1(2, 3, true, 12).unwrap();
        let c0 = cat.column(0).unwrap();
        assert_eq!(c0.series.coefficient_line(), "1 0 2 0 3 0 3 0 3 0 3 0 3");
        let plain = morse_e1(2, 3, false, 12).unwrap();
        assert_eq!(plain.column(0).unwrap().series.coefficient_line(), "1 0 1 0 1 0 0 0 0 0 0 0 0");
    }

    #[test]
    fn closed_forms_agree_with_catalog() {
        for r in 1..=6 {
            for p in [2, 3, 5, 7] {
                let n = 12 * r as u64 * p;
                let cat = morse_e1(r, p, true, n).unwrap();
                let total = cat.total_series();
                assert_eq!(total, morse_closed_form(r, p).expand(n as usize), "{r} {p}");
                assert_eq!(total, morse_three_term_form(r, p, n as usize), "{r} {p}");
            }
        }
    }

    #[test]
    fn table_matches_ring_degrees() {
        for r in 1..=5 {
            for p in [2, 3, 5] {
                let cat = morse_e1(r, p, true, 8 * r as u64 * p).unwrap();
                let col = cat.column(p).unwrap();
                let mut table: Vec<u64> = col.generators.iter().map(|g| g.total_degree).collect();
                table.sort();
                let plain = morse_e1(r, p, false, 8 * r as u64 * p).unwrap();
                let c = plain.column(p).unwrap();
                let mut ring: Vec<u64> = c.generators.iter().map(|g| g.total_degree).collect();
                ring.sort();
                assert_eq!(table, ring, "{r} {p}");
            }
        }
    }

    #[test]
    fn leading_coefficient() {
        let cat = morse_e1(2, 3, true, 0).unwrap();
        assert_eq!(cat.total_series().coefficient_line(), "1");
    }
}
