use super::model::{LoopAlgebraModel, LoopCase};
use crate::algebra::FieldTag;
use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// The model of `H^*(LX; Q)`: over the rationals every coefficient
/// `(r+1)i + j` is invertible.
pub fn rational_loop_model(r: u32, alpha: u32, cutoff: u64) -> Result<LoopAlgebraModel> {
    check(r, alpha)?;
    Ok(LoopAlgebraModel::build(
        r,
        alpha,
        FieldTag::Rationals,
        LoopCase::Coprime,
        cutoff,
    ))
}

/// Degrees `rho i + alpha j` (`i >= 0`, `1 <= j <= r`) up to `cutoff`, ascending.
pub fn rational_even_degrees(r: u32, alpha: u32, cutoff: u64) -> Result<Vec<u64>> {
    check(r, alpha)?;
    let rho = (r as u64 + 1) * alpha as u64 - 2;
    let mut out: Vec<u64> = (0..=cutoff / rho)
        .flat_map(|i| (1..=r as u64).map(move |j| rho * i + alpha as u64 * j))
        .filter(|&d| d <= cutoff)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `1/(1 - t^2) + sum t^{rho i + alpha j - 1}` up to `cutoff`.
pub fn rational_borel_series(r: u32, alpha: u32, cutoff: usize) -> Result<PowerSeries> {
    let odd = rational_even_degrees(r, alpha, cutoff as u64 + 1)?
        .into_iter()
        .map(|d| d - 1);
    Ok(PowerSeries::one(cutoff)
        .div_one_minus(2)
        .add(&PowerSeries::from_degrees(odd, cutoff)))
}

fn check(r: u32, alpha: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::ZeroRank);
    }
    if alpha == 0 || alpha % 2 == 1 {
        return Err(Error::OddAlpha(alpha));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_two_sphere() {
        let m = rational_loop_model(1, 2, 10).unwrap();
        assert_eq!(m.dims(), vec![1; 11]);
        let s = rational_borel_series(1, 2, 4).unwrap();
        assert_eq!(s.coefficient_line(), "1 1 1 1 1");
    }

    #[test]
    fn differential_is_iso_on_even_degrees() {
        for (r, alpha) in [(1, 2), (2, 2), (3, 4)] {
            let m = rational_loop_model(r, alpha, 60).unwrap();
            let even = rational_even_degrees(r, alpha, 60).unwrap();
            assert_eq!(m.action_rank(alpha as u64), 1);
            for k in 1..=60u64 {
                let expected = usize::from(even.contains(&k));
                assert_eq!(m.action_rank(k), expected, "r={r} alpha={alpha} k={k}");
            }
        }
    }

    #[test]
    fn odd_alpha_rejected() {
        assert_eq!(rational_loop_model(2, 3, 10).unwrap_err(), Error::OddAlpha(3));
    }
}
