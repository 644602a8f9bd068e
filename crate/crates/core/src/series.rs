//! Truncated integer power series and rational closed forms in `t`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::loopcoh::index_sets::IndexSet;

/// Power series `c_0 + c_1 t + ... + c_N t^N` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(cutoff: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); cutoff + 1],
        }
    }

    pub fn one(cutoff: usize) -> Self {
        PowerSeries::monomial(0, 1, cutoff)
    }

    /// `c t^k`, or zero when `k` is beyond the cutoff.
    pub fn monomial(k: usize, c: i64, cutoff: usize) -> Self {
        let mut s = PowerSeries::zero(cutoff);
        if k <= cutoff {
            s.coeffs[k] = BigInt::from(c);
        }
        s
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        PowerSeries {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Counts of each degree in `degrees` that falls within the cutoff.
    pub fn from_degrees<I: IntoIterator<Item = u64>>(degrees: I, cutoff: usize) -> Self {
        let mut s = PowerSeries::zero(cutoff);
        for d in degrees {
            if let Ok(d) = usize::try_from(d) {
                if d <= cutoff {
                    s.coeffs[d] += 1;
                }
            }
        }
        s
    }

    pub fn from_dims(dims: &[usize]) -> Self {
        PowerSeries {
            coeffs: dims.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff_i64(&self, n: usize) -> i64 {
        self.coeffs[n].to_i64().expect("series coefficient exceeds i64")
    }

    pub fn to_i64_vec(&self) -> Vec<i64> {
        (0..=self.cutoff()).map(|n| self.coeff_i64(n)).collect()
    }

    pub fn truncate(&self, cutoff: usize) -> Self {
        assert!(cutoff <= self.cutoff(), "cannot extend a truncated series");
        PowerSeries {
            coeffs: self.coeffs[..=cutoff].to_vec(),
        }
    }

    fn common(&self, other: &PowerSeries) -> usize {
        self.cutoff().min(other.cutoff())
    }

    pub fn add(&self, other: &PowerSeries) -> Self {
        let n = self.common(other);
        PowerSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &PowerSeries) -> Self {
        let n = self.common(other);
        PowerSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &PowerSeries) -> Self {
        let n = self.common(other);
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Multiply by `t^k`, keeping the cutoff.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.cutoff();
        let mut out = vec![BigInt::zero(); n + 1];
        for i in k..=n {
            out[i] = self.coeffs[i - k].clone();
        }
        PowerSeries { coeffs: out }
    }

    /// Divide by `t`. The constant term must vanish; the cutoff drops by one.
    pub fn div_t(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "series has a constant term");
        assert!(self.cutoff() >= 1, "nothing left after dividing by t");
        PowerSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Multiply by `1/(1 - t^k)`.
    pub fn div_one_minus(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut c = self.coeffs.clone();
        for i in k..c.len() {
            let prev = c[i - k].clone();
            c[i] += prev;
        }
        PowerSeries { coeffs: c }
    }

    /// Exact quotient by `1 + t`.
    pub fn div_one_plus_t(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut prev = BigInt::zero();
        for c in &self.coeffs {
            let q = c - &prev;
            out.push(q.clone());
            prev = q;
        }
        PowerSeries { coeffs: out }
    }

    fn part(&self, parity: usize) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == parity { c.clone() } else { BigInt::zero() })
                .collect(),
        }
    }

    pub fn even_part(&self) -> Self {
        self.part(0)
    }

    pub fn odd_part(&self) -> Self {
        self.part(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficientwise `self >= other` on the common range.
    pub fn dominates(&self, other: &PowerSeries) -> bool {
        self.sub(other).is_nonnegative()
    }

    /// Degrees where the two series differ, on the common range.
    pub fn mismatches(&self, other: &PowerSeries) -> Vec<usize> {
        (0..=self.common(other))
            .filter(|&i| self.coeffs[i] != other.coeffs[i])
            .collect()
    }

    /// Space-separated coefficients, as printed by the CLI.
    pub fn coefficient_line(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs == BigInt::from(1);
            match i {
                0 => write!(f, "{abs}")?,
                1 if unit => f.write_str("t")?,
                1 => write!(f, "{abs} t")?,
                _ if unit => write!(f, "t^{i}")?,
                _ => write!(f, "{abs} t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Result<Vec<i64>, _> = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| serde::ser::Error::custom("coefficient exceeds i64"))
            })
            .collect();
        v?.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        if v.is_empty() {
            return Err(serde::de::Error::custom("empty coefficient list"));
        }
        Ok(PowerSeries::from_i64(&v))
    }
}

/// `numerator / Π (1 - t^k)` with an integer polynomial numerator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSeries {
    numerator: Vec<i64>,
    denominator: Vec<usize>,
}

impl RationalSeries {
    pub fn new(numerator: &[i64], denominator: &[usize]) -> Self {
        assert!(
            denominator.iter().all(|&k| k >= 1),
            "denominator factors 1 - t^k need k >= 1"
        );
        let mut den = denominator.to_vec();
        den.sort_unstable();
        let mut num = numerator.to_vec();
        while num.len() > 1 && *num.last().unwrap() == 0 {
            num.pop();
        }
        if num.is_empty() {
            num.push(0);
        }
        RationalSeries {
            numerator: num,
            denominator: den,
        }
    }

    pub fn polynomial(coeffs: &[i64]) -> Self {
        RationalSeries::new(coeffs, &[])
    }

    /// Sparse numerator given as `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(usize, i64)], denominator: &[usize]) -> Self {
        let len = terms.iter().map(|(e, _)| e + 1).max().unwrap_or(1);
        let mut num = vec![0i64; len];
        for (e, c) in terms {
            num[*e] += c;
        }
        RationalSeries::new(&num, denominator)
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[usize] {
        &self.denominator
    }

    pub fn mul(&self, other: &RationalSeries) -> Self {
        let mut num = vec![0i64; self.numerator.len() + other.numerator.len() - 1];
        for (i, a) in self.numerator.iter().enumerate() {
            for (j, b) in other.numerator.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        let mut den = self.denominator.clone();
        den.extend(&other.denominator);
        RationalSeries::new(&num, &den).cancel()
    }

    /// Cancel numerator factors `1 - t^k` against identical denominator factors.
    pub fn cancel(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        // largest factors first, so (1 - t^4) cancels against itself
        den.sort_unstable_by(|a, b| b.cmp(a));
        let mut i = 0;
        while i < den.len() {
            let k = den[i];
            match divide_by_one_minus(&num, k) {
                Some(q) if num.iter().any(|&c| c != 0) => {
                    num = q;
                    den.remove(i);
                }
                _ => i += 1,
            }
        }
        RationalSeries::new(&num, &den)
    }

    pub fn expand(&self, cutoff: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(cutoff);
        for (i, c) in self.numerator.iter().enumerate().take(cutoff + 1) {
            s.coeffs[i] = BigInt::from(*c);
        }
        for &k in &self.denominator {
            s = s.div_one_minus(k);
        }
        s
    }
}

// exact polynomial division by 1 - t^k
fn divide_by_one_minus(num: &[i64], k: usize) -> Option<Vec<i64>> {
    if num.len() <= k {
        return num.iter().all(|&c| c == 0).then(|| vec![0]);
    }
    // q(t)(1 - t^k) = num, solved from the top degree down
    let n = num.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![0i64; n - k + 1];
    for d in (k..=n).rev() {
        let c = -rem[d];
        q[d - k] = c;
        rem[d] = 0;
        rem[d - k] -= c;
    }
    rem.iter().all(|&c| c == 0).then_some(q)
}

fn poly_string(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let a = c.abs();
        match (i, a) {
            (0, _) => out.push_str(&a.to_string()),
            (1, 1) => out.push('t'),
            (1, _) => out.push_str(&format!("{a} t")),
            (_, 1) => out.push_str(&format!("t^{i}")),
            _ => out.push_str(&format!("{a} t^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = poly_string(&self.numerator);
        if self.denominator.is_empty() {
            return f.write_str(&num);
        }
        let den: String = self
            .denominator
            .iter()
            .map(|&k| if k == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{k})") })
            .collect();
        if self.numerator.iter().filter(|&&c| c != 0).count() > 1 {
            write!(f, "({num}) / {den}")
        } else {
            write!(f, "{num} / {den}")
        }
    }
}

/// Indicator series of an index set up to `cutoff`.
pub fn series_of_index_set(set: &IndexSet, cutoff: usize) -> PowerSeries {
    PowerSeries::from_degrees(set.enumerate(cutoff as u64), cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn geometric_series() {
        let s = RationalSeries::new(&[1], &[1]).expand(3);
        assert_eq!(s.to_i64_vec(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn cancelled_factor() {
        let s = RationalSeries::new(&[1, 0, 0, 0, -1], &[1, 2, 4]);
        assert_eq!(s.expand(5).to_i64_vec(), vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(s.cancel().denominator(), &[1, 2]);
    }

    #[test]
    fn zero_numerator() {
        assert!(RationalSeries::new(&[0], &[1, 2]).expand(10).is_zero());
    }

    #[test]
    fn parts() {
        let s = PowerSeries::from_i64(&[1, 1, 2]);
        assert_eq!(s.even_part().to_i64_vec(), vec![1, 0, 2]);
        assert_eq!(s.odd_part().to_i64_vec(), vec![0, 1, 0]);
        let z = PowerSeries::zero(4);
        assert!(z.odd_part().is_zero() && z.even_part().is_zero());
    }

    #[test]
    fn rendering() {
        let s = PowerSeries::from_i64(&[1, 1, 2, 0, -3]);
        assert_eq!(s.to_string(), "1 + t + 2 t^2 - 3 t^4");
        let r = RationalSeries::new(&[1, 0, 0, 0, -1], &[1, 2]);
        assert_eq!(r.to_string(), "(1 - t^4) / (1 - t)(1 - t^2)");
    }

    #[test]
    fn json_round_trip() {
        let s = PowerSeries::from_i64(&[1, 0, 3, -2]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, "[1,0,3,-2]");
        assert_eq!(serde_json::from_str::<PowerSeries>(&text).unwrap(), s);
    }

    fn rational() -> impl Strategy<Value = RationalSeries> {
        (
            prop::collection::vec(-3i64..4, 1..6),
            prop::collection::vec(1usize..6, 0..4),
        )
            .prop_map(|(n, d)| RationalSeries::new(&n, &d))
    }

    proptest! {
        #[test]
        fn expansion_is_multiplicative(a in rational(), b in rational()) {
            let n = 25;
            prop_assert_eq!(a.mul(&b).expand(n), a.expand(n).mul(&b.expand(n)));
        }

        #[test]
        fn parts_sum_back(v in prop::collection::vec(-5i64..5, 1..20)) {
            let s = PowerSeries::from_i64(&v);
            prop_assert_eq!(s.odd_part().add(&s.even_part()), s);
        }

        #[test]
        fn one_plus_t_round_trip(v in prop::collection::vec(-5i64..5, 1..20)) {
            let s = PowerSeries::from_i64(&v);
            let mut f = vec![0i64; v.len()];
            f[0] = 1;
            if f.len() > 1 {
                f[1] = 1;
            }
            let one_plus_t = PowerSeries::from_i64(&f);
            prop_assert_eq!(s.div_one_plus_t().mul(&one_plus_t), s);
        }
    }
}
