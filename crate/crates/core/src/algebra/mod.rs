//! Exact linear algebra over F_p and Q, and graded quotient rings.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod ring;

pub use field::{is_prime, Coefficients, Field, FieldTag, PrimeField, Rationals};
pub use matrix::{EchelonBasis, Matrix, Rref};
pub use poly::{monomials_of_degree, IntPoly, Monomial, Parity, Variable};
pub use ring::{Coset, Presentation, QuotientRing};

/// Binomial coefficient C(n, k) reduced mod `p`, by Lucas's theorem.
pub fn binomial_mod(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binomial(ni, ki) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    c as u64
}

/// Exact binomial coefficient as i64; panics on overflow.
pub fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: i128 = 1;
    for i in 0..k {
        c = c * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(c).expect("binomial coefficient overflows i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn lucas_matches_exact(n in 0u64..60, k in 0u64..60, pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let exact = binomial(n, k).rem_euclid(p as i64) as u64;
            prop_assert_eq!(binomial_mod(n, k, p), exact);
        }
    }
}
