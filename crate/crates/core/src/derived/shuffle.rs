use super::level::Chain;
use super::resolution::SimplicialResolution;
use crate::error::{Error, Result};

/// All `(i, j)`-shuffles of `0..i+j` as `(mu, nu)` with `|mu| = i`.
pub fn shuffles(i: usize, j: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = i + j;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let mu: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 1).collect();
        let nu: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 0).collect();
        out.push((mu, nu));
    }
    out
}

/// Eilenberg-MacLane shuffle product of `v` at level `i` and `w` at level `j`:
/// `sum (-1)^{eps(mu)} s_nu(v) s_mu(w)`, with `eps(mu) = sum (mu_k - (k - 1))`.
pub fn shuffle_product(
    res: &SimplicialResolution,
    i: usize,
    v: &Chain,
    j: usize,
    w: &Chain,
) -> Result<Chain> {
    if i + j > res.top() {
        return Err(Error::DegreeOverflow {
            requested: i + j,
            max: res.top(),
        });
    }
    let mut out = Chain::new();
    for (mu, nu) in shuffles(i, j) {
        let eps: usize = mu.iter().enumerate().map(|(k, m)| m - k).sum();
        let mut sv = v.clone();
        for (step, &s) in nu.iter().enumerate() {
            sv = res.degeneracy(i + step, s, &sv);
        }
        let mut sw = w.clone();
        for (step, &s) in mu.iter().enumerate() {
            sw = res.degeneracy(j + step, s, &sw);
        }
        let term = res.multiply(i + j, &sv, &sw);
        let term = if eps % 2 == 1 {
            res.ops.scale(-1, &term)
        } else {
            term
        };
        out = res.ops.add(&out, &term);
    }
    Ok(out)
}
