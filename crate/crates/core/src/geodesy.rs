//! Cohomology of Grassmannians, of the space of oriented geodesics of
//! `CP^r`, of its unit tangent bundle, and of the Borel constructions of the
//! critical manifolds of the energy functional.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    Coefficients, Field, FieldTag, IntPoly, Matrix, Monomial, PrimeField, Presentation,
    QuotientRing, Variable,
};
use crate::error::{Error, Result};
use crate::series::{PowerSeries, RationalSeries};

/// Default ring cutoff `2 (r+1) 2 p + 8`.
pub fn default_ring_cutoff(r: u32, p: u64) -> u32 {
    (4 * (r as u64 + 1) * p + 8) as u32
}

fn check_rank(r: u32) -> Result<()> {
    if r == 0 {
        Err(Error::ZeroRank)
    } else {
        Ok(())
    }
}

fn field_coefficients(tag: FieldTag) -> Coefficients {
    Coefficients::Field(tag)
}

/// `phi_0 .. phi_{r+1}` in `c1` (degree 2) and `c2` (degree 4).
pub fn phi_sequence(r: u32) -> Vec<IntPoly> {
    let vars = grassmann_variables();
    let c1 = IntPoly::var(2, 0);
    let c2 = IntPoly::var(2, 1);
    let mut phis = vec![IntPoly::constant(2, 1), c1.scale(-1)];
    for i in 2..=(r as usize + 1) {
        let next = c1
            .mul(&phis[i - 1], &vars)
            .add(&c2.mul(&phis[i - 2], &vars))
            .scale(-1);
        phis.push(next);
    }
    phis.truncate(r as usize + 2);
    phis
}

fn grassmann_variables() -> Vec<Variable> {
    vec![Variable::poly("c1", 2), Variable::poly("c2", 4)]
}

/// `H^*(Gr_2(C^{r+1}))` as `F[c1, c2]/(phi_r, phi_{r+1})`.
pub fn grassmann_ring(r: u32, field: FieldTag) -> Result<Presentation> {
    check_rank(r)?;
    let phis = phi_sequence(r);
    Presentation::new(
        grassmann_variables(),
        vec![phis[r as usize].clone(), phis[r as usize + 1].clone()],
        field_coefficients(field),
    )
}

/// The polynomials `Q_0 .. Q_{r+1}` in `x1, x2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSequence {
    pub r: u32,
    pub polys: Vec<IntPoly>,
}

impl QSequence {
    pub fn new(r: u32) -> Self {
        let polys = (0..=r + 1).map(q_poly).collect();
        QSequence { r, polys }
    }

    /// A deliberately wrong sequence: the sign of the `x1^k` term of every
    /// `Q_k`, `k >= 2`, is flipped. Used to check that the verifier notices.
    pub fn mutated(r: u32) -> Self {
        let polys = (0..=r + 1)
            .map(|k| {
                let mut q = q_poly(k);
                if k >= 2 {
                    let m = Monomial(vec![k, 0]);
                    let c = q.coefficient(&m);
                    q.add_term(m, -2 * c);
                }
                q
            })
            .collect();
        QSequence { r, polys }
    }

    pub fn q(&self, k: u32) -> &IntPoly {
        &self.polys[k as usize]
    }
}

pub fn projective_variables() -> Vec<Variable> {
    vec![Variable::poly("x1", 2), Variable::poly("x2", 2)]
}

/// `Q_k = sum_{i=0}^k x1^i x2^{k-i}`.
pub fn q_poly(k: u32) -> IntPoly {
    poly_from_coefficients(&vec![1; k as usize + 1])
}

/// `sum_i p_i x1^i x2^{m-i}` from `[p_0, .., p_m]`.
pub fn poly_from_coefficients(coeffs: &[i64]) -> IntPoly {
    let m = coeffs.len() as u32 - 1;
    let mut p = IntPoly::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        p.add_term(Monomial(vec![i as u32, m - i as u32]), c);
    }
    p
}

/// `H^*` of the space of oriented geodesics: `F[x1, x2]/(Q_r, Q_{r+1})`.
pub fn projective_bundle_ring(r: u32, field: FieldTag) -> Result<Presentation> {
    projective_bundle_ring_with(&QSequence::new(r), field)
}

pub fn projective_bundle_ring_with(q: &QSequence, field: FieldTag) -> Result<Presentation> {
    check_rank(q.r)?;
    Presentation::new(
        projective_variables(),
        vec![q.q(q.r).clone(), q.q(q.r + 1).clone()],
        field_coefficients(field),
    )
}

/// `(1 - t^{2r})(1 - t^{2r+2}) / (1 - t^2)^2`.
pub fn projective_bundle_series(r: u32) -> RationalSeries {
    let a = RationalSeries::from_terms(&[(0, 1), (2 * r as usize, -1)], &[2]);
    let b = RationalSeries::from_terms(&[(0, 1), (2 * r as usize + 2, -1)], &[2]);
    a.mul(&b)
}

/// Membership in `(Q_r, Q_{r+1})` read off the coefficients `[p_0, .., p_m]`
/// of `sum p_i x1^i x2^{m-i}` over `F_p`.
pub fn qcheck_membership(coeffs: &[i64], r: u32, p: u64) -> bool {
    let m = coeffs.len() as i64 - 1;
    if m < r as i64 {
        // below the degree of Q_r the ideal is zero
        return coeffs.iter().all(|c| c.rem_euclid(p as i64) == 0);
    }
    let lo = (m - r as i64).max(0);
    let hi = m.min(r as i64);
    if lo > hi {
        return true;
    }
    let first = coeffs[lo as usize].rem_euclid(p as i64);
    (lo..=hi).all(|i| coeffs[i as usize].rem_euclid(p as i64) == first)
}

/// `a_k = x1^k sum_{i=0}^{r-1} (i+1) x1^i x2^{r-1-i}`.
pub fn a_class(r: u32, k: u32) -> IntPoly {
    let mut p = IntPoly::zero();
    for i in 0..r {
        p.add_term(Monomial(vec![k + i, r - 1 - i]), i as i64 + 1);
    }
    p
}

/// Result of comparing the coefficient criterion with linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QcheckAgreement {
    pub r: u32,
    pub p: u64,
    pub m: u32,
    /// Polynomials enumerated one by one (zero when the space was too large).
    pub enumerated: u64,
    /// Coefficient vectors where the two disagree.
    pub disagreements: Vec<Vec<i64>>,
    /// The criterion's solution space equals the ideal's degree-`m` piece.
    pub subspaces_equal: bool,
}

impl QcheckAgreement {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty() && self.subspaces_equal
    }
}

/// Compare [`qcheck_membership`] with ideal membership in degree `2m`, for
/// every coefficient vector when there are at most `enumeration_limit`, and
/// always as an equality of subspaces.
pub fn qcheck_agreement(
    q: &QSequence,
    p: u64,
    m: u32,
    enumeration_limit: u64,
) -> Result<QcheckAgreement> {
    let r = q.r;
    let pres = projective_bundle_ring_with(q, FieldTag::prime(p)?)?;
    let ring = pres.over_prime(p, 2 * m)?;
    let n = m as usize + 1;
    let mut disagreements = Vec::new();
    let mut enumerated = 0;
    let total = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total <= enumeration_limit as u128 {
        let mut v = vec![0i64; n];
        loop {
            let poly = poly_from_coefficients(&v);
            let member = poly.is_zero() || ring.contains(&poly)?;
            if member != qcheck_membership(&v, r, p) {
                disagreements.push(v.clone());
            }
            enumerated += 1;
            if !odometer(&mut v, p as i64) {
                break;
            }
        }
    }
    // criterion space: free coordinates outside [lo, hi], one shared value
    // inside; below degree r it is zero
    let mut generators: Vec<Vec<i64>> = Vec::new();
    if m >= r {
        let lo = (m - r) as usize;
        let hi = (m as usize).min(r as usize);
        for i in (0..n).filter(|&i| i < lo || i > hi) {
            let mut e = vec![0; n];
            e[i] = 1;
            generators.push(e);
        }
        if lo <= hi {
            let mut e = vec![0; n];
            e[lo..=hi].fill(1);
            generators.push(e);
        }
    }
    let mut inside = true;
    for g in &generators {
        let poly = poly_from_coefficients(g);
        inside &= ring.contains(&poly)?;
    }
    let ideal_dim = n - ring.dim(2 * m)?;
    let subspaces_equal = inside && ideal_dim == generators.len();
    Ok(QcheckAgreement {
        r,
        p,
        m,
        enumerated,
        disagreements,
        subspaces_equal,
    })
}

fn odometer(v: &mut [i64], base: i64) -> bool {
    for x in v.iter_mut() {
        *x += 1;
        if *x < base {
            return true;
        }
        *x = 0;
    }
    false
}

/// Kernel and cokernel of multiplication by `x1 - x2` on
/// `F_p[x1, x2]/(Q_r, Q_{r+1})`, and the classes `a_k` spanning the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub r: u32,
    pub p: u64,
    /// `(degree, kernel dim, cokernel dim in degree + 2)`.
    pub per_degree: Vec<(u32, usize, usize)>,
    pub kernel_total: usize,
    /// Cokernel of the map, including degree 0 of the target.
    pub cokernel_total: usize,
    pub expected_total: usize,
    /// Indices `k` of the classes `a_k` that should span the kernel.
    pub a_indices: Vec<u32>,
    /// Each `a_k` is killed by `x1 - x2`.
    pub a_in_kernel: bool,
    /// The `a_k` span the kernel in each degree.
    pub a_span_kernel: bool,
    /// `(x2 - x1) a_k = x1^k (Q_r - (r+1) x1^r)` holds as cosets.
    pub identity_holds: bool,
    /// Representatives of a kernel basis per degree, as rendered cosets.
    pub kernel_basis: Vec<(u32, Vec<String>)>,
}

impl KernelReport {
    pub fn passes(&self) -> bool {
        self.kernel_total == self.expected_total
            && self.cokernel_total == self.expected_total
            && self.a_in_kernel
            && self.a_span_kernel
            && self.identity_holds
    }
}

pub fn kernel_of_x1_minus_x2(r: u32, p: u64) -> Result<KernelReport> {
    kernel_of_x1_minus_x2_with(&QSequence::new(r), p)
}

pub fn kernel_of_x1_minus_x2_with(q: &QSequence, p: u64) -> Result<KernelReport> {
    let r = q.r;
    check_rank(r)?;
    let field = PrimeField::new(p)?;
    let vars = projective_variables();
    let top = 4 * r + 2;
    let ring = projective_bundle_ring_with(q, field.tag())?.over_prime(p, top + 2)?;
    let diff = poly_from_coefficients(&[-1, 1]);
    let diff_coset = ring.coset_of_poly(&diff)?;
    let divisible = (r as u64 + 1).is_multiple_of(p);
    let a_indices: Vec<u32> = if divisible { (0..=r).collect() } else { (1..=r).collect() };
    let expected_total = if divisible { r as usize + 1 } else { r as usize };

    let mut per_degree = Vec::new();
    let mut kernel_basis = Vec::new();
    let mut kernel_total = 0;
    let mut cokernel_total = ring.dim(0)?;
    let mut a_in_kernel = true;
    let mut a_span_kernel = true;
    for d in (0..=top).step_by(2) {
        let src = ring.dim(d)?;
        let tgt = ring.dim(d + 2)?;
        let columns: Vec<Vec<u64>> = (0..src)
            .map(|k| {
                let b = ring.basis_coset(d, k)?;
                Ok(ring.multiply(&diff_coset, &b)?.coords)
            })
            .collect::<Result<_>>()?;
        let m = Matrix::from_columns(field, tgt, &columns);
        let rank = m.rank();
        let kernel = m.kernel_basis();
        kernel_total += kernel.len();
        cokernel_total += tgt - rank;
        per_degree.push((d, kernel.len(), tgt - rank));
        if !kernel.is_empty() {
            let names = ring.basis_names(d)?;
            let rendered = kernel.iter().map(|v| render_vector(&field, v, &names)).collect();
            kernel_basis.push((d, rendered));
        }
        // a_k lives in degree 2(k + r - 1)
        let a_here: Vec<Vec<u64>> = a_indices
            .iter()
            .filter(|&&k| 2 * (k + r - 1) == d)
            .map(|&k| Ok(ring.coset_of_poly(&a_class(r, k))?.coords))
            .collect::<Result<_>>()?;
        for a in &a_here {
            a_in_kernel &= m.mul_vec(a).iter().all(|x| *x == 0);
        }
        let a_rank = Matrix::from_columns(field, src, &a_here).rank();
        a_span_kernel &= a_rank == kernel.len();
    }

    let mut identity_holds = true;
    let neg_diff = diff.scale(-1);
    for &k in &a_indices {
        let lhs = neg_diff.mul(&a_class(r, k), &vars);
        let x1k = IntPoly::monomial(Monomial(vec![k, 0]), 1);
        let correction = IntPoly::monomial(Monomial(vec![r, 0]), r as i64 + 1);
        let rhs = x1k.mul(&q.q(r).sub(&correction), &vars);
        let lc = ring.coset_of_poly(&lhs)?;
        let rc = ring.coset_of_poly(&rhs)?;
        identity_holds &= lc == rc;
    }

    Ok(KernelReport {
        r,
        p,
        per_degree,
        kernel_total,
        cokernel_total,
        expected_total,
        a_indices,
        a_in_kernel,
        a_span_kernel,
        identity_holds,
        kernel_basis,
    })
}

fn render_vector(field: &PrimeField, v: &[u64], names: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(names)
        .filter(|(c, _)| !field.is_zero(c))
        .map(|(c, n)| if *c == 1 { n.clone() } else { format!("{c}*{n}") })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// `H^*(S(tau CP^r); F_p)`: `F_p[x, s]/(x^{r+1}, s^2)` with `|s| = 2r - 1` when
/// `p | r + 1`, otherwise `F_p[x, sbar]/(x^r, sbar^2)` with `|sbar| = 2r + 1`.
pub fn unit_tangent_ring(r: u32, p: u64) -> Result<Presentation> {
    check_rank(r)?;
    let tag = FieldTag::prime(p)?;
    let (height, odd) = if (r as u64 + 1).is_multiple_of(p) {
        (r + 1, Variable::exterior("s", 2 * r - 1))
    } else {
        (r, Variable::exterior("sbar", 2 * r + 1))
    };
    let vars = vec![Variable::poly("x", 2), odd];
    let x = IntPoly::var(2, 0);
    let rel = x.pow(height, &vars);
    Presentation::new(vars, vec![rel], field_coefficients(tag))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BorelCase {
    Coprime,
    DivisibleDividing,
    DivisibleNotDividing,
}

/// `H^*(ET x_T S(tau CP^r)^{(n)}; F_p)` for the `n`-fold iterated critical
/// manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeodesicBorelPresentation {
    pub r: u32,
    pub p: u64,
    pub n: u64,
    pub case: BorelCase,
    pub ring: Presentation,
}

pub fn geodesic_borel_ring(r: u32, p: u64, n: u64) -> Result<GeodesicBorelPresentation> {
    geodesic_borel_ring_with(&QSequence::new(r), p, n)
}

pub fn geodesic_borel_ring_with(
    q: &QSequence,
    p: u64,
    n: u64,
) -> Result<GeodesicBorelPresentation> {
    let r = q.r;
    check_rank(r)?;
    if n == 0 {
        return Err(Error::Invalid("iteration index n must be positive".into()));
    }
    let tag = FieldTag::prime(p)?;
    let (case, ring) = if !n.is_multiple_of(p) {
        (BorelCase::Coprime, projective_bundle_ring_with(q, tag)?)
    } else {
        let (case, height, odd) = if (r as u64 + 1).is_multiple_of(p) {
            (BorelCase::DivisibleDividing, r + 1, Variable::exterior("s", 2 * r - 1))
        } else {
            (
                BorelCase::DivisibleNotDividing,
                r,
                Variable::exterior("sbar", 2 * r + 1),
            )
        };
        let vars = vec![Variable::poly("u", 2), Variable::poly("x", 2), odd];
        let rel = IntPoly::var(3, 1).pow(height, &vars);
        (case, Presentation::new(vars, vec![rel], field_coefficients(tag))?)
    };
    Ok(GeodesicBorelPresentation {
        r,
        p,
        n,
        case,
        ring,
    })
}

/// Series of a presentation from degreewise linear algebra.
pub fn presentation_series(pres: &Presentation, cutoff: u32) -> Result<PowerSeries> {
    Ok(PowerSeries::from_dims(&pres.dims(cutoff)?))
}

/// Dimensions of `ring` in degrees `0..=cutoff`, as a convenience for callers
/// holding an already reduced ring.
pub fn ring_series<F: Field>(ring: &QuotientRing<F>) -> PowerSeries {
    PowerSeries::from_dims(&ring.dims())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldTag {
        FieldTag::Rationals
    }

    #[test]
    fn grassmannians() {
        assert_eq!(grassmann_ring(1, q()).unwrap().dims(4).unwrap(), vec![1, 0, 0, 0, 0]);
        assert_eq!(grassmann_ring(2, q()).unwrap().dims(4).unwrap(), vec![1, 0, 1, 0, 1]);
        let gr24 = grassmann_ring(3, FieldTag::PrimeField(2)).unwrap();
        assert_eq!(gr24.degree_basis(4).unwrap().len(), 2);
        assert_eq!(
            gr24.with_coefficients(Coefficients::Integers).degree_basis(4),
            Err(Error::FieldRequired)
        );
    }

    #[test]
    fn phi_recursion() {
        let vars = grassmann_variables();
        let phis = phi_sequence(3);
        let c1 = IntPoly::var(2, 0);
        let c2 = IntPoly::var(2, 1);
        assert_eq!(phis[2], c1.mul(&c1, &vars).sub(&c2));
        let phi3 = c1.pow(3, &vars).scale(-1).add(&c1.mul(&c2, &vars).scale(2));
        assert_eq!(phis[3], phi3);
    }

    #[test]
    fn q_recursion_and_diagonal() {
        let vars = projective_variables();
        let qs = QSequence::new(8);
        let s = poly_from_coefficients(&[1, 1]);
        let prod = IntPoly::monomial(Monomial(vec![1, 1]), 1);
        for i in 2..=9 {
            let rec = s.mul(qs.q(i - 1), &vars).sub(&prod.mul(qs.q(i - 2), &vars));
            assert_eq!(&rec, qs.q(i));
            let diag: i64 = qs.q(i).terms.values().sum();
            assert_eq!(diag, i as i64 + 1);
        }
    }

    #[test]
    fn projective_bundle_dims() {
        for r in 1..=4 {
            for tag in [q(), FieldTag::PrimeField(2), FieldTag::PrimeField(5)] {
                let pres = projective_bundle_ring(r, tag).unwrap();
                let n = 4 * r + 6;
                assert_eq!(
                    presentation_series(&pres, n).unwrap(),
                    projective_bundle_series(r).expand(n as usize)
                );
            }
        }
        let five = projective_bundle_ring(2, FieldTag::PrimeField(5)).unwrap();
        assert_eq!(five.degree_basis(4).unwrap().len(), 2);
        assert_eq!(
            projective_bundle_ring(1, q()).unwrap().dims(4).unwrap(),
            vec![1, 0, 1, 0, 0]
        );
    }

    #[test]
    fn membership_examples() {
        let pres = projective_bundle_ring(2, FieldTag::PrimeField(5)).unwrap();
        let x1_cubed = IntPoly::monomial(Monomial(vec![3, 0]), 1);
        assert!(pres.ideal_membership(&x1_cubed).unwrap());
        assert!(pres.ideal_membership(&q_poly(4)).unwrap());
        let x1sq_x2 = IntPoly::monomial(Monomial(vec![2, 1]), 1);
        assert!(!pres.ideal_membership(&x1sq_x2).unwrap());
        assert!(pres.ideal_membership(&x1_cubed.scale(3)).unwrap());
        assert!(!pres.ideal_membership(&x1sq_x2.scale(3)).unwrap());
        assert!(qcheck_membership(&[0, 0, 0, 1], 2, 5));
        assert!(!qcheck_membership(&[0, 1, 2], 2, 5));
        let bad = IntPoly::monomial(Monomial(vec![1, 0]), 1).add(&x1_cubed);
        assert_eq!(pres.ideal_membership(&bad), Err(Error::Inhomogeneous));
    }

    #[test]
    fn x1_times_top_power_vanishes() {
        for r in 2..=4 {
            let ring = projective_bundle_ring(r, FieldTag::PrimeField(5))
                .unwrap()
                .over_prime(5, 2 * r + 2)
                .unwrap();
            let x1 = ring.coset_of_monomial(&Monomial(vec![1, 0])).unwrap();
            let top = ring.coset_of_monomial(&Monomial(vec![r, 0])).unwrap();
            assert!(ring.is_zero(&ring.multiply(&x1, &top).unwrap()));
            let x2_top = ring.coset_of_monomial(&Monomial(vec![r, 1])).unwrap();
            assert!(!ring.is_zero(&x2_top));
        }
    }

    #[test]
    fn qcheck_small_cases() {
        for r in 1..=3 {
            for p in [2, 3] {
                for m in 0..=2 * r + 2 {
                    let a = qcheck_agreement(&QSequence::new(r), p, m, 5_000).unwrap();
                    assert!(a.agrees(), "{a:?}");
                }
            }
        }
    }

    #[test]
    fn mutated_sequence_is_caught() {
        let caught = (2..=6).any(|m| {
            !qcheck_agreement(&QSequence::mutated(2), 3, m, 5_000)
                .unwrap()
                .agrees()
        });
        assert!(caught);
    }

    #[test]
    fn a_classes_not_in_ideal() {
        for r in 1..=4 {
            let pres = projective_bundle_ring(r, FieldTag::PrimeField(5)).unwrap();
            for k in 0..=r {
                let a = a_class(r, k);
                assert!(!pres.ideal_membership(&a).unwrap(), "r={r} k={k}");
            }
        }
    }

    #[test]
    fn kernel_examples() {
        let rep = kernel_of_x1_minus_x2(2, 3).unwrap();
        assert_eq!(rep.a_indices, vec![0, 1, 2]);
        assert!(rep.passes(), "{rep:?}");
        let rep = kernel_of_x1_minus_x2(2, 2).unwrap();
        assert_eq!(rep.a_indices, vec![1, 2]);
        assert!(rep.passes(), "{rep:?}");
    }

    #[test]
    fn unit_tangent_dims() {
        let ut = unit_tangent_ring(1, 2).unwrap();
        assert_eq!(ut.dims(3).unwrap(), vec![1, 1, 1, 1]);
        let top = |r, p| {
            let dims = unit_tangent_ring(r, p).unwrap().dims(20).unwrap();
            dims.iter().rposition(|&d| d > 0).unwrap()
        };
        assert_eq!(top(2, 3), 7);
        assert_eq!(top(2, 2), 7);
    }

    #[test]
    fn borel_cases() {
        let g = geodesic_borel_ring(2, 3, 1).unwrap();
        assert_eq!(g.case, BorelCase::Coprime);
        assert_eq!(
            presentation_series(&g.ring, 16).unwrap(),
            projective_bundle_series(2).expand(16)
        );
        let g = geodesic_borel_ring(2, 3, 3).unwrap();
        assert_eq!(g.case, BorelCase::DivisibleDividing);
        let expected = RationalSeries::from_terms(&[(0, 1), (3, 1)], &[])
            .mul(&RationalSeries::from_terms(&[(0, 1), (6, -1)], &[2, 2]));
        assert_eq!(presentation_series(&g.ring, 20).unwrap(), expected.expand(20));
        let g = geodesic_borel_ring(2, 2, 2).unwrap();
        assert_eq!(g.case, BorelCase::DivisibleNotDividing);
        let dims = g.ring.dims(12).unwrap();
        let first_odd = (0..dims.len()).find(|&d| d % 2 == 1 && dims[d] > 0);
        assert_eq!(first_odd, Some(5));
    }
}
