use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::field::{Coefficients, Field, FieldTag, PrimeField, Rationals};
use super::matrix::EchelonBasis;
use super::poly::{monomials_of_degree, IntPoly, Monomial, Variable};
use crate::error::{Error, Result};

/// A graded-commutative ring given by generators and integral homogeneous
/// relations. Stating a presentation is free; linear algebra happens in
/// [`QuotientRing`] once a field is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub variables: Vec<Variable>,
    pub relations: Vec<IntPoly>,
    pub coefficients: Coefficients,
}

impl Presentation {
    pub fn new(
        variables: Vec<Variable>,
        relations: Vec<IntPoly>,
        coefficients: Coefficients,
    ) -> Result<Self> {
        if variables.iter().any(|v| v.degree == 0) {
            return Err(Error::Invalid("ring variables need positive degree".into()));
        }
        if relations.iter().any(|r| !r.is_homogeneous(&variables)) {
            return Err(Error::Inhomogeneous);
        }
        Ok(Presentation {
            variables,
            relations,
            coefficients,
        })
    }

    pub fn with_coefficients(&self, coefficients: Coefficients) -> Self {
        Presentation {
            coefficients,
            ..self.clone()
        }
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    fn field_tag(&self) -> Result<FieldTag> {
        match self.coefficients {
            Coefficients::Integers => Err(Error::FieldRequired),
            Coefficients::Field(tag) => Ok(tag),
        }
    }

    /// Basis monomials of degree `d`.
    pub fn degree_basis(&self, d: u32) -> Result<Vec<Monomial>> {
        match self.field_tag()? {
            FieldTag::PrimeField(p) => self.over_prime(p, d)?.basis(d),
            FieldTag::Rationals => self.over_rationals(d)?.basis(d),
        }
    }

    /// Dimensions in degrees `0..=cutoff`.
    pub fn dims(&self, cutoff: u32) -> Result<Vec<usize>> {
        match self.field_tag()? {
            FieldTag::PrimeField(p) => Ok(self.over_prime(p, cutoff)?.dims()),
            FieldTag::Rationals => Ok(self.over_rationals(cutoff)?.dims()),
        }
    }

    pub fn ideal_membership(&self, poly: &IntPoly) -> Result<bool> {
        let tag = self.field_tag()?;
        if poly.is_zero() {
            return Ok(true);
        }
        let d = poly
            .homogeneous_degree(&self.variables)
            .ok_or(Error::Inhomogeneous)?;
        match tag {
            FieldTag::PrimeField(p) => self.over_prime(p, d)?.contains(poly),
            FieldTag::Rationals => self.over_rationals(d)?.contains(poly),
        }
    }

    pub fn over_prime(&self, p: u64, cutoff: u32) -> Result<QuotientRing<PrimeField>> {
        QuotientRing::new(PrimeField::new(p)?, self, cutoff)
    }

    pub fn over_rationals(&self, cutoff: u32) -> Result<QuotientRing<Rationals>> {
        QuotientRing::new(Rationals, self, cutoff)
    }
}

/// Homogeneous element of a quotient ring, in coordinates of
/// [`QuotientRing::basis`] for its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset<E> {
    pub degree: u32,
    pub coords: Vec<E>,
}

#[derive(Debug, Clone)]
struct DegreePiece<F: Field> {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    // relation span in reversed monomial coordinates: pivots land on the
    // largest monomial, so the unpivoted ones form the greedy complement
    relations: EchelonBasis<F>,
    basis: Vec<usize>,
    basis_slot: HashMap<usize, usize>,
}

impl<F: Field> DegreePiece<F> {
    fn build(field: &F, vars: &[Variable], relations: &[(u32, IntPoly)], d: u32) -> Self {
        let monomials = monomials_of_degree(vars, d);
        let n = monomials.len();
        let index: HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut span = EchelonBasis::new(field.clone(), n);
        for (deg, rel) in relations {
            if *deg > d {
                continue;
            }
            for mult in monomials_of_degree(vars, d - deg) {
                let mut v = vec![field.zero(); n];
                let mut any = false;
                for (m, c) in &rel.terms {
                    if let Some((prod, neg)) = mult.mul(m, vars) {
                        let slot = n - 1 - index[&prod];
                        let c = field.from_i64(if neg { -c } else { *c });
                        v[slot] = field.add(&v[slot], &c);
                        any = true;
                    }
                }
                if any {
                    span.insert(&v);
                }
            }
        }
        let pivots: Vec<bool> = {
            let mut p = vec![false; n];
            for s in span.pivots() {
                p[n - 1 - s] = true;
            }
            p
        };
        let basis: Vec<usize> = (0..n).filter(|&i| !pivots[i]).collect();
        let basis_slot = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        DegreePiece {
            monomials,
            index,
            relations: span,
            basis,
            basis_slot,
        }
    }

    fn coords(&self, field: &F, reversed: &[F::Elem]) -> Vec<F::Elem> {
        let n = self.monomials.len();
        let residual = self.relations.reduce(reversed);
        let mut out = vec![field.zero(); self.basis.len()];
        for (slot, x) in residual.into_iter().enumerate() {
            if field.is_zero(&x) {
                continue;
            }
            let k = self.basis_slot[&(n - 1 - slot)];
            out[k] = x;
        }
        out
    }
}

/// Quotient of a graded-commutative polynomial/exterior algebra by a
/// homogeneous ideal, with every degree up to an explicit cutoff reduced.
#[derive(Debug, Clone)]
pub struct QuotientRing<F: Field> {
    field: F,
    variables: Vec<Variable>,
    cutoff: u32,
    pieces: Vec<DegreePiece<F>>,
}

impl<F: Field> QuotientRing<F> {
    pub fn new(field: F, presentation: &Presentation, cutoff: u32) -> Result<Self> {
        let vars = presentation.variables.clone();
        let relations: Vec<(u32, IntPoly)> = presentation
            .relations
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| (r.homogeneous_degree(&vars).unwrap(), r.clone()))
            .collect();
        let pieces = (0..=cutoff)
            .map(|d| DegreePiece::build(&field, &vars, &relations, d))
            .collect();
        Ok(QuotientRing {
            field,
            variables: vars,
            cutoff,
            pieces,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    fn piece(&self, d: u32) -> Result<&DegreePiece<F>> {
        self.pieces.get(d as usize).ok_or(Error::BeyondCutoff {
            degree: d as usize,
            cutoff: self.cutoff as usize,
        })
    }

    pub fn dim(&self, d: u32) -> Result<usize> {
        Ok(self.piece(d)?.basis.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.basis.len()).collect()
    }

    pub fn basis(&self, d: u32) -> Result<Vec<Monomial>> {
        let piece = self.piece(d)?;
        Ok(piece
            .basis
            .iter()
            .map(|&i| piece.monomials[i].clone())
            .collect())
    }

    pub fn basis_names(&self, d: u32) -> Result<Vec<String>> {
        Ok(self
            .basis(d)?
            .iter()
            .map(|m| m.render(&self.variables))
            .collect())
    }

    pub fn zero(&self, d: u32) -> Result<Coset<F::Elem>> {
        Ok(Coset {
            degree: d,
            coords: vec![self.field.zero(); self.dim(d)?],
        })
    }

    pub fn one(&self) -> Coset<F::Elem> {
        self.coset_of_monomial(&Monomial::one(self.variables.len()))
            .expect("degree 0 is always computed")
    }

    pub fn coset_of_monomial(&self, m: &Monomial) -> Result<Coset<F::Elem>> {
        let poly = IntPoly::monomial(m.clone(), 1);
        self.coset_of_poly(&poly)
    }

    /// Normal form of a homogeneous integral polynomial.
    pub fn coset_of_poly(&self, poly: &IntPoly) -> Result<Coset<F::Elem>> {
        if poly.is_zero() {
            return self.zero(0);
        }
        let d = poly
            .homogeneous_degree(&self.variables)
            .ok_or(Error::Inhomogeneous)?;
        let piece = self.piece(d)?;
        let n = piece.monomials.len();
        let mut v = vec![self.field.zero(); n];
        for (m, c) in &poly.terms {
            let slot = n - 1 - piece.index[m];
            v[slot] = self.field.add(&v[slot], &self.field.from_i64(*c));
        }
        Ok(Coset {
            degree: d,
            coords: piece.coords(&self.field, &v),
        })
    }

    pub fn contains(&self, poly: &IntPoly) -> Result<bool> {
        Ok(self.is_zero(&self.coset_of_poly(poly)?))
    }

    pub fn is_zero(&self, c: &Coset<F::Elem>) -> bool {
        c.coords.iter().all(|x| self.field.is_zero(x))
    }

    pub fn add(&self, a: &Coset<F::Elem>, b: &Coset<F::Elem>) -> Coset<F::Elem> {
        assert_eq!(a.degree, b.degree, "adding cosets of different degrees");
        Coset {
            degree: a.degree,
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| self.field.add(x, y))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem, a: &Coset<F::Elem>) -> Coset<F::Elem> {
        Coset {
            degree: a.degree,
            coords: a.coords.iter().map(|x| self.field.mul(c, x)).collect(),
        }
    }

    /// Graded-commutative product of two cosets.
    pub fn multiply(&self, a: &Coset<F::Elem>, b: &Coset<F::Elem>) -> Result<Coset<F::Elem>> {
        let d = a.degree + b.degree;
        let pa = self.piece(a.degree)?;
        let pb = self.piece(b.degree)?;
        let target = self.piece(d)?;
        let n = target.monomials.len();
        let mut v = vec![self.field.zero(); n];
        for (ka, xa) in a.coords.iter().enumerate() {
            if self.field.is_zero(xa) {
                continue;
            }
            let ma = &pa.monomials[pa.basis[ka]];
            for (kb, xb) in b.coords.iter().enumerate() {
                if self.field.is_zero(xb) {
                    continue;
                }
                let mb = &pb.monomials[pb.basis[kb]];
                if let Some((m, neg)) = ma.mul(mb, &self.variables) {
                    let mut c = self.field.mul(xa, xb);
                    if neg {
                        c = self.field.neg(&c);
                    }
                    let slot = n - 1 - target.index[&m];
                    v[slot] = self.field.add(&v[slot], &c);
                }
            }
        }
        Ok(Coset {
            degree: d,
            coords: target.coords(&self.field, &v),
        })
    }

    /// Coset of the `k`-th basis monomial in degree `d`.
    pub fn basis_coset(&self, d: u32, k: usize) -> Result<Coset<F::Elem>> {
        let mut c = self.zero(d)?;
        c.coords[k] = self.field.one();
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn truncated(r: u32, p: u64) -> Presentation {
        let vars = vec![Variable::poly("x", 2)];
        let x = IntPoly::var(1, 0);
        Presentation::new(
            vars.clone(),
            vec![x.pow(r + 1, &vars)],
            Coefficients::Field(FieldTag::PrimeField(p)),
        )
        .unwrap()
    }

    #[test]
    fn truncated_polynomial_basis() {
        let ring = truncated(2, 5);
        assert_eq!(ring.degree_basis(4).unwrap(), vec![Monomial(vec![2])]);
        assert!(ring.degree_basis(6).unwrap().is_empty());
        assert!(ring.degree_basis(3).unwrap().is_empty());
    }

    #[test]
    fn integers_need_a_field() {
        let ring = truncated(2, 5).with_coefficients(Coefficients::Integers);
        assert_eq!(ring.degree_basis(2), Err(Error::FieldRequired));
        let x = IntPoly::var(1, 0);
        assert_eq!(ring.ideal_membership(&x), Err(Error::FieldRequired));
    }

    #[test]
    fn inhomogeneous_rejected() {
        let vars = vec![Variable::poly("x", 2), Variable::poly("y", 4)];
        let bad = IntPoly::var(2, 0).add(&IntPoly::var(2, 1));
        let ring = Presentation::new(
            vars,
            vec![],
            Coefficients::Field(FieldTag::Rationals),
        )
        .unwrap();
        assert_eq!(ring.ideal_membership(&bad), Err(Error::Inhomogeneous));
    }

    #[test]
    fn exterior_square_is_zero() {
        let vars = vec![Variable::poly("x", 2), Variable::exterior("s", 3)];
        let pres = Presentation::new(
            vars,
            vec![IntPoly::var(2, 0).pow(3, &[Variable::poly("x", 2), Variable::exterior("s", 3)])],
            Coefficients::Field(FieldTag::PrimeField(3)),
        )
        .unwrap();
        let ring = pres.over_prime(3, 12).unwrap();
        let s = ring.coset_of_monomial(&Monomial::var(2, 1)).unwrap();
        assert!(ring.is_zero(&ring.multiply(&s, &s).unwrap()));
        let one = ring.one();
        assert_eq!(ring.multiply(&one, &s).unwrap(), s);
        assert_eq!(ring.dims(), vec![1, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn odd_exterior_products_anticommute() {
        let vars = vec![Variable::exterior("a", 1), Variable::exterior("b", 3)];
        let pres =
            Presentation::new(vars, vec![], Coefficients::Field(FieldTag::PrimeField(5))).unwrap();
        let ring = pres.over_prime(5, 4).unwrap();
        let a = ring.coset_of_monomial(&Monomial::var(2, 0)).unwrap();
        let b = ring.coset_of_monomial(&Monomial::var(2, 1)).unwrap();
        let ab = ring.multiply(&a, &b).unwrap();
        let ba = ring.multiply(&b, &a).unwrap();
        assert!(ring.is_zero(&ring.add(&ab, &ba)));
        assert!(!ring.is_zero(&ab));
    }
}
