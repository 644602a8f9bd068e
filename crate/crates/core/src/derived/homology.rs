use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::level::{Chain, ResolutionParams};
use super::resolution::SimplicialResolution;
use crate::algebra::{EchelonBasis, Field, Matrix, PrimeField};
use crate::error::{Error, Result};

/// Normalized chains `N_q = cap_{j=1..q} ker d_j` with differential `d_0`,
/// and their homology, for simplicial degrees `0..=max_simplicial`.
#[derive(Debug, Clone)]
pub struct DerivedComplex {
    pub res: SimplicialResolution,
    pub max_simplicial: usize,
    // normalized[q][d]: basis vectors of N_q in degree d
    normalized: Vec<Vec<Vec<Vec<u64>>>>,
    cells: BTreeMap<(usize, u32), HomologyCell>,
}

#[derive(Debug, Clone)]
struct HomologyCell {
    boundaries: Vec<Vec<u64>>,
    representatives: Vec<Vec<u64>>,
}

impl DerivedComplex {
    pub fn new(params: ResolutionParams, max_simplicial: usize, cutoff: u32) -> Result<Self> {
        let res = SimplicialResolution::new(params, max_simplicial + 1, cutoff)?;
        let field = res.ops.field;
        let normalized: Vec<Vec<Vec<Vec<u64>>>> = (0..=max_simplicial + 1)
            .into_par_iter()
            .map(|q| {
                (0..=cutoff)
                    .map(|d| normalized_basis(&res, q, d))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let keys: Vec<(usize, u32)> = (0..=max_simplicial)
            .flat_map(|q| (0..=cutoff).map(move |d| (q, d)))
            .collect();
        let cells = keys
            .par_iter()
            .map(|&(q, d)| {
                let cell = homology_cell(&res, &normalized, field, q, d)?;
                Ok(((q, d), cell))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(DerivedComplex {
            res,
            max_simplicial,
            normalized,
            cells,
        })
    }

    pub fn params(&self) -> ResolutionParams {
        self.res.params
    }

    pub fn cutoff(&self) -> u32 {
        self.res.cutoff
    }

    fn cell(&self, q: usize, d: u32) -> Result<&HomologyCell> {
        if q > self.max_simplicial {
            return Err(Error::DegreeOverflow {
                requested: q,
                max: self.max_simplicial,
            });
        }
        self.cells.get(&(q, d)).ok_or(Error::BeyondCutoff {
            degree: d as usize,
            cutoff: self.cutoff() as usize,
        })
    }

    pub fn normalized_dim(&self, q: usize, d: u32) -> usize {
        self.normalized[q][d as usize].len()
    }

    pub fn homology_dim(&self, q: usize, d: u32) -> Result<usize> {
        Ok(self.cell(q, d)?.representatives.len())
    }

    pub fn representatives(&self, q: usize, d: u32) -> Result<Vec<Chain>> {
        let lvl = self.res.level(q)?;
        Ok(self
            .cell(q, d)?
            .representatives
            .iter()
            .map(|v| lvl.chain(v, d))
            .collect())
    }

    pub fn in_normalized(&self, q: usize, c: &Chain) -> bool {
        (1..=q).all(|j| self.res.face(q, j, c).is_empty())
    }

    pub fn is_cycle(&self, q: usize, c: &Chain) -> bool {
        q == 0 || self.res.face(q, 0, c).is_empty()
    }

    /// Coordinates of a normalized cycle in the chosen homology basis.
    pub fn homology_coordinates(&self, q: usize, d: u32, c: &Chain) -> Result<Vec<u64>> {
        let cell = self.cell(q, d)?;
        let lvl = self.res.level(q)?;
        let field = self.res.ops.field;
        let v = lvl.vector(c, d)?;
        let nrep = cell.representatives.len();
        let mut columns: Vec<Vec<u64>> = cell.representatives.clone();
        columns.extend(cell.boundaries.iter().cloned());
        columns.push(v);
        let m = Matrix::from_columns(field, lvl.dim(d), &columns);
        let last = columns.len() - 1;
        let kernel = m.kernel_basis();
        let sol = kernel
            .iter()
            .find(|k| !field.is_zero(&k[last]))
            .ok_or_else(|| Error::Invalid("chain is not a normalized cycle".into()))?;
        let scale = field.neg(&field.inv(&sol[last]));
        Ok(sol[..nrep].iter().map(|x| field.mul(x, &scale)).collect())
    }

    pub fn is_nonzero_class(&self, q: usize, d: u32, c: &Chain) -> Result<bool> {
        Ok(self
            .homology_coordinates(q, d, c)?
            .iter()
            .any(|x| *x != 0))
    }

    /// Full table `(q, d) -> dim` of nonzero cells.
    pub fn table(&self) -> BidegreeHomology {
        let dims = self
            .cells
            .iter()
            .filter(|(_, c)| !c.representatives.is_empty())
            .map(|(&(i, j), c)| BidegreeCell {
                i,
                j,
                dim: c.representatives.len(),
            })
            .collect();
        BidegreeHomology {
            params: self.params().into(),
            max_simplicial: self.max_simplicial,
            cutoff: self.cutoff(),
            dims,
        }
    }

    /// Homology of the unnormalized complex with `sum (-1)^j d_j`.
    pub fn unnormalized_dim(&self, q: usize, d: u32) -> Result<usize> {
        let c_dim = self.res.level(q)?.dim(d);
        let rank_out = if q == 0 {
            0
        } else {
            alternating_boundary(&self.res, q, d)?.rank()
        };
        let rank_in = alternating_boundary(&self.res, q + 1, d)?.rank();
        Ok(c_dim - rank_out - rank_in)
    }

    /// Rank of the map induced by the de Rham derivation
    /// `H_q(degree d) -> H_q(degree d - 1)`.
    pub fn de_rham_rank(&self, q: usize, d: u32) -> Result<usize> {
        if d == 0 {
            return Ok(0);
        }
        let src = self.cell(q, d)?;
        let tgt = self.cell(q, d - 1)?;
        let lvl = self.res.level(q)?;
        let field = self.res.ops.field;
        let mut span = EchelonBasis::new(field, lvl.dim(d - 1));
        for b in &tgt.boundaries {
            span.insert(b);
        }
        let base = span.rank();
        for rep in &src.representatives {
            let image = self.res.de_rham(q, &lvl.chain(rep, d));
            span.insert(&lvl.vector(&image, d - 1)?);
        }
        Ok(span.rank() - base)
    }
}

fn normalized_basis(res: &SimplicialResolution, q: usize, d: u32) -> Result<Vec<Vec<u64>>> {
    let dim = res.level(q)?.dim(d);
    if q == 0 {
        return Ok((0..dim)
            .map(|k| {
                let mut e = vec![0; dim];
                e[k] = 1;
                e
            })
            .collect());
    }
    let mut stacked: Option<Matrix<PrimeField>> = None;
    for j in 1..=q {
        let m = res.face_matrix(q, j, d)?;
        stacked = Some(match stacked {
            None => m,
            Some(s) => s.vstack(&m),
        });
    }
    Ok(stacked.expect("q >= 1").kernel_basis())
}

fn homology_cell(
    res: &SimplicialResolution,
    normalized: &[Vec<Vec<Vec<u64>>>],
    field: PrimeField,
    q: usize,
    d: u32,
) -> Result<HomologyCell> {
    let n_q = &normalized[q][d as usize];
    let dim_q = res.level(q)?.dim(d);
    let cycles: Vec<Vec<u64>> = if q == 0 {
        n_q.clone()
    } else {
        let d0 = res.face_matrix(q, 0, d)?;
        let images: Vec<Vec<u64>> = n_q.iter().map(|v| d0.mul_vec(v)).collect();
        let m = Matrix::from_columns(field, d0.rows(), &images);
        m.kernel_basis()
            .iter()
            .map(|coef| combine(field, n_q, coef, dim_q))
            .collect()
    };
    let d0_up = res.face_matrix(q + 1, 0, d)?;
    let boundaries: Vec<Vec<u64>> = normalized[q + 1][d as usize]
        .iter()
        .map(|v| d0_up.mul_vec(v))
        .collect();
    let mut span = EchelonBasis::new(field, dim_q);
    for b in &boundaries {
        span.insert(b);
    }
    let mut representatives = Vec::new();
    for z in cycles {
        if span.insert(&z) {
            representatives.push(z);
        }
    }
    Ok(HomologyCell {
        boundaries,
        representatives,
    })
}

fn combine(field: PrimeField, vectors: &[Vec<u64>], coef: &[u64], dim: usize) -> Vec<u64> {
    let mut out = vec![0; dim];
    for (v, c) in vectors.iter().zip(coef) {
        if *c == 0 {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o = field.add(o, &field.mul(c, x));
        }
    }
    out
}

fn alternating_boundary(res: &SimplicialResolution, q: usize, d: u32) -> Result<Matrix<PrimeField>> {
    let field = res.ops.field;
    let mut total: Option<Matrix<PrimeField>> = None;
    for j in 0..=q {
        let mut m = res.face_matrix(q, j, d)?;
        if j % 2 == 1 {
            for row in 0..m.rows() {
                for col in 0..m.cols() {
                    let x = field.neg(m.get(row, col));
                    m.set(row, col, x);
                }
            }
        }
        total = Some(match total {
            None => m,
            Some(t) => add_matrices(field, &t, &m),
        });
    }
    Ok(total.expect("q >= 0"))
}

fn add_matrices(field: PrimeField, a: &Matrix<PrimeField>, b: &Matrix<PrimeField>) -> Matrix<PrimeField> {
    let mut out = a.clone();
    for row in 0..a.rows() {
        for col in 0..a.cols() {
            out.set(row, col, field.add(a.get(row, col), b.get(row, col)));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub r: u32,
    pub p: u64,
    pub alpha: u32,
}

impl From<ResolutionParams> for ParamsRecord {
    fn from(p: ResolutionParams) -> Self {
        ParamsRecord {
            r: p.r,
            p: p.p,
            alpha: p.alpha,
        }
    }
}

/// Nonzero homology dimensions by `(simplicial degree, internal degree)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BidegreeHomology {
    pub params: ParamsRecord,
    pub max_simplicial: usize,
    pub cutoff: u32,
    pub dims: Vec<BidegreeCell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BidegreeCell {
    pub i: usize,
    pub j: u32,
    pub dim: usize,
}

impl BidegreeHomology {
    pub fn dim(&self, q: usize, d: u32) -> usize {
        self.dims
            .iter()
            .find(|c| c.i == q && c.j == d)
            .map_or(0, |c| c.dim)
    }
}

/// Predicted dimension of `H_q` in internal degree `d`.
pub fn closed_form_dim(params: ResolutionParams, q: usize, d: u32) -> usize {
    closed_form_classes(params, q, d).len()
}

/// Names of the predicted basis classes in bidegree `(q, d)`.
pub fn closed_form_classes(params: ResolutionParams, q: usize, d: u32) -> Vec<String> {
    let ResolutionParams { r, p, alpha: a } = params;
    let w = q as u32 * (params.y_degree() - 1);
    let mut out = Vec::new();
    if (r as u64 + 1).is_multiple_of(p) {
        for j in 0..=r {
            for eps in 0..=1 {
                if a * j + eps * (a - 1) + w == d {
                    out.push(format!("x^{j} dx^{eps} g{q}"));
                }
            }
        }
    } else if q == 0 {
        if d == 0 {
            out.push("1".into());
        }
        for j in 1..=r {
            if a * j == d {
                out.push(format!("x^{j}"));
            }
        }
        for j in 0..r {
            if a * j + a - 1 == d {
                out.push(format!("x^{j} dx"));
            }
        }
    } else {
        for j in 1..=r {
            let a_deg = w + a - 1 + a * (j - 1);
            if a_deg == d {
                out.push(format!("b0^{} a{q}", j - 1));
            }
            if a_deg + 1 == d {
                out.push(format!("b0^{} b{q}", j - 1));
            }
        }
    }
    out
}
