use super::level::{single, Chain, ChainOps, ResolutionLevel, ResolutionParams};
use crate::algebra::{Matrix, Monomial, PrimeField};
use crate::error::{Error, Result};

/// Levels `0..=top` of the de Rham algebras of the almost free simplicial
/// resolution of `F_p[x]/(x^{r+1})`.
#[derive(Debug, Clone)]
pub struct SimplicialResolution {
    pub params: ResolutionParams,
    pub cutoff: u32,
    pub ops: ChainOps,
    pub warnings: Vec<String>,
    levels: Vec<ResolutionLevel>,
}

impl SimplicialResolution {
    pub fn new(params: ResolutionParams, top: usize, cutoff: u32) -> Result<Self> {
        let mut warnings = Vec::new();
        if cutoff < params.y_degree() {
            warnings.push(format!(
                "internal cutoff {cutoff} is below |x^(r+1)| = {}; the first face of y1 is not visible",
                params.y_degree()
            ));
        }
        let levels = (0..=top)
            .map(|q| ResolutionLevel::new(params, q, cutoff))
            .collect();
        Ok(SimplicialResolution {
            params,
            cutoff,
            ops: ChainOps::new(params.p)?,
            warnings,
            levels,
        })
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, q: usize) -> Result<&ResolutionLevel> {
        self.levels.get(q).ok_or(Error::DegreeOverflow {
            requested: q,
            max: self.top(),
        })
    }

    /// `d_i(y_j)` at level `q`, as an element of level `q - 1`.
    fn face_of_y(&self, q: usize, i: usize, j: usize) -> Chain {
        let tgt = &self.levels[q - 1];
        let r = self.params.r;
        if i == 0 && j == 1 {
            single(tgt.monomial(&[(tgt.x(), r + 1)]), 1)
        } else if i < j {
            tgt.generator(tgt.y(j - 1))
        } else if j < q {
            tgt.generator(tgt.y(j))
        } else {
            Chain::new()
        }
    }

    /// Images of the generators of level `q` under the face `d_i`.
    fn face_images(&self, q: usize, i: usize) -> Vec<Chain> {
        let src = &self.levels[q];
        let tgt = &self.levels[q - 1];
        let mut images = vec![Chain::new(); src.nvars()];
        images[src.x()] = tgt.generator(tgt.x());
        images[src.dx()] = tgt.generator(tgt.dx());
        for j in 1..=q {
            let y_image = self.face_of_y(q, i, j);
            images[src.dy(j)] = self.de_rham(q - 1, &y_image);
            images[src.y(j)] = y_image;
        }
        images
    }

    /// Face `d_i: level q -> level q - 1`.
    pub fn face(&self, q: usize, i: usize, c: &Chain) -> Chain {
        assert!(q >= 1 && i <= q, "face d_{i} undefined at level {q}");
        let images = self.face_images(q, i);
        self.ops.hom(c, &images, self.levels[q - 1].variables())
    }

    /// Degeneracy `s_i: level q -> level q + 1`.
    pub fn degeneracy(&self, q: usize, i: usize, c: &Chain) -> Chain {
        assert!(i <= q, "degeneracy s_{i} undefined at level {q}");
        let src = &self.levels[q];
        let tgt = &self.levels[q + 1];
        let mut images = vec![Chain::new(); src.nvars()];
        images[src.x()] = tgt.generator(tgt.x());
        images[src.dx()] = tgt.generator(tgt.dx());
        for j in 1..=q {
            let k = if i >= j { j } else { j + 1 };
            images[src.y(j)] = tgt.generator(tgt.y(k));
            images[src.dy(j)] = tgt.generator(tgt.dy(k));
        }
        self.ops.hom(c, &images, tgt.variables())
    }

    /// The de Rham derivation: `x -> dx`, `y_j -> dy_j`, differentials to 0.
    pub fn de_rham(&self, q: usize, c: &Chain) -> Chain {
        let lvl = &self.levels[q];
        let mut images = vec![Chain::new(); lvl.nvars()];
        images[lvl.x()] = lvl.generator(lvl.dx());
        for j in 1..=q {
            images[lvl.y(j)] = lvl.generator(lvl.dy(j));
        }
        self.ops.derivation(c, &images, lvl.variables())
    }

    /// `theta(dx) = x`, `theta(dy_j) = (r+1) y_j`, zero on `x` and `y_j`.
    pub fn theta(&self, q: usize, c: &Chain) -> Chain {
        let lvl = &self.levels[q];
        let mut images = vec![Chain::new(); lvl.nvars()];
        images[lvl.dx()] = lvl.generator(lvl.x());
        for j in 1..=q {
            images[lvl.dy(j)] = self
                .ops
                .scale(self.params.r as i64 + 1, &lvl.generator(lvl.y(j)));
        }
        self.ops.derivation(c, &images, lvl.variables())
    }

    pub fn multiply(&self, q: usize, a: &Chain, b: &Chain) -> Chain {
        self.ops.mul(a, b, self.levels[q].variables())
    }

    pub fn face_matrix(&self, q: usize, i: usize, d: u32) -> Result<Matrix<PrimeField>> {
        let images = self.face_images(q, i);
        let tgt = &self.levels[q - 1];
        self.ops.matrix(&self.levels[q], d, tgt, d, |c| {
            self.ops.hom(c, &images, tgt.variables())
        })
    }

    pub fn degeneracy_matrix(&self, q: usize, i: usize, d: u32) -> Result<Matrix<PrimeField>> {
        self.ops
            .matrix(&self.levels[q], d, &self.levels[q + 1], d, |c| {
                self.degeneracy(q, i, c)
            })
    }

    pub fn theta_matrix(&self, q: usize, d: u32) -> Result<Matrix<PrimeField>> {
        let lvl = &self.levels[q];
        self.ops.matrix(lvl, d, lvl, d + 1, |c| self.theta(q, c))
    }

    pub fn de_rham_matrix(&self, q: usize, d: u32) -> Result<Matrix<PrimeField>> {
        let lvl = &self.levels[q];
        self.ops.matrix(lvl, d, lvl, d - 1, |c| self.de_rham(q, c))
    }

    /// `omega_i = dy_1 ... dy_i` at level `i`.
    pub fn omega(&self, i: usize) -> Result<Chain> {
        let lvl = self.level(i)?;
        let exps: Vec<(usize, u32)> = (1..=i).map(|j| (lvl.dy(j), 1)).collect();
        Ok(single(lvl.monomial(&exps), 1))
    }

    /// `alpha_i = dx omega_i`.
    pub fn alpha_cycle(&self, i: usize) -> Result<Chain> {
        let lvl = self.level(i)?;
        Ok(self.multiply(i, &lvl.generator(lvl.dx()), &self.omega(i)?))
    }

    /// `beta_i = theta(alpha_i)`.
    pub fn beta_cycle(&self, i: usize) -> Result<Chain> {
        Ok(self.theta(i, &self.alpha_cycle(i)?))
    }

    /// `x omega_i + (r+1) dx sum_k (-1)^k y_k dy_1 .. (dy_k omitted) .. dy_i`.
    pub fn beta_explicit(&self, i: usize) -> Result<Chain> {
        let lvl = self.level(i)?;
        let mut out = self.multiply(i, &lvl.generator(lvl.x()), &self.omega(i)?);
        for k in 1..=i {
            let mut exps = vec![(lvl.dx(), 1), (lvl.y(k), 1)];
            exps.extend((1..=i).filter(|&j| j != k).map(|j| (lvl.dy(j), 1)));
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let coeff = sign * (self.params.r as i64 + 1);
            let term = single(lvl.monomial(&exps), 1);
            out = self.ops.add(&out, &self.ops.scale(coeff, &term));
        }
        Ok(out)
    }

    /// Internal degree of a homogeneous chain, `None` for zero.
    pub fn degree_of(&self, q: usize, c: &Chain) -> Option<u32> {
        c.keys().next().map(|m| self.levels[q].degree(m))
    }

    pub fn unit(&self, q: usize) -> Chain {
        single(Monomial::one(self.levels[q].nvars()), 1)
    }
}
