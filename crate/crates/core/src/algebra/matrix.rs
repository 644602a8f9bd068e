use super::field::Field;

/// Dense matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<Vec<F::Elem>>,
}

/// Output of row reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct Rref<F: Field> {
    pub reduced: Matrix<F>,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![vec![field.zero(); cols]; rows];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i][i] = m.field.one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(field: F, cols: usize, data: Vec<Vec<F::Elem>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Matrix {
            field,
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_i64(field: F, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, cols, data)
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i][j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i][j]
    }
    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        self.data[i][j] = x;
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i]
    }
    pub fn row_vecs(&self) -> &[Vec<F::Elem>] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        self.data
            .iter()
            .map(|row| {
                row.iter().zip(v).fold(f.zero(), |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows);
        let cols: Vec<Vec<F::Elem>> = (0..other.cols)
            .map(|j| self.mul_vec(&other.column(j)))
            .collect();
        Matrix::from_columns(self.field.clone(), self.rows, &cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(|x| self.field.is_zero(x))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::from_rows(self.field.clone(), self.cols, data)
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !f.is_zero(&m[i][c])) else {
                continue;
            };
            m.swap(r, pr);
            let inv = f.inv(&m[r][c]);
            if !f.is_one(&inv) {
                for x in m[r][c..].iter_mut() {
                    *x = f.mul(x, &inv);
                }
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || f.is_zero(&row[c]) {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&factor, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: Matrix::from_rows(f.clone(), self.cols, m),
            rank: pivots.len(),
            pivot_columns: pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of the null space `{v : Mv = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Rref {
            reduced,
            pivot_columns,
            ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_columns {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (row, &pc) in pivot_columns.iter().enumerate() {
                    v[pc] = f.neg(reduced.get(row, free));
                }
                v
            })
            .collect()
    }
}

/// Incrementally maintained echelon basis of a subspace of `F^n`.
///
/// Rows are kept fully reduced against each other, so membership tests and
/// residuals are a single pass over the stored pivots.
#[derive(Debug, Clone)]
pub struct EchelonBasis<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F, dim: usize) -> Self {
        EchelonBasis {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Residual of `v` after eliminating every stored pivot.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if f.is_zero(&w[*p]) {
                continue;
            }
            let c = w[*p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field.clone();
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&w[p]);
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn identity_rref() {
        let m = Matrix::identity(fp(3), 2);
        let r = m.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_columns, vec![0, 1]);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn zero_matrix() {
        let m = Matrix::zeros(fp(5), 3, 4);
        let r = m.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivot_columns.is_empty());
        assert_eq!(Matrix::zeros(fp(5), 2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn dependent_rows_mod_five() {
        let m = Matrix::from_i64(fp(5), &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_ones_over_f2() {
        // brute force: the only nonzero v in F_2^2 with v0 + v1 = 0 is (1,1)
        let m = Matrix::from_i64(fp(2), &[vec![1, 1]]);
        let brute: Vec<Vec<u64>> = (0..4u64)
            .map(|b| vec![b & 1, (b >> 1) & 1])
            .filter(|v| v != &vec![0, 0] && (v[0] + v[1]) % 2 == 0)
            .collect();
        assert_eq!(brute, vec![vec![1, 1]]);
        assert_eq!(m.kernel_basis(), brute);
    }

    #[test]
    fn rational_kernel() {
        let m = Matrix::from_i64(Rationals, &[vec![1, 2, 3], vec![2, 4, 7]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| Rationals.is_zero(x)));
    }

    #[test]
    fn echelon_matches_rank() {
        let rows = vec![vec![1, 2, 0], vec![2, 4, 0], vec![0, 1, 1]];
        let f = fp(7);
        let mut e = EchelonBasis::new(f, 3);
        let inserted: Vec<bool> = rows
            .iter()
            .map(|r| e.insert(&r.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>()))
            .collect();
        assert_eq!(inserted, vec![true, false, true]);
        assert_eq!(e.rank(), Matrix::from_i64(f, &rows).rank());
    }

    fn matrix_strategy() -> impl Strategy<Value = (u64, Vec<Vec<i64>>)> {
        (prop::sample::select(vec![2u64, 3, 5, 7]), 1usize..6, 1usize..6).prop_flat_map(
            |(p, r, c)| {
                (
                    Just(p),
                    prop::collection::vec(prop::collection::vec(0i64..p as i64, c), r),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn rref_is_idempotent((p, rows) in matrix_strategy()) {
            let m = Matrix::from_i64(fp(p), &rows);
            let once = m.rref();
            let twice = once.reduced.rref();
            prop_assert_eq!(&once.reduced, &twice.reduced);
            prop_assert_eq!(once.rank, twice.rank);
        }

        #[test]
        fn rank_nullity((p, rows) in matrix_strategy()) {
            let m = Matrix::from_i64(fp(p), &rows);
            let ker = m.kernel_basis();
            prop_assert_eq!(m.rank() + ker.len(), m.cols());
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
            let km = Matrix::from_rows(fp(p), m.cols(), ker.clone());
            prop_assert_eq!(km.rank(), ker.len());
        }
    }
}
