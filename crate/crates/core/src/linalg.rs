//! Exact dense linear algebra over Gaussian rationals: row reduction,
//! kernels, solving, and Gram matrices of polynomial lists under the
//! Bargmann inner product. No floating point, no pivot heuristics beyond
//! first-nonzero; all results are deterministic.

use crate::exec;
use crate::gaussian::GaussianRational;
use crate::polynomial::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.data[r * self.cols + c] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.get(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..self.cols {
                    self.data
                        .swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inverse();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &(self.get(row, c) * &factor);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the null space {x : Ax = 0}, one vector per free column,
    /// in ascending free-column order (deterministic).
    pub fn kernel(&self) -> Vec<Vec<GaussianRational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = vec![GaussianRational::zero(); self.cols];
            x[free] = GaussianRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                x[pc] = -m.get(i, free);
            }
            basis.push(x);
        }
        basis
    }

    /// Solve Ax = b exactly. Returns (particular solution, unique) or None
    /// if inconsistent; `unique` is false when free columns exist.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<(Vec<GaussianRational>, bool)> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(i, self.cols).clone();
        }
        Some((x, pivots.len() == self.cols))
    }
}

/// Gram matrix G[i][j] = <ps[i], ps[j]> under the Bargmann inner product
/// (antilinear in the first slot). Rows are computed independently; with
/// the `parallel` feature they are evaluated on the rayon pool.
pub fn gram_matrix(ps: &[Polynomial]) -> Matrix {
    let rows = exec::map_indices(ps.len(), |i| {
        ps.iter().map(|q| ps[i].inner_product(q)).collect::<Vec<_>>()
    });
    Matrix::from_rows(rows)
}

/// Sequential twin of [`gram_matrix`]; reference path for the bench suite.
pub fn gram_matrix_seq(ps: &[Polynomial]) -> Matrix {
    let rows = exec::map_indices_seq(ps.len(), |i| {
        ps.iter().map(|q| ps[i].inner_product(q)).collect::<Vec<_>>()
    });
    Matrix::from_rows(rows)
}

/// Unnormalized Gram-Schmidt over the Bargmann inner product: each output
/// vector is the input minus its projections on the previous outputs.
/// Zero vectors arising from linear dependence are dropped.
pub fn orthogonalize(ps: &[Polynomial]) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for p in ps {
        let mut v = p.clone();
        for q in &out {
            let coeff = &q.inner_product(&v)
                / &GaussianRational::from_rational(q.norm_sq());
            v = &v - &q.scale(&coeff);
        }
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VariableId;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    #[test]
    fn rref_rank_kernel() {
        // rows: [1 2 3], [2 4 6], [0 1 1]
        let m = Matrix::from_rows(vec![
            vec![g(1), g(2), g(3)],
            vec![g(2), g(4), g(6)],
            vec![g(0), g(1), g(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        // kernel vector satisfies Ax = 0
        for r in 0..m.rows {
            let mut acc = GaussianRational::zero();
            for c in 0..m.cols {
                acc += &(m.get(r, c) * &k[0][c]);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let m = Matrix::from_rows(vec![vec![g(1), g(1)], vec![g(1), g(-1)]]);
        let (x, unique) = m.solve(&[g(3), g(1)]).unwrap();
        assert!(unique);
        assert_eq!(x, vec![g(2), g(1)]);
        let singular = Matrix::from_rows(vec![vec![g(1), g(1)], vec![g(2), g(2)]]);
        assert!(singular.solve(&[g(1), g(3)]).is_none());
    }

    #[test]
    fn gram_and_orthogonalize() {
        let t1 = Polynomial::variable(VariableId::new(0, 1));
        let t2 = Polynomial::variable(VariableId::new(0, 2));
        let sum = &t1 + &t2;
        let gm = gram_matrix(&[t1.clone(), sum.clone()]);
        assert_eq!(gm.get(0, 0), &g(1));
        assert_eq!(gm.get(0, 1), &g(1));
        assert_eq!(gm.get(1, 1), &g(2));
        assert_eq!(gm, gram_matrix_seq(&[t1.clone(), sum.clone()]));
        let ortho = orthogonalize(&[sum.clone(), t1.clone(), t2.clone()]);
        assert_eq!(ortho.len(), 2);
        assert!(ortho[0].inner_product(&ortho[1]).is_zero());
    }
}
