//! Row reduction, rank, kernels, rank factorization, and the exact
//! Moore-Penrose pseudo-inverse.
//!
//! Pivoting always picks the first nonzero entry in column order; exact
//! arithmetic needs no magnitude pivoting and this keeps every result
//! bit-reproducible.

use crate::error::{Error, Result};
use crate::matrix::{mat_mul, Matrix};
use crate::scalar::Scalar;

/// Reduced row echelon form together with its pivot bookkeeping.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

pub fn rref(a: &Matrix) -> Rref {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivot_cols = Vec::new();
    let mut pr = 0; // next pivot row
    for pc in 0..cols {
        // first nonzero entry at or below pr
        let Some(src) = (pr..rows).find(|&i| !m[(i, pc)].is_zero()) else {
            continue;
        };
        if src != pr {
            for j in 0..cols {
                let tmp = m[(src, j)].clone();
                m[(src, j)] = m[(pr, j)].clone();
                m[(pr, j)] = tmp;
            }
        }
        let inv = m[(pr, pc)].recip();
        for j in pc..cols {
            let v = &m[(pr, j)] * &inv;
            m[(pr, j)] = v;
        }
        for i in 0..rows {
            if i == pr || m[(i, pc)].is_zero() {
                continue;
            }
            let factor = m[(i, pc)].clone();
            for j in pc..cols {
                let v = &m[(i, j)] - &(&factor * &m[(pr, j)]);
                m[(i, j)] = v;
            }
        }
        pivot_cols.push(pc);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    let rank = pivot_cols.len();
    Rref {
        matrix: m,
        pivot_cols,
        rank,
    }
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).rank
}

/// Exact rational basis of the null space, one column vector per free column.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    let r = rref(a);
    let cols = a.cols();
    let pivots = &r.pivot_cols;
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&r.matrix[(row, free)];
        }
        basis.push(v);
    }
    basis
}

/// A = left * right with `left` of full column rank and `right` of full
/// row rank; `left` is made of the pivot columns of A, `right` of the
/// nonzero rows of rref(A).
#[derive(Clone, Debug)]
pub struct RankFactorization {
    pub left: Matrix,
    pub right: Matrix,
    pub rank: usize,
}

pub fn rank_factorization(a: &Matrix) -> RankFactorization {
    let r = rref(a);
    let rows: Vec<usize> = (0..a.rows()).collect();
    let left = a.submatrix(&rows, &r.pivot_cols);
    let row_idx: Vec<usize> = (0..r.rank).collect();
    let col_idx: Vec<usize> = (0..a.cols()).collect();
    let right = r.matrix.submatrix(&row_idx, &col_idx);
    RankFactorization {
        left,
        right,
        rank: r.rank,
    }
}

/// Exact inverse of a square matrix via Gauss-Jordan on [A | I].
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.require_square()?;
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n + i)] = Scalar::one();
    }
    let r = rref(&aug);
    if r.pivot_cols.iter().take_while(|&&c| c < n).count() != n {
        return Err(Error::Singular);
    }
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (n..2 * n).collect();
    Ok(r.matrix.submatrix(&rows, &cols))
}

/// Exact Moore-Penrose pseudo-inverse.
///
/// With A = CR a rank factorization, A+ = R^T (R R^T)^-1 (C^T C)^-1 C^T;
/// both Gram matrices are r x r and invertible. The rank-0 case is the
/// zero matrix of transposed shape, which the four Penrose conditions force.
pub fn pseudo_inverse(a: &Matrix) -> Matrix {
    let f = rank_factorization(a);
    if f.rank == 0 {
        return Matrix::zeros(a.cols(), a.rows());
    }
    let c = &f.left;
    let r = &f.right;
    let ct = c.transpose();
    let rt = r.transpose();
    let gram_r = inverse(&(r * &rt)).expect("R R^T invertible for full row rank R");
    let gram_c = inverse(&(&ct * c)).expect("C^T C invertible for full column rank C");
    &(&rt * &gram_r) * &(&gram_c * &ct)
}

/// True when X satisfies all four Penrose conditions for A, exactly.
pub fn satisfies_penrose(a: &Matrix, x: &Matrix) -> bool {
    if x.rows() != a.cols() || x.cols() != a.rows() {
        return false;
    }
    let ax = mat_mul(a, x).expect("shapes checked");
    let xa = mat_mul(x, a).expect("shapes checked");
    &(&ax * a) == a && &(&xa * x) == x && ax.transpose() == ax && xa.transpose() == xa
}
