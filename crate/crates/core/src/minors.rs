//! Minor enumeration, exterior powers, and the coefficient-level
//! Cauchy-Binet identities.
//!
//! Every subset enumeration is lexicographic, so compound-matrix indexing
//! and all sums here are bit-reproducible. Minor determinants are computed
//! by fraction-free Bareiss elimination, one minor at a time; the total
//! pattern-pair count of a sum is capped by a budget that fails loudly
//! instead of truncating.

use crate::charpoly::{spectral_count, Polynomial};
use crate::error::{Error, Result};
use crate::matrix::{mat_mul, Matrix};
use crate::scalar::Scalar;

/// Cap on the number of (row-set, column-set) pattern pairs a single
/// minor sum may enumerate.
pub const DEFAULT_PATTERN_BUDGET: u128 = 2_000_000;

/// A k x k submatrix mask: sorted row set I and column set J of equal size.
/// k = 0 is the empty pattern whose minor is 1 by convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorPattern {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorPattern {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        assert_eq!(rows.len(), cols.len(), "|I| must equal |J|");
        assert!(
            rows.windows(2).all(|w| w[0] < w[1]) && cols.windows(2).all(|w| w[0] < w[1]),
            "pattern indices must be strictly increasing"
        );
        MinorPattern { rows, cols }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }
}

/// All k-subsets of {0..n-1} in lexicographic order; empty for k > n.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(binomial(n, k) as usize);
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Classical determinant by fraction-free Bareiss elimination.
///
/// Independent of the characteristic-polynomial route: the two are checked
/// against each other in the test suites.
pub fn classical_det(a: &Matrix) -> Result<Scalar> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(Scalar::one());
    }
    let mut m = a.clone();
    let mut sign = false;
    let mut prev = Scalar::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(src) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            for j in 0..n {
                let tmp = m[(src, j)].clone();
                m[(src, j)] = m[(k, j)].clone();
                m[(k, j)] = tmp;
            }
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[(i, j)] * &m[(k, k)]) - &(&m[(i, k)] * &m[(k, j)]);
                m[(i, j)] = &num / &prev;
            }
            m[(i, k)] = Scalar::zero();
        }
        prev = m[(k, k)].clone();
    }
    let det = m[(n - 1, n - 1)].clone();
    Ok(if sign { -det } else { det })
}

/// Determinant of the submatrix selected by a pattern; 1 for the empty
/// pattern.
pub fn minor_det(f: &Matrix, p: &MinorPattern) -> Result<Scalar> {
    for &i in p.rows() {
        if i >= f.rows() {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: f.rows(),
            });
        }
    }
    for &j in p.cols() {
        if j >= f.cols() {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: f.cols(),
            });
        }
    }
    classical_det(&f.submatrix(p.rows(), p.cols()))
}

/// k-th exterior power: the C(n,k) x C(m,k) matrix of all k x k minors,
/// rows and columns indexed by lexicographic subsets. The 0th power is the
/// 1 x 1 matrix [1].
pub fn exterior_power(f: &Matrix, k: usize) -> Matrix {
    let row_sets = subsets(f.rows(), k);
    let col_sets = subsets(f.cols(), k);
    let mut data = Vec::with_capacity(row_sets.len() * col_sets.len());
    for ri in &row_sets {
        for ci in &col_sets {
            data.push(
                classical_det(&f.submatrix(ri, ci)).expect("submatrix of a pattern is square"),
            );
        }
    }
    Matrix::new(row_sets.len(), col_sets.len(), data)
}

fn require_same_shape(f: &Matrix, g: &Matrix) -> Result<()> {
    if f.rows() != g.rows() || f.cols() != g.cols() {
        return Err(Error::DimensionMismatch {
            left_rows: f.rows(),
            left_cols: f.cols(),
            right_rows: g.rows(),
            right_cols: g.cols(),
        });
    }
    Ok(())
}

/// Sum over all order-k patterns P of det(F_P) det(G_P).
///
/// Returns 1 for k = 0 and 0 when no order-k pattern exists.
pub fn minor_pair_sum(f: &Matrix, g: &Matrix, k: usize) -> Result<Scalar> {
    minor_pair_sum_budgeted(f, g, k, DEFAULT_PATTERN_BUDGET)
}

pub fn minor_pair_sum_budgeted(
    f: &Matrix,
    g: &Matrix,
    k: usize,
    budget: u128,
) -> Result<Scalar> {
    require_same_shape(f, g)?;
    if k == 0 {
        return Ok(Scalar::one());
    }
    if k > f.rows().min(f.cols()) {
        return Ok(Scalar::zero());
    }
    let needed = binomial(f.rows(), k) * binomial(f.cols(), k);
    if needed > budget {
        return Err(Error::PatternBudgetExceeded { needed, budget });
    }
    let row_sets = subsets(f.rows(), k);
    let col_sets = subsets(f.cols(), k);
    let mut sum = Scalar::zero();
    for ri in &row_sets {
        for ci in &col_sets {
            let df = classical_det(&f.submatrix(ri, ci)).expect("square");
            if df.is_zero() {
                continue;
            }
            let dg = classical_det(&g.submatrix(ri, ci)).expect("square");
            sum += df * dg;
        }
    }
    Ok(sum)
}

/// Coefficients of det(1 + z F^T G) in z: the z^k coefficient is
/// the order-k minor pair sum, with constant term 1.
pub fn cauchy_binet_coeffs(f: &Matrix, g: &Matrix) -> Result<Polynomial> {
    cauchy_binet_coeffs_budgeted(f, g, DEFAULT_PATTERN_BUDGET)
}

pub fn cauchy_binet_coeffs_budgeted(f: &Matrix, g: &Matrix, budget: u128) -> Result<Polynomial> {
    require_same_shape(f, g)?;
    let kmax = f.rows().min(f.cols());
    let needed: u128 = (1..=kmax)
        .map(|k| binomial(f.rows(), k) * binomial(f.cols(), k))
        .sum();
    if needed > budget {
        return Err(Error::PatternBudgetExceeded { needed, budget });
    }
    let mut coeffs = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        coeffs.push(minor_pair_sum_budgeted(f, g, k, budget)?);
    }
    Ok(Polynomial::new(coeffs))
}

/// Pseudo-determinant of F^T G computed from the minor side: the order k
/// comes from the spectral count of F^T G, never from its rank.
pub fn pseudo_det_via_minors(f: &Matrix, g: &Matrix) -> Result<Scalar> {
    pseudo_det_via_minors_budgeted(f, g, DEFAULT_PATTERN_BUDGET)
}

pub fn pseudo_det_via_minors_budgeted(f: &Matrix, g: &Matrix, budget: u128) -> Result<Scalar> {
    require_same_shape(f, g)?;
    let ftg = mat_mul(&f.transpose(), g).expect("same shape implies conformable");
    let k = spectral_count(&ftg)?;
    minor_pair_sum_budgeted(f, g, k, budget)
}

/// Sum of squared order-k minors of a square matrix.
pub fn pythagoras_sum(a: &Matrix, k: usize) -> Result<Scalar> {
    a.require_square()?;
    minor_pair_sum(a, a, k)
}

/// Sum over diagonal patterns (I, I) of det(A_{II}); equals the trace of
/// the k-th exterior power and the (-x)-form coefficient p_k of det(A - x).
pub fn diag_minor_trace(a: &Matrix, k: usize) -> Result<Scalar> {
    let n = a.require_square()?;
    if k == 0 {
        return Ok(Scalar::one());
    }
    if k > n {
        return Ok(Scalar::zero());
    }
    let mut sum = Scalar::zero();
    for idx in subsets(n, k) {
        sum += classical_det(&a.submatrix(&idx, &idx)).expect("square");
    }
    Ok(sum)
}

/// Appends `lambda` times row `source_row` to F^T and `mu` times the same
/// row to G^T. When F^T G is nonsingular and 1 + lambda*mu != 0, the
/// pseudo-determinant of the new product is (1 + lambda*mu) times the old
/// one; the contract is exercised in the test suites, not enforced here.
pub fn append_parallel_rows(
    ft: &Matrix,
    gt: &Matrix,
    source_row: usize,
    lambda: &Scalar,
    mu: &Scalar,
) -> Result<(Matrix, Matrix)> {
    require_same_shape(ft, gt)?;
    if source_row >= ft.rows() {
        return Err(Error::IndexOutOfRange {
            index: source_row,
            bound: ft.rows(),
        });
    }
    let fr: Vec<Scalar> = ft.row(source_row).iter().map(|e| e * lambda).collect();
    let gr: Vec<Scalar> = gt.row(source_row).iter().map(|e| e * mu).collect();
    Ok((ft.with_appended_row(fr), gt.with_appended_row(gr)))
}

/// Generalized append: adds the row sum_j lambda[j] * row_j(F^T) to F^T and
/// sum_j mu[j] * row_j(G^T) to G^T. The pseudo-determinant of the product
/// picks up the factor 1 + sum_j lambda[j] * mu[j].
pub fn append_combination_rows(
    ft: &Matrix,
    gt: &Matrix,
    lambdas: &[Scalar],
    mus: &[Scalar],
) -> Result<(Matrix, Matrix)> {
    require_same_shape(ft, gt)?;
    if lambdas.len() > ft.rows() || mus.len() > gt.rows() {
        return Err(Error::IndexOutOfRange {
            index: lambdas.len().max(mus.len()),
            bound: ft.rows(),
        });
    }
    let combine = |m: &Matrix, weights: &[Scalar]| -> Vec<Scalar> {
        let mut row = vec![Scalar::zero(); m.cols()];
        for (j, w) in weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for (slot, e) in row.iter_mut().zip(m.row(j)) {
                *slot += w * e;
            }
        }
        row
    };
    Ok((
        ft.with_appended_row(combine(ft, lambdas)),
        gt.with_appended_row(combine(gt, mus)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{char_poly, pseudo_det};

    // Laplace cofactor expansion, as an oracle independent of Bareiss.
    fn det_laplace(a: &Matrix) -> Scalar {
        let n = a.rows();
        if n == 0 {
            return Scalar::one();
        }
        if n == 1 {
            return a[(0, 0)].clone();
        }
        let mut sum = Scalar::zero();
        let all: Vec<usize> = (1..n).collect();
        for j in 0..n {
            if a[(0, j)].is_zero() {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let sub = a.submatrix(&all, &keep);
            let term = &a[(0, j)] * &det_laplace(&sub);
            sum += if j % 2 == 0 { term } else { -term };
        }
        sum
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(6, 4).len(), 15);
        assert_eq!(subsets(2, 3), Vec::<Vec<usize>>::new());
        // lexicographic order
        let s = subsets(5, 3);
        for w in s.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn classical_det_matches_laplace() {
        let cases = [
            Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]),
            Matrix::from_int_rows(&[&[0, 2, 1, 3], &[1, 0, 0, 2], &[4, -1, 0, 0], &[
                0, 0, 5, 1,
            ]]),
            Matrix::from_int_rows(&[&[0, 0], &[0, 0]]),
            Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
        ];
        for a in &cases {
            assert_eq!(classical_det(a).unwrap(), det_laplace(a), "{a:?}");
        }
        assert_eq!(classical_det(&Matrix::zeros(0, 0)).unwrap(), Scalar::one());
    }

    #[test]
    fn minor_det_examples() {
        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        let p = MinorPattern::new(vec![0, 1], vec![0, 1]);
        assert_eq!(minor_det(&a, &p).unwrap(), Scalar::from_int(-16));
        let empty = MinorPattern::new(vec![], vec![]);
        assert_eq!(minor_det(&a, &empty).unwrap(), Scalar::one());
        let full = MinorPattern::new(vec![0, 1, 2], vec![0, 1, 2]);
        assert_eq!(minor_det(&a, &full).unwrap(), classical_det(&a).unwrap());
        let oob = MinorPattern::new(vec![0, 3], vec![0, 1]);
        assert!(minor_det(&a, &oob).is_err());
    }

    #[test]
    fn exterior_power_degenerate_orders() {
        let f = Matrix::from_int_rows(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(exterior_power(&f, 1), f);
        let w0 = exterior_power(&f, 0);
        assert_eq!(w0, Matrix::from_int_rows(&[&[1]]));
        // beyond min(n,m): one side collapses to zero width
        let w3 = exterior_power(&f, 3);
        assert_eq!((w3.rows(), w3.cols()), (1, 0));
    }

    #[test]
    fn order_three_power_of_gram_product() {
        // (W^3 F)^T (W^3 G) = W^3 (F^T G) on a 5x7 pair
        let f = Matrix::from_int_rows(&[
            &[2, -1, 0, 3, 1, -2, 4],
            &[0, 1, -3, 2, 2, 0, -1],
            &[1, 0, 2, -2, 3, 1, 0],
            &[-1, 2, 1, 0, -3, 2, 2],
            &[3, -2, 0, 1, 0, -1, 1],
        ]);
        let g = Matrix::from_int_rows(&[
            &[1, 2, -1, 0, 3, 1, -2],
            &[0, -2, 1, 1, 0, 2, 3],
            &[2, 0, 0, -1, 1, -3, 1],
            &[-2, 1, 3, 0, 2, 0, -1],
            &[1, 1, -2, 2, 0, 1, 0],
        ]);
        let lhs = mat_mul(&exterior_power(&f, 3).transpose(), &exterior_power(&g, 3)).unwrap();
        let rhs = exterior_power(&mat_mul(&f.transpose(), &g).unwrap(), 3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn minor_pair_sum_examples() {
        let f = Matrix::from_int_rows(&[&[2, 5], &[0, 0], &[0, 0]]);
        let g = Matrix::from_int_rows(&[&[3, 7], &[0, 1], &[0, 0]]);
        assert_eq!(minor_pair_sum(&f, &g, 1).unwrap(), Scalar::from_int(41));
        assert_eq!(minor_pair_sum(&f, &g, 0).unwrap(), Scalar::one());

        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        assert_eq!(minor_pair_sum(&a, &a, 2).unwrap(), Scalar::from_int(1681));
        // beyond min shape: empty sum
        assert_eq!(minor_pair_sum(&a, &a, 4).unwrap(), Scalar::zero());

        let bad = Matrix::zeros(2, 2);
        assert!(minor_pair_sum(&f, &bad, 1).is_err());
    }

    #[test]
    fn squared_minor_table_of_selfadjoint_example() {
        // the nine 2x2 minors square to 256,256,144,256,256,144,144,144,81
        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        let mut squares = Vec::new();
        for ri in subsets(3, 2) {
            for ci in subsets(3, 2) {
                let d = classical_det(&a.submatrix(&ri, &ci)).unwrap();
                squares.push(&d * &d);
            }
        }
        let expected: Vec<Scalar> = [256, 256, 144, 256, 256, 144, 144, 144, 81]
            .iter()
            .map(|&v| Scalar::from_int(v))
            .collect();
        assert_eq!(squares, expected);
        assert_eq!(
            squares.into_iter().sum::<Scalar>(),
            Scalar::from_int(1681)
        );
    }

    #[test]
    fn pythagoras_sum_examples() {
        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        assert_eq!(pythagoras_sum(&a, 2).unwrap(), Scalar::from_int(1681));

        // outer product of [1,2,3,4] with itself: rank 1, k = 1
        let f = Matrix::from_int_rows(&[&[1, 2, 3, 4]]);
        let a = mat_mul(&f.transpose(), &f).unwrap();
        assert_eq!(pythagoras_sum(&a, 1).unwrap(), Scalar::from_int(900));
        assert_eq!(pseudo_det(&a).unwrap(), Scalar::from_int(30));
    }

    #[test]
    fn sparse_six_by_six_minor_census() {
        let a = Matrix::from_int_rows(&[
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 1, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0],
            &[1, 0, 0, 0, 1, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 0, 0],
        ]);
        assert_eq!(pseudo_det(&a).unwrap(), Scalar::from_int(4));
        assert_eq!(spectral_count(&a).unwrap(), 4);
        let mut nonzero = 0usize;
        let mut total = 0usize;
        for ri in subsets(6, 4) {
            for ci in subsets(6, 4) {
                total += 1;
                let d = classical_det(&a.submatrix(&ri, &ci)).unwrap();
                if !d.is_zero() {
                    nonzero += 1;
                    assert!(d.abs().is_one(), "minor should be +-1, got {d}");
                }
            }
        }
        assert_eq!(total, 225);
        assert_eq!(nonzero, 16);
        assert_eq!(pythagoras_sum(&a, 4).unwrap(), Scalar::from_int(16));
    }

    #[test]
    fn cauchy_binet_coeff_polynomial() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let p = cauchy_binet_coeffs(&a, &a).unwrap();
        assert_eq!(p.coeff(0), Scalar::one());
        // at z = 1: det(1 + A^T A) = 1 + 1 + 4 + 9 + 16 + (1*4 - 2*3)^2 = 35
        assert_eq!(p.eval(&Scalar::one()), Scalar::from_int(35));
        let ata = mat_mul(&a.transpose(), &a).unwrap();
        let id_plus = &Matrix::identity(2) + &ata;
        assert_eq!(classical_det(&id_plus).unwrap(), Scalar::from_int(35));
    }

    #[test]
    fn pseudo_det_via_minors_examples() {
        let f = Matrix::from_int_rows(&[&[1, 4], &[2, 5], &[3, 6]]);
        let g = Matrix::from_int_rows(&[&[1, 0], &[1, 1], &[1, 0]]);
        assert_eq!(pseudo_det_via_minors(&f, &g).unwrap(), Scalar::from_int(11));

        let f = Matrix::from_int_rows(&[&[3, 1, 1], &[2, 2, 2]]);
        let g = Matrix::from_int_rows(&[&[0, 0, 2], &[0, 3, 2]]);
        assert_eq!(pseudo_det_via_minors(&f, &g).unwrap(), Scalar::from_int(12));

        let f = Matrix::identity(3);
        let g = Matrix::from_int_rows(&[&[1, -1, -1], &[1, -1, -1], &[-2, 2, -1]]);
        assert_eq!(pseudo_det_via_minors(&f, &g).unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn diag_minor_trace_examples() {
        let a = Matrix::from_int_rows(&[&[2, 7, 1], &[0, 3, -2], &[5, 1, 4]]);
        assert_eq!(diag_minor_trace(&a, 1).unwrap(), a.trace());
        assert_eq!(diag_minor_trace(&a, 3).unwrap(), classical_det(&a).unwrap());
        assert_eq!(diag_minor_trace(&a, 0).unwrap(), Scalar::one());
        // matches the (-x)-form coefficients of det(A - x)
        let p = char_poly(&a).unwrap();
        for k in 0..=3 {
            assert_eq!(diag_minor_trace(&a, k).unwrap(), p.neg_power_coeff(k));
        }
    }

    #[test]
    fn append_rows_scales_pseudo_det() {
        // 3x2 pair with det(F^T G) = -9
        let f = Matrix::from_int_rows(&[&[1, 1], &[0, 3], &[2, 1]]);
        let g = Matrix::from_int_rows(&[&[1, 2], &[1, 1], &[1, 2]]);
        let ft = f.transpose();
        let gt = g.transpose();
        let base = pseudo_det(&mat_mul(&ft, &g).unwrap()).unwrap();
        assert_eq!(base, Scalar::from_int(-9));

        let (at, bt) = append_parallel_rows(
            &ft,
            &gt,
            0,
            &Scalar::from_int(3),
            &Scalar::from_int(2),
        )
        .unwrap();
        let prod = mat_mul(&at, &bt.transpose()).unwrap();
        assert_eq!(pseudo_det(&prod).unwrap(), Scalar::from_int(-63));

        // lambda = 0 leaves the pseudo-determinant unchanged
        let (at, bt) =
            append_parallel_rows(&ft, &gt, 1, &Scalar::zero(), &Scalar::from_int(5)).unwrap();
        let prod = mat_mul(&at, &bt.transpose()).unwrap();
        assert_eq!(pseudo_det(&prod).unwrap(), Scalar::from_int(-9));

        // mixing different source rows: factor 1 + 3*0 + 0*2 = 1
        let (at, bt) = append_combination_rows(
            &ft,
            &gt,
            &[Scalar::from_int(3), Scalar::zero()],
            &[Scalar::zero(), Scalar::from_int(2)],
        )
        .unwrap();
        let prod = mat_mul(&at, &bt.transpose()).unwrap();
        assert_eq!(pseudo_det(&prod).unwrap(), Scalar::from_int(-9));

        assert!(append_parallel_rows(&ft, &gt, 9, &Scalar::one(), &Scalar::one()).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let a = Matrix::zeros(20, 20);
        let err = minor_pair_sum_budgeted(&a, &a, 10, 1_000).unwrap_err();
        match err {
            Error::PatternBudgetExceeded { needed, budget } => {
                assert_eq!(budget, 1_000);
                assert_eq!(needed, binomial(20, 10) * binomial(20, 10));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
