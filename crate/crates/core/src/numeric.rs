//! Floating-point backend for spectral claims: eigenvalues of symmetric
//! matrices by cyclic Jacobi iteration, the pseudo-Pfaffian, the volume
//! interpretation, and the log-trace identity.
//!
//! Nothing here feeds back into the exact pipeline; exact inputs are
//! converted to doubles at the boundary and compared against exact results
//! at stated tolerances only.

use crate::charpoly::pseudo_det;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::minors::pythagoras_sum;
use crate::reduction::rank;

/// Eigenvalue threshold: numeric eigenvalues below this multiple of the
/// Frobenius norm count as zero.
const ZERO_EIGENVALUE_REL_TOL: f64 = 1e-9;

/// Jacobi sweeps stop when the off-diagonal Frobenius norm falls below
/// this multiple of the full Frobenius norm.
const JACOBI_REL_TOL: f64 = 1e-13;

const JACOBI_MAX_SWEEPS: usize = 100;

/// Real spectrum of a symmetric matrix, ascending.
#[derive(Clone, Debug)]
pub struct FloatSpectrum {
    pub eigenvalues: Vec<f64>,
    pub dim: usize,
}

fn to_f64_grid(a: &Matrix) -> Vec<Vec<f64>> {
    (0..a.rows())
        .map(|i| a.row(i).iter().map(|e| e.to_f64()).collect())
        .collect()
}

fn frobenius(m: &[Vec<f64>]) -> f64 {
    m.iter()
        .flat_map(|row| row.iter().map(|v| v * v))
        .sum::<f64>()
        .sqrt()
}

fn off_diagonal_norm(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[i][j] * m[i][j];
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi eigenvalue iteration for symmetric matrices. Fixed sweep
/// order for reproducibility.
fn jacobi_eigenvalues(mut m: Vec<Vec<f64>>) -> Vec<f64> {
    let n = m.len();
    let scale = frobenius(&m);
    if n == 0 || scale == 0.0 {
        return vec![0.0; n];
    }
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&m) < JACOBI_REL_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq.abs() < JACOBI_REL_TOL * scale / (n as f64 * n as f64) {
                    continue;
                }
                let tau = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    eig.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    eig
}

/// Eigenvalues of an exactly-symmetric matrix.
pub fn symmetric_eigenvalues(a: &Matrix) -> Result<FloatSpectrum> {
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(FloatSpectrum {
        eigenvalues: jacobi_eigenvalues(to_f64_grid(a)),
        dim: a.rows(),
    })
}

/// |Pf(A)| for an exactly skew-symmetric matrix: the product of one
/// representative from each pair of equal nonzero singular values.
/// The zero matrix gives 1. Pairing failures beyond relative 1e-8 signal
/// numerical breakdown and are reported as errors.
pub fn pseudo_pfaffian_abs(a: &Matrix) -> Result<f64> {
    if !a.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let gram = &a.transpose() * a;
    let grid = to_f64_grid(&gram);
    // threshold the Gram eigenvalues (squared singular values) before the
    // square root, so rounding noise near zero is not amplified
    let gram_scale = frobenius(&grid);
    let singular: Vec<f64> = jacobi_eigenvalues(grid)
        .into_iter()
        .filter(|&ev| ev > ZERO_EIGENVALUE_REL_TOL * (1.0 + gram_scale))
        .map(|ev| ev.sqrt())
        .collect();
    // descending, pair consecutive values
    let mut svs = singular;
    svs.sort_by(|x, y| y.partial_cmp(x).expect("singular values are finite"));
    if svs.len() % 2 != 0 {
        return Err(Error::UnpairedSingularValue {
            value: *svs.last().expect("nonempty when odd"),
        });
    }
    let mut product = 1.0;
    for pair in svs.chunks(2) {
        let (hi, lo) = (pair[0], pair[1]);
        if (hi - lo).abs() > 1e-8 * hi {
            return Err(Error::UnpairedSingularValue { value: hi });
        }
        product *= (hi * lo).sqrt();
    }
    Ok(product)
}

/// (|Det(A)|, sqrt of the rank-order squared-minor sum) for a real normal
/// matrix; the two agree for selfadjoint inputs, interpreting |Det| as the
/// k-volume of the image of the unit cube.
pub fn volume_check(a: &Matrix) -> Result<(f64, f64)> {
    if !a.is_normal() {
        return Err(Error::NotNormal);
    }
    let k = rank(a);
    let det = pseudo_det(a)?;
    let sum = pythagoras_sum(a, k)?;
    Ok((det.abs().to_f64(), sum.to_f64().sqrt()))
}

/// (sum of log|lambda| over nonzero numeric eigenvalues, log|Det(A)|) for
/// a symmetric matrix.
pub fn log_trace_check(a: &Matrix) -> Result<(f64, f64)> {
    let spectrum = symmetric_eigenvalues(a)?;
    let scale = frobenius(&to_f64_grid(a));
    let tol = ZERO_EIGENVALUE_REL_TOL * (1.0 + scale);
    let trace_side: f64 = spectrum
        .eigenvalues
        .iter()
        .filter(|ev| ev.abs() > tol)
        .map(|ev| ev.abs().ln())
        .sum();
    let det_side = pseudo_det(a)?.abs().to_f64().ln();
    Ok((trace_side, det_side))
}

/// Number of numeric eigenvalues above the zero threshold; compared against
/// the exact spectral count in the test suites.
pub fn nonzero_eigenvalue_count(spectrum: &FloatSpectrum, norm_scale: f64) -> usize {
    let tol = ZERO_EIGENVALUE_REL_TOL * (1.0 + norm_scale);
    spectrum
        .eigenvalues
        .iter()
        .filter(|ev| ev.abs() > tol)
        .count()
}

/// Frobenius norm of an exact matrix, evaluated in doubles.
pub fn frobenius_norm(a: &Matrix) -> f64 {
    frobenius(&to_f64_grid(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::matrix::mat_mul;
    use crate::scalar::Scalar;

    #[test]
    fn eigenvalues_of_diagonal() {
        let d = Matrix::from_int_rows(&[&[3, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let s = symmetric_eigenvalues(&d).unwrap();
        assert_eq!(s.eigenvalues, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn eigenvalues_of_selfadjoint_example() {
        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        let s = symmetric_eigenvalues(&a).unwrap();
        let expected = [3.0 - 5.0 * 2f64.sqrt(), 0.0, 3.0 + 5.0 * 2f64.sqrt()];
        for (got, want) in s.eigenvalues.iter().zip(expected) {
            assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        }
    }

    #[test]
    fn eigenvalues_of_complete_graph_laplacian() {
        let l = Graph::complete(3).scalar_laplacian();
        let s = symmetric_eigenvalues(&l).unwrap();
        let expected = [0.0, 3.0, 3.0];
        for (got, want) in s.eigenvalues.iter().zip(expected) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn trace_identities() {
        let a = Matrix::from_int_rows(&[&[2, -1, 4], &[-1, 0, 3], &[4, 3, -5]]);
        let s = symmetric_eigenvalues(&a).unwrap();
        let sum: f64 = s.eigenvalues.iter().sum();
        let sum_sq: f64 = s.eigenvalues.iter().map(|e| e * e).sum();
        let tr = a.trace().to_f64();
        let tr2 = mat_mul(&a, &a).unwrap().trace().to_f64();
        assert!((sum - tr).abs() <= 1e-9 * (1.0 + tr.abs()));
        assert!((sum_sq - tr2).abs() <= 1e-9 * (1.0 + tr2.abs()));
    }

    #[test]
    fn rejects_asymmetric() {
        let a = Matrix::from_int_rows(&[&[0, 1], &[2, 0]]);
        assert!(matches!(
            symmetric_eigenvalues(&a).unwrap_err(),
            Error::NotSymmetric
        ));
    }

    #[test]
    fn pfaffian_examples() {
        let rot = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        assert!((pseudo_pfaffian_abs(&rot).unwrap() - 1.0).abs() < 1e-12);

        let zero = Matrix::zeros(3, 3);
        assert_eq!(pseudo_pfaffian_abs(&zero).unwrap(), 1.0);

        let a = Matrix::from_int_rows(&[
            &[0, 1, 1, 0],
            &[-1, 0, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 0, 0],
        ]);
        let pf = pseudo_pfaffian_abs(&a).unwrap();
        assert!((pf - 2f64.sqrt()).abs() < 1e-9);
        assert_eq!(pseudo_det(&a).unwrap(), Scalar::from_int(2));
        assert!((pf * pf - 2.0).abs() < 1e-8);

        let not_skew = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert!(matches!(
            pseudo_pfaffian_abs(&not_skew).unwrap_err(),
            Error::NotSkewSymmetric
        ));
    }

    #[test]
    fn volume_examples() {
        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        let (lhs, rhs) = volume_check(&a).unwrap();
        assert!((lhs - 41.0).abs() < 1e-9);
        assert!((rhs - 41.0).abs() < 1e-9);

        // orthogonal projection onto span{(1,1)}: entries 1/2
        let p = Matrix::from_rows(vec![
            vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
            vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)],
        ]);
        let (lhs, rhs) = volume_check(&p).unwrap();
        assert!((lhs - 1.0).abs() < 1e-12 && (rhs - 1.0).abs() < 1e-12);

        let (lhs, rhs) = volume_check(&Matrix::identity(4)).unwrap();
        assert!((lhs - 1.0).abs() < 1e-12 && (rhs - 1.0).abs() < 1e-12);

        let bad = Matrix::from_int_rows(&[&[1, 1], &[0, 0]]);
        assert!(matches!(volume_check(&bad).unwrap_err(), Error::NotNormal));
    }

    #[test]
    fn log_trace_examples() {
        let d = Matrix::from_int_rows(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 0]]);
        let (lhs, rhs) = log_trace_check(&d).unwrap();
        assert!((lhs - 6f64.ln()).abs() < 1e-9);
        assert!((rhs - 6f64.ln()).abs() < 1e-12);

        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        let (lhs, rhs) = log_trace_check(&a).unwrap();
        assert!((lhs - rhs).abs() < 1e-6);
        assert!((rhs - 41f64.ln()).abs() < 1e-12);

        let (lhs, rhs) = log_trace_check(&Matrix::identity(3)).unwrap();
        assert!(lhs.abs() < 1e-9 && rhs.abs() < 1e-12);
    }
}
