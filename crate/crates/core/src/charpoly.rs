//! Division-free characteristic polynomials and pseudo-determinants.
//!
//! The characteristic polynomial convention is p_A(x) = det(A - x), stored
//! as ascending coefficients. The pseudo-determinant of a square matrix is
//! the product of its nonzero eigenvalues, read off as the signed first
//! nonzero ascending coefficient; nilpotent matrices get 1 without any
//! special casing.

use std::fmt;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Polynomial with ascending coefficients: `coeffs[j]` multiplies `x^j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial has at least one coefficient");
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> Scalar {
        self.coeffs.get(j).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Index of the lowest-order nonzero coefficient, if any.
    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficient p_k when the polynomial is read as
    /// p_0 (-x)^d + p_1 (-x)^{d-1} + ... + p_d, with d the stored degree.
    pub fn neg_power_coeff(&self, k: usize) -> Scalar {
        let d = self.degree();
        if k > d {
            return Scalar::zero();
        }
        let j = d - k;
        if j % 2 == 0 {
            self.coeff(j)
        } else {
            -self.coeff(j)
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.coeffs.iter().map(Scalar::to_string).collect();
        write!(f, "Polynomial[{}]", list.join(", "))
    }
}

impl fmt::Display for Polynomial {
    /// Human form, highest power first, e.g. `-x^3 + 6x^2 + 41x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if j == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            match j {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", j)?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial det(A - x) by the Berkowitz algorithm.
///
/// Division-free: integer inputs stay integer throughout, and no pivot
/// choices enter, so the computation is deterministic for any entry types.
/// The 0x0 matrix yields the constant polynomial 1.
pub fn char_poly(a: &Matrix) -> Result<Polynomial> {
    let n = a.require_square()?;
    // q holds the descending coefficients of det(xI - M) for the trailing
    // principal submatrix M, growing one level per iteration.
    let mut q = vec![Scalar::one()];
    for i in (0..n).rev() {
        let s = n - i - 1; // size of the trailing block below/right of row i
        let mut col = Vec::with_capacity(s + 2);
        col.push(Scalar::one());
        col.push(-&a[(i, i)]);
        if s > 0 {
            // Krylov scalars R S^j C for the row R right of the diagonal,
            // the column C below it, and the trailing block S.
            let mut v: Vec<Scalar> = (0..s).map(|p| a[(i + 1 + p, i)].clone()).collect();
            for step in 0..s {
                let dot: Scalar = (0..s).map(|t| &a[(i, i + 1 + t)] * &v[t]).sum();
                col.push(-dot);
                if step + 1 < s {
                    let mut next = vec![Scalar::zero(); s];
                    for (p, slot) in next.iter_mut().enumerate() {
                        *slot = (0..s).map(|t| &a[(i + 1 + p, i + 1 + t)] * &v[t]).sum();
                    }
                    v = next;
                }
            }
        }
        // multiply by the lower-triangular Toeplitz matrix with first column `col`
        let mut out = vec![Scalar::zero(); q.len() + 1];
        for (t, qt) in q.iter().enumerate() {
            if qt.is_zero() {
                continue;
            }
            for (d, cd) in col.iter().enumerate() {
                if t + d < out.len() {
                    let term = cd * qt;
                    out[t + d] += term;
                }
            }
        }
        q = out;
    }
    // q = descending coefficients of det(xI - A); convert to ascending
    // coefficients of det(A - x) = (-1)^n det(xI - A).
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let v = q[n - j].clone();
        coeffs.push(if n % 2 == 0 { v } else { -v });
    }
    Ok(Polynomial::new(coeffs))
}

/// Pseudo-determinant: (-1)^j c_j for the lowest nonzero ascending
/// coefficient c_j of det(A - x). Never zero; 1 for nilpotent matrices.
pub fn pseudo_det(a: &Matrix) -> Result<Scalar> {
    let p = char_poly(a)?;
    let j = p
        .lowest_nonzero()
        .expect("characteristic polynomial is never identically zero");
    let c = p.coeff(j);
    Ok(if j % 2 == 0 { c } else { -c })
}

/// Number of nonzero eigenvalues counted with algebraic multiplicity.
/// Can be strictly smaller than the rank.
pub fn spectral_count(a: &Matrix) -> Result<usize> {
    let n = a.require_square()?;
    let p = char_poly(a)?;
    let j = p
        .lowest_nonzero()
        .expect("characteristic polynomial is never identically zero");
    Ok(n - j)
}

/// True iff det(A - x) = (-x)^n.
pub fn is_nilpotent(a: &Matrix) -> Result<bool> {
    Ok(spectral_count(a)? == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::matrix::mat_mul;

    fn coeffs_i64(p: &Polynomial) -> Vec<Scalar> {
        p.coeffs().to_vec()
    }

    #[test]
    fn char_poly_selfadjoint_example() {
        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        let p = char_poly(&a).unwrap();
        // 41x + 6x^2 - x^3
        assert_eq!(
            coeffs_i64(&p),
            vec![
                Scalar::zero(),
                Scalar::from_int(41),
                Scalar::from_int(6),
                Scalar::from_int(-1)
            ]
        );
        assert_eq!(pseudo_det(&a).unwrap(), Scalar::from_int(-41));
        assert_eq!(p.to_string(), "-x^3 + 6x^2 + 41x");
    }

    #[test]
    fn char_poly_spectral_count_below_rank() {
        let g = Matrix::from_int_rows(&[&[1, -1, -1], &[1, -1, -1], &[-2, 2, -1]]);
        let p = char_poly(&g).unwrap();
        // -x^2 - x^3
        assert_eq!(
            coeffs_i64(&p),
            vec![
                Scalar::zero(),
                Scalar::zero(),
                Scalar::from_int(-1),
                Scalar::from_int(-1)
            ]
        );
        assert_eq!(pseudo_det(&g).unwrap(), Scalar::from_int(-1));
        assert_eq!(spectral_count(&g).unwrap(), 1);
        assert_eq!(crate::reduction::rank(&g), 2);
    }

    #[test]
    fn empty_matrix_char_poly_is_one() {
        let e = Matrix::zeros(0, 0);
        let p = char_poly(&e).unwrap();
        assert_eq!(coeffs_i64(&p), vec![Scalar::one()]);
        assert_eq!(pseudo_det(&e).unwrap(), Scalar::one());
        assert_eq!(spectral_count(&e).unwrap(), 0);
    }

    #[test]
    fn pseudo_det_examples() {
        let a = Matrix::from_int_rows(&[&[5, 6], &[10, 12]]);
        assert_eq!(pseudo_det(&a).unwrap(), Scalar::from_int(17));

        let rows = [1i64, 2, 3, 4];
        let b = Matrix::from_int_rows(&[&rows, &rows, &rows, &rows]);
        assert_eq!(pseudo_det(&b).unwrap(), Scalar::from_int(10));

        let nil = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(pseudo_det(&nil).unwrap(), Scalar::one());
        assert!(is_nilpotent(&nil).unwrap());
        assert_eq!(spectral_count(&nil).unwrap(), 0);
    }

    #[test]
    fn nilpotent_product_example() {
        let f = Matrix::from_int_rows(&[&[-1, -1], &[1, 1]]);
        let g = Matrix::identity(2);
        let ftg = mat_mul(&f.transpose(), &g).unwrap();
        assert!(is_nilpotent(&ftg).unwrap());
        assert_eq!(pseudo_det(&ftg).unwrap(), Scalar::one());
        assert!(!is_nilpotent(&Matrix::identity(3)).unwrap());
    }

    #[test]
    fn invertible_spectral_count_is_dimension() {
        let a = Matrix::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(spectral_count(&a).unwrap(), 3);
    }

    #[test]
    fn non_square_is_rejected() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(
            char_poly(&a).unwrap_err(),
            Error::NotSquare { rows: 2, cols: 3 }
        ));
        assert!(pseudo_det(&a).is_err());
        assert!(spectral_count(&a).is_err());
        assert!(is_nilpotent(&a).is_err());
    }

    #[test]
    fn neg_power_coeff_reindexes() {
        // 41x + 6x^2 - x^3 = 1*(-x)^3 + 6*(-x)^2 + (-41)*(-x) + 0
        let a = Matrix::from_int_rows(&[&[0, 4, 4], &[4, 0, 3], &[4, 3, 6]]);
        let p = char_poly(&a).unwrap();
        assert_eq!(p.neg_power_coeff(0), Scalar::one());
        assert_eq!(p.neg_power_coeff(1), Scalar::from_int(6)); // trace
        assert_eq!(p.neg_power_coeff(2), Scalar::from_int(-41));
        assert_eq!(p.neg_power_coeff(3), Scalar::zero()); // det
        assert_eq!(p.neg_power_coeff(7), Scalar::zero());
    }

    #[test]
    fn eval_horner() {
        let p = Polynomial::new(vec![
            Scalar::from_int(1),
            Scalar::from_int(2),
            Scalar::from_int(3),
        ]);
        assert_eq!(p.eval(&Scalar::from_int(4)), Scalar::from_int(57));
    }
}
