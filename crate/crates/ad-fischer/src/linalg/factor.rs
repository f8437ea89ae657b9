use num_complex::Complex64;

use super::{ComplexMatrix, HermitianMatrix, LinalgError};

/// Default relative pivot threshold for positive-definiteness decisions.
pub const DEFAULT_PD_TOL: f64 = 1e-10;

/// Relative pivot threshold below which `inverse` treats a matrix as singular.
const INVERSE_PIVOT_RTOL: f64 = 1e-13;

/// Outcome of a Cholesky-based positive-definiteness test.
///
/// `is_pd` is true iff the factorization completed with every pivot above
/// `tolerance_used * scale`, where `scale` is the largest absolute diagonal
/// entry of the tested matrix.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PDCertificate {
    pub is_pd: bool,
    pub min_pivot: f64,
    pub scale: f64,
    pub tolerance_used: f64,
}

struct Lu {
    /// Packed L (unit lower, below diagonal) and U (upper) factors of `P A`.
    factors: ComplexMatrix,
    /// Row permutation: position i holds the original row index.
    perm: Vec<usize>,
    sign: f64,
    /// Smallest |pivot| encountered, 0.0 when a column had no usable pivot.
    min_pivot: f64,
}

/// LU factorization with partial pivoting. Always completes; a column with
/// no nonzero pivot leaves a zero on the diagonal and `min_pivot = 0`.
fn lu_factor(m: &ComplexMatrix) -> Result<Lu, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    let mut min_pivot = f64::INFINITY;

    for col in 0..n {
        let mut best = col;
        let mut best_mag = a[(col, col)].norm();
        for row in (col + 1)..n {
            let mag = a[(row, col)].norm();
            if mag > best_mag {
                best = row;
                best_mag = mag;
            }
        }
        min_pivot = min_pivot.min(best_mag);
        if best_mag == 0.0 {
            // exactly singular: nothing to eliminate in this column
            continue;
        }
        if best != col {
            for j in 0..n {
                let tmp = a[(col, j)];
                a[(col, j)] = a[(best, j)];
                a[(best, j)] = tmp;
            }
            perm.swap(col, best);
            sign = -sign;
        }
        let pivot = a[(col, col)];
        for row in (col + 1)..n {
            let factor = a[(row, col)] / pivot;
            a[(row, col)] = factor;
            for j in (col + 1)..n {
                let sub = factor * a[(col, j)];
                a[(row, j)] -= sub;
            }
        }
    }

    Ok(Lu {
        factors: a,
        perm,
        sign,
        min_pivot,
    })
}

/// Determinant by LU with partial pivoting: product of pivots times the
/// permutation sign. Exactly singular input yields zero rather than an error.
pub fn det(m: &ComplexMatrix) -> Result<Complex64, LinalgError> {
    let lu = lu_factor(m)?;
    let n = m.rows();
    let mut d = Complex64::new(lu.sign, 0.0);
    for i in 0..n {
        d *= lu.factors[(i, i)];
    }
    Ok(d)
}

/// Matrix inverse by LU with partial pivoting.
///
/// Fails with `Singular` when some pivot magnitude drops to or below
/// `1e-13 * max_abs(M)`, reporting the offending pivot magnitude.
pub fn inverse(m: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    let lu = lu_factor(m)?;
    let n = m.rows();
    let threshold = INVERSE_PIVOT_RTOL * m.max_abs();
    if lu.min_pivot <= threshold {
        return Err(LinalgError::Singular {
            pivot: lu.min_pivot,
        });
    }

    let mut inv = ComplexMatrix::zeros(n, n);
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for e in 0..n {
        // forward substitution on P e_e (L has unit diagonal)
        for i in 0..n {
            let mut sum = if lu.perm[i] == e {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            for k in 0..i {
                sum -= lu.factors[(i, k)] * col[k];
            }
            col[i] = sum;
        }
        // back substitution on U
        for i in (0..n).rev() {
            let mut sum = col[i];
            for k in (i + 1)..n {
                sum -= lu.factors[(i, k)] * col[k];
            }
            col[i] = sum / lu.factors[(i, i)];
        }
        for i in 0..n {
            inv[(i, e)] = col[i];
        }
    }
    Ok(inv)
}

struct CholeskyOutcome {
    factor: Option<ComplexMatrix>,
    min_pivot: f64,
    scale: f64,
}

fn cholesky_inner(h: &HermitianMatrix, tol: f64) -> CholeskyOutcome {
    let n = h.order();
    let scale = h.max_abs_diag();
    let threshold = tol * scale;
    let mut l = ComplexMatrix::zeros(n, n);
    let mut min_pivot = f64::INFINITY;

    for j in 0..n {
        let mut d = h.get(j, j).re;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        min_pivot = min_pivot.min(d);
        if d <= threshold {
            return CholeskyOutcome {
                factor: None,
                min_pivot: d,
                scale,
            };
        }
        let ljj = d.sqrt();
        l[(j, j)] = Complex64::new(ljj, 0.0);
        for i in (j + 1)..n {
            let mut sum = h.get(i, j);
            for k in 0..j {
                sum -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = sum / ljj;
        }
    }

    CholeskyOutcome {
        factor: Some(l),
        min_pivot,
        scale,
    }
}

/// Positive-definiteness test by Cholesky pivots against the relative
/// threshold `tol * max_abs_diag`. Failure is a valid certificate with
/// `is_pd = false`, never an error.
pub fn cholesky_pd(h: &HermitianMatrix, tol: f64) -> PDCertificate {
    let out = cholesky_inner(h, tol);
    PDCertificate {
        is_pd: out.factor.is_some(),
        min_pivot: out.min_pivot,
        scale: out.scale,
        tolerance_used: tol,
    }
}

/// Lower-triangular Cholesky factor `L` with `H = L L*`, or
/// `NotPositiveDefinite` when a pivot falls at or below `tol * scale`.
pub fn cholesky_factor(h: &HermitianMatrix, tol: f64) -> Result<ComplexMatrix, LinalgError> {
    let out = cholesky_inner(h, tol);
    out.factor.ok_or(LinalgError::NotPositiveDefinite {
        min_pivot: out.min_pivot,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn det_identity_is_one() {
        let d = det(&ComplexMatrix::identity(3)).unwrap();
        assert_eq!(d, c(1.0, 0.0));
    }

    #[test]
    fn det_example_family_at_eps_one() {
        // [[(1+e)(1+i), i-1], [i-1, (1+e)(1+i)]] at e = 1 has determinant 10i:
        // (2+2i)^2 - (i-1)^2 = 8i - (-2i) = 10i.
        let a = ComplexMatrix::from_rows(&[
            vec![c(2.0, 2.0), c(-1.0, 1.0)],
            vec![c(-1.0, 1.0), c(2.0, 2.0)],
        ])
        .unwrap();
        let d = det(&a).unwrap();
        assert!((d - c(0.0, 10.0)).norm() <= 1e-12 * 10.0, "det = {d}");
    }

    #[test]
    fn det_rejects_non_square() {
        let m = ComplexMatrix::zeros(2, 3);
        assert!(matches!(det(&m), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn det_of_singular_matrix_is_zero() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(2.0, 0.0)],
            vec![c(2.0, 0.0), c(4.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(det(&m).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn inverse_of_identity_is_identity() {
        let inv = inverse(&ComplexMatrix::identity(4)).unwrap();
        assert_eq!(inv, ComplexMatrix::identity(4));
    }

    #[test]
    fn inverse_of_complex_diagonal() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 1.0)],
        ])
        .unwrap();
        let inv = inverse(&m).unwrap();
        assert!((inv[(0, 0)] - c(0.5, 0.0)).norm() < 1e-15);
        assert!((inv[(1, 1)] - c(0.5, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn inverse_reports_singularity() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(1.0, 0.0)],
        ])
        .unwrap();
        match inverse(&m) {
            Err(LinalgError::Singular { pivot }) => assert!(pivot <= 1e-13),
            other => panic!("expected singularity error, got {other:?}"),
        }
    }

    #[test]
    fn cholesky_pd_accepts_identity() {
        let cert = cholesky_pd(&HermitianMatrix::identity(3), 1e-12);
        assert!(cert.is_pd);
        assert_eq!(cert.min_pivot, 1.0);
        assert_eq!(cert.scale, 1.0);
    }

    #[test]
    fn cholesky_pd_rejects_indefinite_diagonal() {
        let h = HermitianMatrix::from_diagonal(&[1.0, -1.0]);
        let cert = cholesky_pd(&h, 1e-12);
        assert!(!cert.is_pd);
        assert_eq!(cert.min_pivot, -1.0);
    }

    #[test]
    fn cholesky_pd_accepts_example_hermitian_part() {
        // [[1.5, -1], [-1, 1.5]] has eigenvalues 0.5 and 2.5.
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.5, 0.0), c(-1.0, 0.0)],
            vec![c(-1.0, 0.0), c(1.5, 0.0)],
        ])
        .unwrap();
        let h = HermitianMatrix::from_matrix(&m).unwrap();
        assert!(cholesky_pd(&h, 1e-12).is_pd);
    }

    #[test]
    fn cholesky_factor_reconstructs() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(4.0, 0.0), c(1.0, 1.0)],
            vec![c(1.0, -1.0), c(3.0, 0.0)],
        ])
        .unwrap();
        let h = HermitianMatrix::from_matrix(&m).unwrap();
        let l = cholesky_factor(&h, DEFAULT_PD_TOL).unwrap();
        let back = l.matmul(&l.adjoint());
        assert!(back.sub(h.as_matrix()).frobenius_norm() < 1e-14);
    }
}
