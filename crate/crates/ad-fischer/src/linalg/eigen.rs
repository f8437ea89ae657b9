use num_complex::Complex64;

use super::{cholesky_pd, ComplexMatrix, HermitianMatrix, LinalgError, DEFAULT_PD_TOL};

/// Sweep budget for the cyclic Jacobi iteration.
const MAX_SWEEPS: usize = 100;

/// Convergence threshold on the off-diagonal Frobenius mass, relative to the
/// Frobenius norm of the input.
const OFFDIAG_RTOL: f64 = 1e-14;

/// Result of a Loewner-order comparison `X >= Y`.
///
/// `margin` is the smallest eigenvalue of `X - Y`; the comparison holds when
/// it is no smaller than `-tol * max(|X|_F, |Y|_F, 1)`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LoewnerCheck {
    pub holds: bool,
    pub margin: f64,
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Each rotation phase-aligns the pivot entry and then applies the classical
/// symmetric Jacobi angle, so the working matrix stays Hermitian with a real
/// diagonal throughout. Returns eigenvalues in ascending order together with
/// the accumulated unitary (columns are eigenvectors) when requested.
pub(crate) fn jacobi_hermitian(
    h: &HermitianMatrix,
    want_vectors: bool,
) -> Result<(Vec<f64>, Option<ComplexMatrix>), LinalgError> {
    let n = h.order();
    let mut w = h.to_matrix();
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));
    let target = OFFDIAG_RTOL * h.frobenius_norm();

    let off_mass = |w: &ComplexMatrix| -> f64 {
        let mut sum = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                sum += 2.0 * w[(i, j)].norm_sqr();
            }
        }
        sum.sqrt()
    };

    let mut converged = off_mass(&w) <= target;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = w[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let app = w[(p, p)].re;
                let aqq = w[(q, q)].re;
                let phase = apq / r; // e^{i phi}
                let tau = (aqq - app) / (2.0 * r);
                let t = tau.signum_or_one() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // 2x2 unitary on the (p, q) plane:
                //   [ c        s      ]
                //   [-s*ph^-1  c*ph^-1]   with ph = e^{i phi}
                let sp = phase.conj() * s; // s * e^{-i phi}
                let cp = phase.conj() * c;

                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let wip = w[(i, p)];
                    let wiq = w[(i, q)];
                    let new_p = wip * c - wiq * sp;
                    let new_q = wip * s + wiq * cp;
                    w[(i, p)] = new_p;
                    w[(p, i)] = new_p.conj();
                    w[(i, q)] = new_q;
                    w[(q, i)] = new_q.conj();
                }
                w[(p, p)] = Complex64::new(app - t * r, 0.0);
                w[(q, q)] = Complex64::new(aqq + t * r, 0.0);
                w[(p, q)] = Complex64::new(0.0, 0.0);
                w[(q, p)] = Complex64::new(0.0, 0.0);

                if let Some(vm) = v.as_mut() {
                    for i in 0..n {
                        let vip = vm[(i, p)];
                        let viq = vm[(i, q)];
                        vm[(i, p)] = vip * c - viq * sp;
                        vm[(i, q)] = vip * s + viq * cp;
                    }
                }
            }
        }
        converged = off_mass(&w) <= target;
    }
    if !converged {
        return Err(LinalgError::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| w[(a, a)].re.total_cmp(&w[(b, b)].re));
    let values: Vec<f64> = order.iter().map(|&i| w[(i, i)].re).collect();
    let vectors = v.map(|vm| ComplexMatrix::from_fn(n, n, |i, j| vm[(i, order[j])]));
    Ok((values, vectors))
}

trait SignumOrOne {
    fn signum_or_one(self) -> f64;
}

impl SignumOrOne for f64 {
    /// `signum` that treats zero as positive, so a vanishing Jacobi shift
    /// still yields the 45-degree rotation.
    fn signum_or_one(self) -> f64 {
        if self < 0.0 {
            -1.0
        } else {
            1.0
        }
    }
}

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues(h: &HermitianMatrix) -> Result<Vec<f64>, LinalgError> {
    jacobi_hermitian(h, false).map(|(values, _)| values)
}

/// Unique Hermitian positive definite square root, via eigendecomposition
/// with square-rooted eigenvalues.
///
/// The input must pass the Cholesky positive-definiteness test at the
/// default tolerance; eigenvalues inside the rounding band below zero are
/// clamped at zero before the square root.
pub fn hpd_sqrt(h: &HermitianMatrix) -> Result<HermitianMatrix, LinalgError> {
    let cert = cholesky_pd(h, DEFAULT_PD_TOL);
    if !cert.is_pd {
        return Err(LinalgError::NotPositiveDefinite {
            min_pivot: cert.min_pivot,
        });
    }
    let (values, vectors) = jacobi_hermitian(h, true)?;
    let v = vectors.expect("vectors requested");
    let n = h.order();
    let mut scaled = v.clone();
    for (j, lambda) in values.iter().enumerate() {
        let root = lambda.max(0.0).sqrt();
        for i in 0..n {
            scaled[(i, j)] *= root;
        }
    }
    let s = scaled.matmul(&v.adjoint());
    HermitianMatrix::from_matrix(&s)
}

/// Loewner-order test `X >= Y`: true iff the smallest eigenvalue of `X - Y`
/// stays above `-tol * max(|X|_F, |Y|_F, 1)`. The raw eigenvalue is returned
/// as the margin so callers can report how tight the comparison is.
pub fn loewner_geq(
    x: &HermitianMatrix,
    y: &HermitianMatrix,
    tol: f64,
) -> Result<LoewnerCheck, LinalgError> {
    if x.order() != y.order() {
        return Err(LinalgError::OrderMismatch {
            left: x.order(),
            right: y.order(),
        });
    }
    let diff = x.sub(y);
    let values = hermitian_eigenvalues(&diff)?;
    let margin = values[0];
    let scale = x.frobenius_norm().max(y.frobenius_norm()).max(1.0);
    Ok(LoewnerCheck {
        holds: margin >= -tol * scale,
        margin,
    })
}
