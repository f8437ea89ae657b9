use num_complex::Complex64;

use super::{ComplexMatrix, LinalgError};

/// Square complex matrix with enforced conjugate symmetry.
///
/// Construction symmetrizes through `(M + M*)/2`, so `entry(i, j)` is always
/// exactly the conjugate of `entry(j, i)` and diagonal entries carry a zero
/// imaginary part.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: ComplexMatrix,
}

impl HermitianMatrix {
    /// Symmetrizes a square matrix into its Hermitian part `(M + M*)/2`.
    pub fn from_matrix(m: &ComplexMatrix) -> Result<Self, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut inner = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            inner[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let avg = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
                inner[(i, j)] = avg;
                inner[(j, i)] = avg.conj();
            }
        }
        Ok(Self { inner })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            inner: ComplexMatrix::zeros(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: ComplexMatrix::identity(n),
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        assert!(n >= 1, "diagonal must be non-empty");
        let mut inner = ComplexMatrix::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            inner[(i, i)] = Complex64::new(*d, 0.0);
        }
        Self { inner }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inner.rows()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.inner[(i, j)]
    }

    /// Sets `entry(i, j) = v` and `entry(j, i) = conj(v)`; diagonal imaginary
    /// parts are dropped.
    pub fn set_sym(&mut self, i: usize, j: usize, v: Complex64) {
        if i == j {
            self.inner[(i, i)] = Complex64::new(v.re, 0.0);
        } else {
            self.inner[(i, j)] = v;
            self.inner[(j, i)] = v.conj();
        }
    }

    #[inline]
    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.inner
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        self.inner.clone()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            inner: self.inner.add(&rhs.inner),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            inner: self.inner.sub(&rhs.inner),
        }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        Self {
            inner: self.inner.scale(Complex64::new(s, 0.0)),
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.order()).map(|i| self.inner[(i, i)].re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.frobenius_norm()
    }

    pub fn max_abs_diag(&self) -> f64 {
        (0..self.order())
            .map(|i| self.inner[(i, i)].re.abs())
            .fold(0.0, f64::max)
    }

    /// Hermitian principal block of order `len` starting at `(off, off)`.
    pub fn principal_block(&self, off: usize, len: usize) -> Self {
        Self {
            inner: self.inner.block(off, off, len, len),
        }
    }

    /// Congruence `X* self X`, Hermitian by construction.
    pub fn congruence(&self, x: &ComplexMatrix) -> Self {
        assert_eq!(x.rows(), self.order(), "inner dimensions must agree");
        let product = x.adjoint().matmul(&self.inner).matmul(x);
        Self::from_matrix(&product).expect("congruence of a square matrix is square")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn from_matrix_symmetrizes_exactly() {
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.5), c(2.0, 1.0)],
            vec![c(1.0, 2.0), c(3.0, -0.25)],
        ])
        .unwrap();
        let h = HermitianMatrix::from_matrix(&m).unwrap();
        assert_eq!(h.get(0, 0), c(1.0, 0.0));
        assert_eq!(h.get(1, 1), c(3.0, 0.0));
        assert_eq!(h.get(0, 1), h.get(1, 0).conj());
        // (m01 + conj(m10))/2 = ((2+i) + (1-2i))/2 = (3 - i)/2
        assert_eq!(h.get(0, 1), c(1.5, -0.5));
    }

    #[test]
    fn congruence_of_identity_recovers_gram_matrix() {
        let x = ComplexMatrix::from_rows(&[
            vec![c(1.0, 1.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(2.0, 0.0)],
        ])
        .unwrap();
        let h = HermitianMatrix::identity(2).congruence(&x);
        assert_eq!(h.get(0, 0), c(2.0, 0.0));
        assert_eq!(h.get(1, 1), c(4.0, 0.0));
    }

    #[test]
    fn rejects_non_square_input() {
        let m = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            HermitianMatrix::from_matrix(&m),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        ));
    }
}
