use super::matrix::Matrix;
use crate::error::{dim_err, Result};

/// Number of retained coefficients: `h^0`, `h^1`, `h^2`.
pub const ORDER: usize = 3;

/// Matrix-valued power series in `h`, truncated after `h^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeries {
    coeffs: [Matrix; ORDER],
}

impl HSeries {
    pub fn new(c0: Matrix, c1: Matrix, c2: Matrix) -> Result<Self> {
        let d = (c0.rows(), c0.cols());
        if [&c1, &c2].iter().any(|m| (m.rows(), m.cols()) != d) {
            return Err(dim_err("series coefficients of different sizes"));
        }
        Ok(Self { coeffs: [c0, c1, c2] })
    }

    /// `c0 + h c1`.
    pub fn linear(c0: Matrix, c1: Matrix) -> Result<Self> {
        let z = Matrix::zeros(c0.rows(), c0.cols());
        Self::new(c0, c1, z)
    }

    pub fn coeff(&self, k: usize) -> &Matrix {
        &self.coeffs[k]
    }

    pub fn map(&self, f: impl Fn(&Matrix) -> Result<Matrix>) -> Result<Self> {
        Self::new(f(&self.coeffs[0])?, f(&self.coeffs[1])?, f(&self.coeffs[2])?)
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out: Vec<Matrix> = Vec::with_capacity(ORDER);
        for k in 0..ORDER {
            let mut acc = Matrix::zeros(self.coeffs[0].rows(), other.coeffs[0].cols());
            for i in 0..=k {
                acc = acc.add(&self.coeffs[i].mul(&other.coeffs[k - i])?)?;
            }
            out.push(acc);
        }
        let [a, b, c]: [Matrix; ORDER] = out.try_into().expect("three coefficients");
        Self::new(a, b, c)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Self::new(
            self.coeffs[0].sub(&other.coeffs[0])?,
            self.coeffs[1].sub(&other.coeffs[1])?,
            self.coeffs[2].sub(&other.coeffs[2])?,
        )
    }

    /// Left multiplication by a constant matrix.
    pub fn left_mul(&self, m: &Matrix) -> Result<Self> {
        self.map(|c| m.mul(c))
    }
}
