//! Seeded generation of small exact test instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, Matrix, Scalar, Tensor};

/// Deterministic sampler with entries drawn from `{-2, …, 2}`.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn small(&mut self) -> i64 {
        self.rng.gen_range(-2..=2)
    }

    pub fn small_nonzero(&mut self) -> i64 {
        loop {
            let x = self.small();
            if x != 0 {
                return x;
            }
        }
    }

    pub fn scalar(&mut self) -> Scalar {
        int(self.small())
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn vector(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let data = (0..rows * cols).map(|_| self.scalar()).collect();
        Matrix::from_vec(rows, cols, data).expect("sized")
    }

    pub fn skew(&mut self, n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let x = self.scalar();
                m[(j, i)] = -&x;
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Skew matrix with nonzero determinant; `n` must be even.
    pub fn nondegenerate_skew(&mut self, n: usize) -> Matrix {
        assert!(n % 2 == 0, "odd skew matrices are singular");
        loop {
            let m = self.skew(n);
            if m.rank() == n {
                return m;
            }
        }
    }

    pub fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.matrix(n, n);
            if m.rank() == n {
                return m;
            }
        }
    }

    /// Random antisymmetric structure tensor on `n` basis elements.
    pub fn antisymmetric_bracket(&mut self, n: usize) -> Tensor {
        let mut c = Tensor::zeros(&[n, n, n]);
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let x = self.scalar();
                    c.set(&[j, i, k], -&x);
                    c.set(&[i, j, k], x);
                }
            }
        }
        c
    }
}
