use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::scalar::render_coeff;
use crate::exact::Scalar;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// Sparse polynomial over exact rationals in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range");
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, Scalar::one());
        p
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.len(), self.nvars, "monomial length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut k = m.clone();
                k[i] -= 1;
                out.add_term(k, c * Scalar::from_integer(m[i].into()));
            }
        }
        out
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.derivative(i)).collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Scalar::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism sending `x_i ↦ images[i]`.
    ///
    /// # Panics
    /// Panics if `images` has the wrong length or mixed variable counts.
    pub fn substitute(&self, images: &[Poly]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, Poly::nvars);
        let mut out = Self::zero(target);
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let p = cache.entry((i, e)).or_insert_with(|| images[i].pow(e));
                    t = &t * &*p;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut k = vec![0; self.nvars];
            for (i, &e) in m.iter().enumerate() {
                k[perm[i]] = e;
            }
            out.add_term(k, c.clone());
        }
        out
    }

    /// Value at a rational point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t *= x;
                }
            }
            s += t;
        }
        s
    }

    /// Renders with the given variable names, highest-degree terms first.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Scalar::zero();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    let name = names.get(v).cloned().unwrap_or_else(|| format!("x{v}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            let mag = render_coeff(c);
            if factors.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let (mut out, other) = if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let m = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(m, x * y);
            }
        }
        out
    }
}

/// Sparse collection of polynomials indexed by small multi-indices; only
/// nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyTensor {
    entries: BTreeMap<Vec<usize>, Poly>,
}

impl PolyTensor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, idx: Vec<usize>, p: Poly) {
        if p.is_zero() {
            self.entries.remove(&idx);
        } else {
            self.entries.insert(idx, p);
        }
    }

    pub fn get(&self, idx: &[usize]) -> Option<&Poly> {
        self.entries.get(idx)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.entries.iter()
    }

    pub fn witnesses(&self, limit: usize, names: &[String]) -> Vec<(Vec<usize>, String)> {
        self.entries.iter().take(limit).map(|(k, p)| (k.clone(), p.render(names))).collect()
    }
}

impl FromIterator<(Vec<usize>, Poly)> for PolyTensor {
    fn from_iter<I: IntoIterator<Item = (Vec<usize>, Poly)>>(iter: I) -> Self {
        let mut t = Self::new();
        for (k, p) in iter {
            t.insert(k, p);
        }
        t
    }
}
