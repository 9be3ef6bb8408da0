use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::poly::{DiffPoly, Jet, Jets, Var};
use crate::error::{dim_err, Error, Result};
use crate::exact::Scalar;

fn binomial(n: u32, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for i in 0..k {
        acc = acc * Scalar::from_integer((n - i).into()) / Scalar::from_integer((i + 1).into());
    }
    acc
}

/// Scalar differential operator `Σ a_n ∂^n`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Op {
    coeffs: BTreeMap<u32, DiffPoly>,
}

impl Op {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Multiplication by `a`.
    pub fn mult(a: DiffPoly) -> Self {
        Self::term(a, 0)
    }

    /// `a ∂^n`.
    pub fn term(a: DiffPoly, n: u32) -> Self {
        let mut op = Self::zero();
        op.push(n, a);
        op
    }

    /// `∂^n`.
    pub fn dn(n: u32) -> Self {
        Self::term(DiffPoly::one(), n)
    }

    pub fn from_coeffs(coeffs: BTreeMap<u32, DiffPoly>) -> Self {
        let mut op = Self::zero();
        for (n, a) in coeffs {
            op.push(n, a);
        }
        op
    }

    fn push(&mut self, n: u32, a: DiffPoly) {
        if a.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(n).or_default();
        *slot = &*slot + &a;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn coeff(&self, n: u32) -> DiffPoly {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &DiffPoly)> {
        self.coeffs.iter().map(|(n, a)| (*n, a))
    }

    pub fn order(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn apply(&self, f: &DiffPoly, jets: &Jets) -> Result<DiffPoly> {
        let mut out = DiffPoly::zero();
        for (n, a) in &self.coeffs {
            out = &out + &(a * &f.dn(*n, jets)?);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Op) -> Op {
        let mut out = self.clone();
        for (n, a) in &other.coeffs {
            out.push(*n, a.clone());
        }
        out
    }

    pub fn neg(&self) -> Op {
        Op { coeffs: self.coeffs.iter().map(|(n, a)| (*n, -a)).collect() }
    }

    pub fn sub(&self, other: &Op) -> Op {
        self.add(&other.neg())
    }

    /// Left multiplication by a function.
    pub fn left_mul(&self, a: &DiffPoly) -> Op {
        Op::from_coeffs(self.coeffs.iter().map(|(n, c)| (*n, a * c)).collect())
    }

    /// `self ∘ other`, using `∂^n ∘ b = Σ_k C(n,k) b^{(k)} ∂^{n-k}`.
    pub fn compose(&self, other: &Op, jets: &Jets) -> Result<Op> {
        let mut out = Op::zero();
        for (n, a) in &self.coeffs {
            for (m, b) in &other.coeffs {
                let mut bk = b.clone();
                for k in 0..=*n {
                    if k > 0 {
                        bk = bk.d(jets)?;
                    }
                    out.push(n - k + m, (a * &bk).scale(&binomial(*n, k)));
                }
            }
        }
        Ok(out)
    }

    /// Formal adjoint `Σ (-∂)^n ∘ a_n`.
    pub fn adjoint(&self, jets: &Jets) -> Result<Op> {
        let mut out = Op::zero();
        for (n, a) in &self.coeffs {
            let sign = if n % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            let mut ak = a.clone();
            for k in 0..=*n {
                if k > 0 {
                    ak = ak.d(jets)?;
                }
                out.push(n - k, ak.scale(&(&sign * binomial(*n, k))));
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, map: &[(Var, DiffPoly)], jets: &Jets) -> Result<Op> {
        let mut out = Op::zero();
        for (n, a) in &self.coeffs {
            out.push(*n, a.substitute(map, jets)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(n, a)| match n {
                0 => format!("({a})"),
                1 => format!("({a})d"),
                _ => format!("({a})d^{n}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Op({self})")
    }
}

/// Matrix of scalar differential operators.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    rows: usize,
    cols: usize,
    entries: Vec<Op>,
}

impl DiffOp {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Op::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Op::mult(DiffPoly::one()));
        }
        m
    }

    pub fn scalar(op: Op) -> Self {
        Self { rows: 1, cols: 1, entries: vec![op] }
    }

    pub fn from_rows(rows: Vec<Vec<Op>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(dim_err("ragged operator matrix"));
        }
        Ok(Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Op {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, op: Op) {
        self.entries[i * self.cols + j] = op;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Op::is_zero)
    }

    /// Nonzero entries as `(row, col, op)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Op)> {
        self.entries.iter().enumerate().filter(|(_, op)| !op.is_zero()).map(|(k, op)| (k / self.cols, k % self.cols, op))
    }

    pub fn apply(&self, v: &[DiffPoly], jets: &Jets) -> Result<Vec<DiffPoly>> {
        if v.len() != self.cols {
            return Err(dim_err(format!("operator has {} columns, vector has {}", self.cols, v.len())));
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = DiffPoly::zero();
                for (j, x) in v.iter().enumerate() {
                    acc = &acc + &self.get(i, j).apply(x, jets)?;
                }
                Ok(acc)
            })
            .collect()
    }

    fn zip(&self, other: &DiffOp, f: impl Fn(&Op, &Op) -> Op) -> Result<DiffOp> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(dim_err("operator shapes differ"));
        }
        Ok(DiffOp { rows: self.rows, cols: self.cols, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect() })
    }

    pub fn add(&self, other: &DiffOp) -> Result<DiffOp> {
        self.zip(other, Op::add)
    }

    pub fn sub(&self, other: &DiffOp) -> Result<DiffOp> {
        self.zip(other, Op::sub)
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(Op::neg).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> DiffOp {
        let p = DiffPoly::constant(c.clone());
        DiffOp { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|op| op.left_mul(&p)).collect() }
    }

    pub fn compose(&self, other: &DiffOp, jets: &Jets) -> Result<DiffOp> {
        if self.cols != other.rows {
            return Err(dim_err("operator shapes do not chain"));
        }
        let mut out = DiffOp::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Op::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).compose(other.get(k, j), jets)?);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Transpose of entrywise adjoints.
    pub fn adjoint(&self, jets: &Jets) -> Result<DiffOp> {
        let mut out = DiffOp::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).adjoint(jets)?);
            }
        }
        Ok(out)
    }

    /// `self† + self`; zero iff skew-adjoint.
    pub fn skew_defect(&self, jets: &Jets) -> Result<DiffOp> {
        self.adjoint(jets)?.add(self)
    }

    pub fn substitute(&self, map: &[(Var, DiffPoly)], jets: &Jets) -> Result<DiffOp> {
        let entries = self.entries.iter().map(|op| op.substitute(map, jets)).collect::<Result<_>>()?;
        Ok(DiffOp { rows: self.rows, cols: self.cols, entries })
    }

    /// Recovers the operator `A` with `exprs = A(vars)`; every term must be
    /// linear in exactly one jet of the listed variables.
    pub fn from_linear(exprs: &[DiffPoly], vars: &[Var]) -> Result<DiffOp> {
        let mut out = DiffOp::zeros(exprs.len(), vars.len());
        for (i, e) in exprs.iter().enumerate() {
            let mut split: Vec<BTreeMap<u32, DiffPoly>> = vec![BTreeMap::new(); vars.len()];
            for (m, c) in e.terms() {
                let hits: Vec<&Jet> = m.keys().filter(|j| vars.contains(&j.var)).collect();
                let [jet] = hits.as_slice() else {
                    return Err(Error::NotLinear(format!("term {c} in component {i}")));
                };
                if m[*jet] != num_rational::Rational64::one() {
                    return Err(Error::NotLinear(jet.var.0.to_string()));
                }
                let mut rest = m.clone();
                rest.remove(*jet);
                let k = vars.iter().position(|v| *v == jet.var).expect("filtered above");
                split[k].entry(jet.order).or_default().add_term(rest, c.clone());
            }
            for (j, coeffs) in split.into_iter().enumerate() {
                out.set(i, j, Op::from_coeffs(coeffs));
            }
        }
        Ok(out)
    }

    /// Fréchet derivative of `exprs` with respect to `vars`.
    pub fn frechet(exprs: &[DiffPoly], vars: &[Var]) -> DiffOp {
        let mut out = DiffOp::zeros(exprs.len(), vars.len());
        for (i, e) in exprs.iter().enumerate() {
            for (j, v) in vars.iter().enumerate() {
                let coeffs = e
                    .jets()
                    .into_iter()
                    .filter(|jet| jet.var == *v)
                    .map(|jet| (jet.order, e.partial(jet)))
                    .collect();
                out.set(i, j, Op::from_coeffs(coeffs));
            }
        }
        out
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp {}x{}\n{self}", self.rows, self.cols)
    }
}
