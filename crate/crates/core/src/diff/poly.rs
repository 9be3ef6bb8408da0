use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::scalar::render_coeff;
use crate::exact::Scalar;

/// Default ceiling on derivative orders.
pub const DEFAULT_MAX_JET_ORDER: u32 = 12;

/// Limits for symbolic differentiation. Any operation that would create a
/// jet beyond `max_order` fails with [`Error::JetOrder`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Jets {
    pub max_order: u32,
}

impl Default for Jets {
    fn default() -> Self {
        Self { max_order: DEFAULT_MAX_JET_ORDER }
    }
}

impl Jets {
    pub fn new(max_order: u32) -> Self {
        Self { max_order }
    }

    fn check(&self, order: u32) -> Result<()> {
        if order > self.max_order {
            return Err(Error::JetOrder { order, ceiling: self.max_order });
        }
        Ok(())
    }
}

/// A differential indeterminate, identified by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub &'static str);

/// `v^{(order)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Jet {
    pub var: Var,
    pub order: u32,
}

/// Product of jets raised to rational powers.
pub type Monomial = BTreeMap<Jet, Rational64>;

/// Polynomial in jets with exact rational coefficients and rational
/// exponents.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiffPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl DiffPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Scalar::from_integer(n.into()))
    }

    /// `v^{(order)}`.
    pub fn jet(var: Var, order: u32) -> Self {
        Self::jet_pow(var, order, Rational64::one())
    }

    /// `(v^{(order)})^e`.
    pub fn jet_pow(var: Var, order: u32, e: Rational64) -> Self {
        let mut m = Monomial::new();
        if !e.is_zero() {
            m.insert(Jet { var, order }, e);
        }
        let mut p = Self::zero();
        p.add_term(m, Scalar::one());
        p
    }

    pub fn var(var: Var) -> Self {
        Self::jet(var, 0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
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

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Scalar {
        self.terms.get(&Monomial::new()).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Every jet appearing with nonzero exponent.
    pub fn jets(&self) -> Vec<Jet> {
        let mut v: Vec<Jet> = self.terms.keys().flat_map(|m| m.keys().copied()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.jets().into_iter().map(|j| j.var).collect();
        v.dedup();
        v
    }

    pub fn max_order(&self, var: Var) -> Option<u32> {
        self.jets().into_iter().filter(|j| j.var == var).map(|j| j.order).max()
    }

    /// `∂/∂v^{(n)}`.
    pub fn partial(&self, jet: Jet) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some(e) = m.get(&jet) {
                let mut k = m.clone();
                let ne = e - Rational64::one();
                if ne.is_zero() {
                    k.remove(&jet);
                } else {
                    k.insert(jet, ne);
                }
                out.add_term(k, c * rat(e));
            }
        }
        out
    }

    /// Total derivative `∂ = Σ v^{(n+1)} ∂/∂v^{(n)}`.
    pub fn d(&self, jets: &Jets) -> Result<Self> {
        let mut out = Self::zero();
        for j in self.jets() {
            jets.check(j.order + 1)?;
            out = &out + &(&self.partial(j) * &Self::jet(j.var, j.order + 1));
        }
        Ok(out)
    }

    pub fn dn(&self, n: u32, jets: &Jets) -> Result<Self> {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.d(jets)?;
        }
        Ok(p)
    }

    /// Variational derivative `δ/δv = Σ_n (-∂)^n ∂/∂v^{(n)}`.
    pub fn euler(&self, var: Var, jets: &Jets) -> Result<Self> {
        let mut out = Self::zero();
        for j in self.jets().into_iter().filter(|j| j.var == var) {
            let t = self.partial(j).dn(j.order, jets)?;
            out = if j.order % 2 == 0 { &out + &t } else { &out - &t };
        }
        Ok(out)
    }

    /// Replaces each listed variable by an expression, jets by derivatives
    /// of it. Substituted variables must carry non-negative integer
    /// exponents.
    pub fn substitute(&self, map: &[(Var, DiffPoly)], jets: &Jets) -> Result<Self> {
        let mut cache: BTreeMap<Jet, DiffPoly> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            let mut kept = Monomial::new();
            for (j, e) in m {
                match map.iter().find(|(v, _)| *v == j.var) {
                    None => {
                        kept.insert(*j, *e);
                    }
                    Some((_, img)) => {
                        if !e.is_integer() || e.is_negative() {
                            return Err(Error::Precondition(format!("cannot substitute into {} to the power {e}", j.var.0)));
                        }
                        let base = match cache.get(j) {
                            Some(b) => b.clone(),
                            None => {
                                let b = img.dn(j.order, jets)?;
                                cache.insert(*j, b.clone());
                                b
                            }
                        };
                        t = &t * &base.pow(e.to_integer() as u32);
                    }
                }
            }
            let mut rest = Self::zero();
            rest.add_term(kept, Scalar::one());
            out = &out + &(&t * &rest);
        }
        Ok(out)
    }

    /// Writes `self = Σ_n a_n v^{(n)}` and returns the `a_n`; fails unless
    /// every term is linear in the jets of `v`.
    pub fn linear_coefficients(&self, var: Var) -> Result<BTreeMap<u32, DiffPoly>> {
        let mut out: BTreeMap<u32, DiffPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let hits: Vec<(&Jet, &Rational64)> = m.iter().filter(|(j, _)| j.var == var).collect();
            match hits.as_slice() {
                [(j, e)] if **e == Rational64::one() => {
                    let mut k = m.clone();
                    k.remove(*j);
                    out.entry(j.order).or_default().add_term(k, c.clone());
                }
                _ => return Err(Error::NotLinear(var.0.to_string())),
            }
        }
        out.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Coefficient of a monomial given as `(var, order, exponent)` factors.
    pub fn coefficient(&self, factors: &[(Var, u32, i64)]) -> Scalar {
        let m: Monomial = factors.iter().map(|&(v, o, e)| (Jet { var: v, order: o }, Rational64::from_integer(e))).collect();
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Renames variables.
    pub fn rename(&self, map: &[(Var, Var)]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k: Monomial = m
                .iter()
                .map(|(j, e)| {
                    let var = map.iter().find(|(a, _)| *a == j.var).map_or(j.var, |(_, b)| *b);
                    (Jet { var, order: j.order }, *e)
                })
                .collect();
            out.add_term(k, c.clone());
        }
        out
    }
}

fn rat(e: &Rational64) -> Scalar {
    Scalar::new((*e.numer()).into(), (*e.denom()).into())
}

/// `δ/δv` vanishes for every variable and there is no constant term: the
/// test for membership in the image of `∂`.
pub fn im_partial_test(p: &DiffPoly, jets: &Jets) -> Result<bool> {
    if !p.constant_term().is_zero() {
        return Ok(false);
    }
    for v in p.vars() {
        if !p.euler(v, jets)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn render_jet(j: &Jet) -> String {
    match j.order {
        0 => j.var.0.to_string(),
        1..=3 => format!("{}{}", j.var.0, "'".repeat(j.order as usize)),
        n => format!("{}^({n})", j.var.0),
    }
}

impl fmt::Display for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .iter()
                .map(|(j, e)| {
                    let base = render_jet(j);
                    if *e == Rational64::one() {
                        base
                    } else if e.is_integer() && e.is_positive() {
                        format!("{base}^{e}")
                    } else {
                        format!("{base}^({e})")
                    }
                })
                .collect();
            let mag = render_coeff(c);
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffPoly({self})")
    }
}

impl Add for &DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        let (mut out, other) = if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        self + &-rhs
    }
}

impl Neg for &DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        DiffPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        let mut out = DiffPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let mut m = a.clone();
                for (j, e) in b {
                    let s = m.get(j).copied().unwrap_or_else(Rational64::zero) + e;
                    if s.is_zero() {
                        m.remove(j);
                    } else {
                        m.insert(*j, s);
                    }
                }
                out.add_term(m, x * y);
            }
        }
        out
    }
}
