use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `BigRational` keeps every value reduced with a
/// positive denominator.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `n/d`.
///
/// # Panics
/// Panics when `d == 0`; use [`parse_scalar`] for untrusted input.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"` or `"p/q"` with optional sign and surrounding whitespace.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::Parse(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Scalar::new(n, d))
}

/// Renders as `"p"` for integers and `"p/q"` otherwise.
pub fn render(x: &Scalar) -> String {
    x.to_string()
}

/// Rendering used inside polynomial terms: wraps negative or fractional
/// values so they read unambiguously after a sign.
pub(crate) fn render_coeff(x: &Scalar) -> String {
    if x.is_integer() {
        x.abs().to_string()
    } else {
        format!("({})", x.abs())
    }
}
