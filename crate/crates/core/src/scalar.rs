//! Numeric backends for the error formulas.
//!
//! Every expected-error formula in this crate is a rational function of the
//! integer sample counts and of the two distribution summaries, so the same
//! code runs either on `f64` or on exact big rationals.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_count(n: u64) -> Self;

    /// Converts a finite float. Rationals take the shortest decimal that
    /// round-trips, so `0.1` becomes exactly `1/10`.
    fn from_f64(x: f64) -> Self;

    fn to_float(&self) -> f64;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl Scalar for f64 {
    fn from_count(n: u64) -> Self {
        n as f64
    }

    fn from_f64(x: f64) -> Self {
        x
    }

    fn to_float(&self) -> f64 {
        *self
    }
}

impl Scalar for BigRational {
    fn from_count(n: u64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_f64(x: f64) -> Self {
        rational_from_decimal(x)
    }

    fn to_float(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// The exact rational value of the shortest decimal representation of `x`.
///
/// Panics on non-finite input; callers validate first.
pub fn rational_from_decimal(x: f64) -> BigRational {
    assert!(x.is_finite(), "cannot convert {x} to a rational");
    if x == 0.0 {
        return BigRational::zero();
    }
    // `{:e}` yields the shortest round-trip form, e.g. "-1.25e-3".
    let text = format!("{x:e}");
    let (mantissa, exponent) = text.split_once('e').expect("exponent marker");
    let mut exponent: i64 = exponent.parse().expect("exponent digits");
    let negative = mantissa.starts_with('-');
    let mantissa = mantissa.trim_start_matches('-');
    let digits: String = match mantissa.split_once('.') {
        Some((int, frac)) => {
            exponent -= frac.len() as i64;
            format!("{int}{frac}")
        }
        None => mantissa.to_string(),
    };
    let mut value = BigRational::from_integer(digits.parse::<BigInt>().expect("decimal digits"));
    let ten = BigRational::from_integer(BigInt::from(10));
    let scale = num_traits::pow(ten, exponent.unsigned_abs() as usize);
    if exponent >= 0 {
        value *= scale;
    } else {
        value /= scale;
    }
    if negative {
        -value
    } else {
        value
    }
}

/// Parses `"p/q"`, an integer, or a decimal literal into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let x: f64 = text.parse().ok()?;
    x.is_finite().then(|| rational_from_decimal(x))
}
