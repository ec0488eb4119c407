//! Exact integer and rational helpers.
//!
//! Rationals are [`num_rational::BigRational`], which keeps every value in
//! lowest terms with a positive denominator. This module adds the pieces the
//! rest of the crate needs on top: checked construction, factorials, set-wise
//! gcd/lcm, p-adic valuations and the `"p/q"` string form used in JSON.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Builds `num/den` in lowest terms, sign carried by the numerator.
pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(num.into(), den))
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// p-adic valuation of a rational. Zero has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `self >= bound`, with infinity above every bound.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinite => true,
        }
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in a nonzero integer.
pub fn int_valuation(x: &BigInt, p: u64) -> u64 {
    debug_assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut e = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        x = q;
        e += 1;
    }
}

pub fn padic_valuation(x: &BigRational, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let num = int_valuation(x.numer(), p) as i64;
    let den = int_valuation(x.denom(), p) as i64;
    Ok(Valuation::Finite(num - den))
}

/// Exponent of `p` in `n!` (Legendre).
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut e = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        e += q;
    }
    e
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// All factorials `0!..=n!`.
pub fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for i in 1..=n {
        let next = &out[i - 1] * i;
        out.push(next);
    }
    out
}

/// gcd of the nonzero entries. All-zero (or empty) input is degenerate.
pub fn gcd_set(xs: &[BigInt]) -> Result<BigInt> {
    let g = xs.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::Degenerate("gcd of an all-zero set".into()));
    }
    Ok(g)
}

pub fn lcm_set(xs: &[BigInt]) -> Result<BigInt> {
    if xs.is_empty() {
        return Err(Error::Degenerate("lcm of an empty set".into()));
    }
    if xs.iter().any(Zero::is_zero) {
        return Err(Error::Input("lcm of a set containing zero".into()));
    }
    Ok(xs.iter().fold(BigInt::one(), |l, x| l.lcm(x)))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            rational(n, d)
        }
        None => Ok(int(s.parse::<BigInt>().map_err(|_| bad())?)),
    }
}

/// `y / x` is an integer. Used for divisibility between positive rationals.
pub fn divides(x: &BigRational, y: &BigRational) -> bool {
    !x.is_zero() && (y / x).is_integer()
}
