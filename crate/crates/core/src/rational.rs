//! Exact integer and rational arithmetic plus the combinatorial factors that
//! the explicit Bernoulli formulas consume.
//!
//! `BigRational` is always stored in lowest terms with a positive
//! denominator, so structural equality is canonical equality.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// n! computed exactly.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// C(n, k), with the convention that it vanishes for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // Each partial product C(n - k + i, i) is an integer, so exact division holds.
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// 2^e as an exact rational; negative exponents give reciprocals.
pub fn pow2(e: i64) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// (-1)^e as a small signed integer.
pub fn sign_power(e: u64) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Serializes as `num/den` in base 10, or just `num` when the value is an
/// integer. The sign always sits on the numerator.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `num/den` or a bare integer into canonical form.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::ParseRational(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}
