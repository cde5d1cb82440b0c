//! Bernoulli numbers from the Stirling- and Eulerian-number explicit
//! formulas, an independent recurrence oracle, and the zeta values at
//! nonpositive integers that the integral checks compare against.
//!
//! Convention: `B_1 = -1/2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, integer, pow2, sign_power};
use crate::tables::{EulerianTable, StirlingTable, Tables};

/// Which route produced a Bernoulli value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Stirling form of `B_{r+1}`.
    Eq1,
    /// Eulerian form of `B_{r+1}`.
    Eq2,
    /// Stirling form of `B_r`.
    Eq3,
    /// Eulerian form of `B_r`.
    Eq4,
    /// Classical recurrence `sum_{j<=m} C(m+1, j) B_j = 0`.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Eq1,
        Method::Eq2,
        Method::Eq3,
        Method::Eq4,
        Method::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Eq1 => "eq1",
            Method::Eq2 => "eq2",
            Method::Eq3 => "eq3",
            Method::Eq4 => "eq4",
            Method::Oracle => "oracle",
        }
    }

    /// Bernoulli index produced when the method is driven with order `r`.
    pub fn index_for_order(self, r: usize) -> usize {
        match self {
            Method::Eq1 | Method::Eq2 => r + 1,
            Method::Eq3 | Method::Eq4 | Method::Oracle => r,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliValue {
    pub index: usize,
    pub value: BigRational,
    pub method: Method,
}

/// `B_0, ..., B_max` from the recurrence.
pub fn oracle_sequence(max: usize) -> Vec<BigRational> {
    let mut seq: Vec<BigRational> = Vec::with_capacity(max + 1);
    seq.push(BigRational::one());
    // Pascal row m + 1, advanced in place.
    let mut pascal: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for m in 1..=max {
        let mut next = Vec::with_capacity(pascal.len() + 1);
        next.push(BigInt::one());
        next.extend(pascal.windows(2).map(|w| &w[0] + &w[1]));
        next.push(BigInt::one());
        pascal = next;
        let acc: BigRational = seq
            .iter()
            .zip(&pascal)
            .filter(|(b, _)| !b.is_zero())
            .map(|(b, c)| b * c)
            .sum();
        seq.push(-acc / integer(m as u64 + 1));
    }
    seq
}

pub fn bernoulli_oracle(m: usize) -> BernoulliValue {
    let value = oracle_sequence(m).pop().expect("sequence is never empty");
    BernoulliValue {
        index: m,
        value,
        method: Method::Oracle,
    }
}

fn check_order(r: usize, table_rows: usize) -> Result<()> {
    if r < 1 {
        return Err(Error::OrderTooSmall(r));
    }
    if r > table_rows {
        return Err(Error::RowOutOfRange {
            row: r,
            max_row: table_rows,
        });
    }
    Ok(())
}

/// `B_{r+1}` from Stirling numbers with the `2^{-2k} (2k-1)!/(k-1)!` weights.
pub fn bernoulli_eq1(table: &StirlingTable, r: usize) -> Result<BernoulliValue> {
    check_order(r, table.max_row())?;
    let mut sum = BigRational::zero();
    for (i, s) in table.row(r)?.iter().enumerate() {
        let k = i as u64 + 1;
        // (2k-1)!/(k-1)! = k (k+1) ... (2k-1)
        let rising: BigInt = (k..2 * k).fold(BigInt::one(), |acc, v| acc * v);
        let term = BigRational::new(s * rising, BigInt::from(k + 1)) * pow2(-2 * k as i64);
        sum += term * BigInt::from(sign_power(k));
    }
    let r64 = r as u64;
    let prefactor = BigRational::new(
        BigInt::from(sign_power(r64)) * (r64 + 1) * (BigInt::one() << r),
        (BigInt::one() << (r + 1)) - 1,
    );
    Ok(BernoulliValue {
        index: r + 1,
        value: prefactor * sum,
        method: Method::Eq1,
    })
}

/// `B_{r+1}` from Eulerian numbers weighted by `C(r-1, l-1) / C(2r, 2l-1)`.
pub fn bernoulli_eq2(table: &EulerianTable, r: usize) -> Result<BernoulliValue> {
    check_order(r, table.max_row())?;
    let r64 = r as u64;
    let mut sum = BigRational::zero();
    for l in 1..=r as i64 {
        let e = table.get(r, r as i64 - l)?;
        let term = BigRational::new(e * binomial(r64 - 1, l - 1), binomial(2 * r64, 2 * l - 1));
        sum += term * BigInt::from(sign_power(l as u64));
    }
    let prefactor = BigRational::new(
        BigInt::from(sign_power(r64)) * (r64 + 1) * binomial(2 * r64, r as i64 - 1),
        (BigInt::one() << r) * ((BigInt::one() << (r + 1)) - 1),
    );
    Ok(BernoulliValue {
        index: r + 1,
        value: prefactor * sum,
        method: Method::Eq2,
    })
}

/// `B_r` from Stirling numbers with `(k-1)!/(k+1)` weights.
pub fn bernoulli_eq3(table: &StirlingTable, r: usize) -> Result<BernoulliValue> {
    check_order(r, table.max_row())?;
    let mut sum = BigRational::zero();
    let mut fact = BigInt::one(); // (k-1)!
    for (i, s) in table.row(r)?.iter().enumerate() {
        let k = i as u64 + 1;
        if k > 1 {
            fact *= k - 1;
        }
        let term = BigRational::new(s * &fact, BigInt::from(k + 1));
        sum += term * BigInt::from(sign_power(k));
    }
    Ok(BernoulliValue {
        index: r,
        value: sum * BigInt::from(sign_power(r as u64 - 1)),
        method: Method::Eq3,
    })
}

/// `B_r` from Eulerian numbers with `1 / (l C(r+1, l))` weights.
pub fn bernoulli_eq4(table: &EulerianTable, r: usize) -> Result<BernoulliValue> {
    check_order(r, table.max_row())?;
    let mut sum = BigRational::zero();
    for l in 1..=r as i64 {
        let e = table.get(r, r as i64 - l)?;
        let den = binomial(r as u64 + 1, l) * l;
        sum += BigRational::new(e * sign_power(l as u64), den);
    }
    Ok(BernoulliValue {
        index: r,
        value: sum * BigInt::from(sign_power(r as u64 - 1)),
        method: Method::Eq4,
    })
}

/// Drives one method at order `r`. For `Oracle` the result is `B_r`.
pub fn evaluate(method: Method, tables: &Tables, r: usize) -> Result<BernoulliValue> {
    match method {
        Method::Eq1 => bernoulli_eq1(&tables.stirling, r),
        Method::Eq2 => bernoulli_eq2(&tables.eulerian, r),
        Method::Eq3 => bernoulli_eq3(&tables.stirling, r),
        Method::Eq4 => bernoulli_eq4(&tables.eulerian, r),
        Method::Oracle => Ok(bernoulli_oracle(r)),
    }
}

/// ζ(-r) = (-1)^r B_{r+1} / (r+1).
pub fn zeta_neg_int(r: usize) -> BigRational {
    zeta_from_bernoulli(r, &bernoulli_oracle(r + 1).value)
}

fn zeta_from_bernoulli(r: usize, b: &BigRational) -> BigRational {
    b * BigInt::from(sign_power(r as u64)) / integer(r as u64 + 1)
}

/// B_m(a) with coefficients in ascending powers of `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliPolynomial {
    coefficients: Vec<BigRational>,
}

impl BernoulliPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `coefficients()[j]` multiplies `a^j`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn eval(&self, a: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * a + c)
    }
}

pub fn bernoulli_poly(m: usize) -> BernoulliPolynomial {
    bernoulli_poly_from(&oracle_sequence(m))
}

fn bernoulli_poly_from(seq: &[BigRational]) -> BernoulliPolynomial {
    let m = seq.len() - 1;
    let coefficients = (0..=m)
        .map(|j| &seq[m - j] * binomial(m as u64, j as i64))
        .collect();
    BernoulliPolynomial { coefficients }
}

/// ζ(-r, a) = -B_{r+1}(a) / (r+1) for `a > 0`.
pub fn hurwitz_zeta_neg_int(r: usize, a: &BigRational) -> Result<BigRational> {
    if !a.is_positive() {
        return Err(Error::NonPositiveShift(crate::rational::format_rational(a)));
    }
    Ok(-bernoulli_poly(r + 1).eval(a) / integer(r as u64 + 1))
}

/// Both sides of `sum_{k<=n} k^r = ζ(-r) - ζ(-r, n+1)`.
pub fn faulhaber_check(r: usize, n: u64) -> (BigRational, BigRational) {
    let lhs: BigInt = (1..=n).map(|k| BigInt::from(k).pow(r as u32)).sum();
    let seq = oracle_sequence(r + 1);
    let zeta = zeta_from_bernoulli(r, &seq[r + 1]);
    let hurwitz = -bernoulli_poly_from(&seq).eval(&integer(n + 1)) / integer(r as u64 + 1);
    (BigRational::from_integer(lhs), zeta - hurwitz)
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Primes `p` with `(p - 1) | index`, found by trial division.
pub fn staudt_clausen_primes(index: u64) -> Vec<u64> {
    (2..=index + 1)
        .filter(|&p| index.is_multiple_of(p - 1) && is_prime(p))
        .collect()
}

/// `B_index + sum 1/p` over the von Staudt–Clausen primes; an integer for
/// every even `index >= 2`.
pub fn staudt_clausen_sum(index: u64, value: &BigRational) -> BigRational {
    staudt_clausen_primes(index)
        .into_iter()
        .fold(value.clone(), |acc, p| {
            acc + BigRational::new(BigInt::one(), BigInt::from(p))
        })
}
