//! Closed forms of `Li_{-r}(-x)` as rational functions with denominator
//! `(1+x)^{r+1}`, built either from Stirling numbers or from Eulerian
//! numbers, plus the generalized harmonic numbers whose generating function
//! is `Li_s(-x) / (1+x)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, format_rational, integer, sign_power};
use crate::tables::{EulerianTable, StirlingTable, Tables};

/// Dense univariate polynomial over exact rationals, ascending powers, with
/// no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coefficients: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `(1 + x)^e`.
    pub fn one_plus_x_pow(e: u32) -> Self {
        Self::new(
            (0..=e as i64)
                .map(|i| integer(binomial(e as u64, i)))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, power: usize) -> BigRational {
        self.coefficients
            .get(power)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coefficients.len().max(other.coefficients.len());
        Self::new(
            (0..n)
                .map(|i| self.coefficient(i) + other.coefficient(i))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coefficients.len().max(other.coefficients.len());
        Self::new(
            (0..n)
                .map(|i| self.coefficient(i) - other.coefficient(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out =
            vec![BigRational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coefficients.len() + 1);
        out.push(BigRational::zero());
        out.extend(self.coefficients.iter().cloned());
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * integer(i as u64))
                .collect(),
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let coeff = if magnitude.is_integer() {
                format_rational(&magnitude)
            } else {
                format!("({})", format_rational(&magnitude))
            };
            match power {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !magnitude.is_one() {
                        f.write_str(&coeff)?;
                    }
                    f.write_str("x")?;
                    if power > 1 {
                        write!(f, "^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `numerator(x) / (1 + x)^denominator_exponent`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    pub numerator: Polynomial,
    pub denominator_exponent: u32,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator_exponent: u32) -> Self {
        Self {
            numerator,
            denominator_exponent,
        }
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let denom = x + BigRational::one();
        if denom.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.numerator.eval(x) / num_traits::pow(denom, self.denominator_exponent as usize))
    }

    /// Rewrites over `(1+x)^e` for `e >= denominator_exponent`.
    pub fn with_denominator_exponent(&self, e: u32) -> Option<Self> {
        let extra = e.checked_sub(self.denominator_exponent)?;
        Some(Self::new(
            self.numerator.mul(&Polynomial::one_plus_x_pow(extra)),
            e,
        ))
    }

    /// `x d/dx` applied exactly: `x (N'(1+x) - e N) / (1+x)^{e+1}`.
    pub fn x_derivative(&self) -> Self {
        let n = &self.numerator;
        let e = integer(self.denominator_exponent as u64);
        let inner = n
            .derivative()
            .mul(&Polynomial::one_plus_x_pow(1))
            .sub(&n.scale(&e));
        Self::new(inner.shift(), self.denominator_exponent + 1)
    }

    /// Double-precision evaluator with the coefficients converted once.
    pub fn to_float(&self) -> FloatRationalFunction {
        FloatRationalFunction {
            coefficients: self
                .numerator
                .coefficients()
                .iter()
                .map(|c| c.to_f64().unwrap_or(f64::NAN))
                .collect(),
            denominator_exponent: self.denominator_exponent as i32,
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/(1+x)^{}",
            self.numerator, self.denominator_exponent
        )
    }
}

/// Floating-point image of a [`RationalFunction`].
#[derive(Debug, Clone, PartialEq)]
pub struct FloatRationalFunction {
    coefficients: Vec<f64>,
    denominator_exponent: i32,
}

impl FloatRationalFunction {
    /// Horner in `x` for `|x| <= 1`; for larger `|x|`, Horner in `1/x` on the
    /// reversed coefficients so nothing overflows as `x` grows.
    pub fn eval(&self, x: f64) -> f64 {
        let Some(degree) = self.coefficients.len().checked_sub(1) else {
            return 0.0;
        };
        if x.abs() <= 1.0 {
            let num = self
                .coefficients
                .iter()
                .rev()
                .fold(0.0, |acc, &c| acc * x + c);
            num / (1.0 + x).powi(self.denominator_exponent)
        } else {
            let t = 1.0 / x;
            let num = self.coefficients.iter().fold(0.0, |acc, &c| acc * t + c);
            num * x.powi(degree as i32 - self.denominator_exponent)
                / (1.0 + t).powi(self.denominator_exponent)
        }
    }
}

/// `Li_{-r}(-x)` as `sum_k k! S(r,k) (-x)^k (1+x)^{r-k}` over `(1+x)^{r+1}`.
/// The order-zero case is the geometric series `-x / (1+x)`.
pub fn polylog_stirling_form(table: &StirlingTable, r: usize) -> Result<RationalFunction> {
    if r == 0 {
        return Ok(RationalFunction::new(
            Polynomial::new(vec![integer(0), integer(-1)]),
            1,
        ));
    }
    let row = table.row(r)?;
    let mut coefficients = vec![BigRational::zero(); r + 1];
    for (i, s) in row.iter().enumerate() {
        let k = i + 1;
        let weight = factorial(k as u64) * s * sign_power(k as u64);
        // (-x)^k (1+x)^{r-k}
        for (m, slot) in coefficients.iter_mut().enumerate().skip(k) {
            let c = binomial((r - k) as u64, (m - k) as i64);
            if !c.is_zero() {
                *slot += integer(&weight * c);
            }
        }
    }
    Ok(RationalFunction::new(
        Polynomial::new(coefficients),
        r as u32 + 1,
    ))
}

/// `Li_{-r}(-x)` as `sum_j <r,j> (-x)^{r-j}` over `(1+x)^{r+1}`.
pub fn polylog_eulerian_form(table: &EulerianTable, r: usize) -> Result<RationalFunction> {
    if r < 1 {
        return Err(Error::OrderTooSmall(r));
    }
    let row = table.row(r)?;
    let mut coefficients = vec![BigRational::zero(); r + 1];
    for (j, e) in row.iter().enumerate() {
        let power = r - j;
        coefficients[power] = integer(e * sign_power(power as u64));
    }
    Ok(RationalFunction::new(
        Polynomial::new(coefficients),
        r as u32 + 1,
    ))
}

/// Whether the Stirling and Eulerian numerators coincide coefficient by
/// coefficient over the shared denominator `(1+x)^{r+1}`.
pub fn forms_equal(tables: &Tables, r: usize) -> Result<bool> {
    let stirling = polylog_stirling_form(&tables.stirling, r)?;
    let eulerian = polylog_eulerian_form(&tables.eulerian, r)?;
    Ok(stirling == eulerian)
}

/// `Li_{-r}(-x)` exactly, through the Stirling form.
pub fn polylog_eval_exact(table: &StirlingTable, r: usize, x: &BigRational) -> Result<BigRational> {
    polylog_stirling_form(table, r)?.eval(x)
}

/// `sum_{n=1}^{terms} H_n^{(-r)} (-x)^n`, the truncated generating function
/// of `Li_{-r}(-x) / (1+x)`.
pub fn harmonic_partial_sum(r: usize, x: &BigRational, terms: usize) -> Result<BigRational> {
    if x.abs() >= BigRational::one() {
        return Err(Error::OutsideDiskOfConvergence(format_rational(x)));
    }
    let neg_x = -x;
    let mut power = BigRational::one();
    let mut harmonic = BigInt::zero();
    let mut sum = BigRational::zero();
    for n in 1..=terms {
        harmonic += BigInt::from(n).pow(r as u32);
        power *= &neg_x;
        sum += &power * &harmonic;
    }
    Ok(sum)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedHarmonic {
    pub n: u64,
    pub s: i64,
    pub value: BigRational,
}

/// `H_n^{(s)} = sum_{k=1}^{n} k^{-s}` for any integer `s`.
pub fn generalized_harmonic(n: u64, s: i64) -> GeneralizedHarmonic {
    let e = s.unsigned_abs() as u32;
    let value = (1..=n)
        .map(|k| {
            let p = BigInt::from(k).pow(e);
            if s > 0 {
                BigRational::new(BigInt::one(), p)
            } else {
                BigRational::from_integer(p)
            }
        })
        .sum();
    GeneralizedHarmonic { n, s, value }
}
