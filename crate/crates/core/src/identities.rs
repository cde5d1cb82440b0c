//! Numerical checks of the zeta integral representations at nonpositive
//! integer order, each compared against an exact rational target.

use std::f64::consts::PI;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::bernoulli::{hurwitz_zeta_neg_int, zeta_neg_int};
use crate::error::{Error, Result};
use crate::polylog::{polylog_stirling_form, FloatRationalFunction, Polynomial, RationalFunction};
use crate::quadrature::{integrate_zero_to_inf, QuadratureResult};
use crate::rational::{format_rational, rational};
use crate::tables::StirlingTable;

/// Beyond this order the polylog coefficients are too large for the
/// double-precision integrand to hold the default tolerance.
pub const MAX_QUADRATURE_ORDER: usize = 10;
/// Largest order used for the Hurwitz-zeta identity.
pub const MAX_MELLIN_ORDER: usize = 6;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

// Share of the tolerance granted to the quadrature itself.
const QUADRATURE_SHARE: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// ζ(-r) from the `x^{-1/2}` kernel.
    Eq5,
    /// The ζ(0) = -1/2 instance of the same kernel.
    Eq6,
    /// ζ(1-r) from the `1/(x(1+x))` kernel.
    Eq10,
    /// The Mellin transform of `Li_{-r}(-x)/(1+x)` against Hurwitz zeta.
    Eq11,
}

impl Identity {
    pub fn as_str(self) -> &'static str {
        match self {
            Identity::Eq5 => "EQ5",
            Identity::Eq6 => "EQ6",
            Identity::Eq10 => "EQ10",
            Identity::Eq11 => "EQ11",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub identity: Identity,
    pub r: usize,
    /// Mellin exponent, EQ11 only.
    pub n: Option<BigRational>,
    pub exact_target: BigRational,
    /// Transcendental factor applied to `exact_target`; `π/sin(nπ)` for EQ11,
    /// otherwise 1.
    pub multiplier: f64,
    pub target: f64,
    pub estimate: f64,
    pub abs_err: f64,
    pub tolerance: f64,
    pub quadrature: QuadratureResult,
    pub pass: bool,
}

impl VerificationReport {
    fn new(
        case: &Case,
        exact_target: BigRational,
        multiplier: f64,
        estimate: f64,
        tolerance: f64,
        quadrature: QuadratureResult,
    ) -> Self {
        let target = multiplier * exact_target.to_f64().unwrap_or(f64::NAN);
        let abs_err = (estimate - target).abs();
        Self {
            identity: case.identity,
            r: case.r,
            n: case.n.clone(),
            exact_target,
            multiplier,
            target,
            estimate,
            abs_err,
            tolerance,
            quadrature,
            pass: abs_err <= tolerance,
        }
    }
}

/// One point of the verification grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub identity: Identity,
    pub r: usize,
    pub n: Option<BigRational>,
}

impl Case {
    pub fn run(&self, tol: f64) -> Result<VerificationReport> {
        match self.identity {
            Identity::Eq5 => verify_eq5(self.r, tol),
            Identity::Eq6 => verify_eq6(tol),
            Identity::Eq10 => verify_eq10(self.r, tol),
            Identity::Eq11 => {
                let n = self.n.clone().unwrap_or_else(|| rational(1, 2));
                verify_eq11(self.r, &n, tol)
            }
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={}", self.identity, self.r)?;
        if let Some(n) = &self.n {
            write!(f, " n={}", format_rational(n))?;
        }
        Ok(())
    }
}

/// A suite entry: the case and either its report or the quadrature failure.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseOutcome {
    pub case: Case,
    pub outcome: Result<VerificationReport>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, Ok(report) if report.pass)
    }
}

fn polylog_float(r: usize) -> Result<RationalFunction> {
    let table = StirlingTable::build(r.max(1))?;
    polylog_stirling_form(&table, r)
}

fn check_order(r: usize, max: usize) -> Result<()> {
    if r > max {
        return Err(Error::OrderTooLarge { r, max });
    }
    Ok(())
}

fn run_eq5(case: Case, tol: f64) -> Result<VerificationReport> {
    let r = case.r;
    check_order(r, MAX_QUADRATURE_ORDER)?;
    let li = polylog_float(r)?.to_float();
    let scale = 1.0 / (PI * (2.0 - 2f64.powi(-(r as i32))));
    let quad = integrate_zero_to_inf(
        |x| li.eval(x) / (x.sqrt() * (1.0 + x)),
        QUADRATURE_SHARE * tol / scale,
    )?;
    let estimate = scale * quad.estimate;
    Ok(VerificationReport::new(
        &case,
        zeta_neg_int(r),
        1.0,
        estimate,
        tol,
        quad,
    ))
}

/// `ζ(-r) = 1/(π(2 - 2^{-r})) ∫₀^∞ x^{-1/2} Li_{-r}(-x) / (1+x) dx`.
pub fn verify_eq5(r: usize, tol: f64) -> Result<VerificationReport> {
    run_eq5(
        Case {
            identity: Identity::Eq5,
            r,
            n: None,
        },
        tol,
    )
}

/// `ζ(0) = -1/2` through the `x^{-1/2}` kernel.
pub fn verify_eq6(tol: f64) -> Result<VerificationReport> {
    run_eq5(
        Case {
            identity: Identity::Eq6,
            r: 0,
            n: None,
        },
        tol,
    )
}

/// `ζ(1-r) = (1/r) ∫₀^∞ Li_{-r}(-x) / (x(1+x)) dx` for `r >= 1`.
pub fn verify_eq10(r: usize, tol: f64) -> Result<VerificationReport> {
    if r < 1 {
        return Err(Error::OrderTooSmall(r));
    }
    check_order(r, MAX_QUADRATURE_ORDER)?;
    let li = polylog_float(r)?;
    // The numerator has no constant term, so dividing by x stays polynomial.
    let over_x: FloatRationalFunction = RationalFunction::new(
        Polynomial::new(li.numerator.coefficients()[1..].to_vec()),
        li.denominator_exponent,
    )
    .to_float();
    let scale = 1.0 / r as f64;
    let quad = integrate_zero_to_inf(
        |x| over_x.eval(x) / (1.0 + x),
        QUADRATURE_SHARE * tol / scale,
    )?;
    let case = Case {
        identity: Identity::Eq10,
        r,
        n: None,
    };
    Ok(VerificationReport::new(
        &case,
        zeta_neg_int(r - 1),
        1.0,
        scale * quad.estimate,
        tol,
        quad,
    ))
}

/// `∫₀^∞ x^{n-1} Li_{-r}(-x) / (1+x) dx = π/sin(nπ) · (ζ(-r) - ζ(-r, 1-n))`
/// for `0 < n < 1`.
pub fn verify_eq11(r: usize, n: &BigRational, tol: f64) -> Result<VerificationReport> {
    if !n.is_positive() || n >= &BigRational::one() {
        return Err(Error::MellinExponentOutOfRange(format_rational(n)));
    }
    check_order(r, MAX_MELLIN_ORDER)?;
    let li = polylog_float(r)?.to_float();
    let nf = n.to_f64().unwrap_or(f64::NAN);
    let quad = integrate_zero_to_inf(
        |x| x.powf(nf - 1.0) * li.eval(x) / (1.0 + x),
        QUADRATURE_SHARE * tol,
    )?;
    let exact = zeta_neg_int(r) - hurwitz_zeta_neg_int(r, &(BigRational::one() - n))?;
    let multiplier = PI / (nf * PI).sin();
    let case = Case {
        identity: Identity::Eq11,
        r,
        n: Some(n.clone()),
    };
    Ok(VerificationReport::new(
        &case,
        exact,
        multiplier,
        quad.estimate,
        tol,
        quad,
    ))
}

/// Mellin exponents used by the default grid.
pub fn default_mellin_exponents() -> Vec<BigRational> {
    vec![rational(1, 2), rational(1, 3), rational(1, 4)]
}

/// EQ5 for `r = 0..=max_r`, EQ10 for `r = 1..=max_r`, and EQ11 over
/// `r = 0..=min(max_r, 6)` crossed with the given exponents.
pub fn suite_cases(max_r: usize, exponents: &[BigRational]) -> Vec<Case> {
    let eq5 = (0..=max_r).map(|r| Case {
        identity: Identity::Eq5,
        r,
        n: None,
    });
    let eq10 = (1..=max_r).map(|r| Case {
        identity: Identity::Eq10,
        r,
        n: None,
    });
    let eq11 = (0..=max_r.min(MAX_MELLIN_ORDER)).flat_map(|r| {
        exponents.iter().map(move |n| Case {
            identity: Identity::Eq11,
            r,
            n: Some(n.clone()),
        })
    });
    eq5.chain(eq10).chain(eq11).collect()
}

/// Runs cases concurrently; outcomes come back in case order.
pub fn run_cases(cases: &[Case], tol: f64) -> Vec<CaseOutcome> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = cases
            .iter()
            .map(|case| scope.spawn(move || case.run(tol)))
            .collect();
        cases
            .iter()
            .zip(handles)
            .map(|(case, handle)| CaseOutcome {
                case: case.clone(),
                outcome: handle.join().expect("verification case panicked"),
            })
            .collect()
    })
}

pub fn run_suite(max_r: usize, tol: f64) -> Vec<CaseOutcome> {
    run_cases(&suite_cases(max_r, &default_mellin_exponents()), tol)
}
