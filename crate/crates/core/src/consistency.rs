//! Exact invariant checks over a range of orders: every Bernoulli formula
//! against the oracle, structural properties of the sequence, and the
//! polylogarithm form identities.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bernoulli::{
    evaluate, faulhaber_check, hurwitz_zeta_neg_int, oracle_sequence, staudt_clausen_sum,
    zeta_neg_int, Method,
};
use crate::error::Result;
use crate::polylog::{forms_equal, polylog_stirling_form, Polynomial, RationalFunction};
use crate::rational::integer;
use crate::tables::Tables;

/// Orders up to which the derivative-operator oracle is run.
pub const DERIVATIVE_ORACLE_MAX: usize = 12;
pub const FAULHABER_MAX_ORDER: usize = 20;
pub const FAULHABER_MAX_TERMS: u64 = 100;
pub const HURWITZ_MAX_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    /// Inclusive range of the parameter that was swept.
    pub first: usize,
    pub last: usize,
    /// Smallest parameter at which the check failed.
    pub first_failure: Option<usize>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn sweep(
    name: &'static str,
    range: std::ops::RangeInclusive<usize>,
    mut ok: impl FnMut(usize) -> bool,
) -> CheckResult {
    let (first, last) = (*range.start(), *range.end());
    CheckResult {
        name,
        first,
        last,
        first_failure: range.into_iter().find(|&i| !ok(i)),
    }
}

/// Runs the exact suite for orders `1..=max_r`.
pub fn exact_checks(max_r: usize) -> Result<Vec<CheckResult>> {
    let tables = Tables::build(max_r.max(1))?;
    let oracle = oracle_sequence(max_r + 1);
    let mut values: Vec<(Method, Vec<BigRational>)> = Vec::new();
    for method in [Method::Eq1, Method::Eq2, Method::Eq3, Method::Eq4] {
        let vals = (1..=max_r)
            .map(|r| evaluate(method, &tables, r).map(|v| v.value))
            .collect::<Result<Vec<_>>>()?;
        values.push((method, vals));
    }
    let by_method = |m: Method| {
        &values
            .iter()
            .find(|(k, _)| *k == m)
            .expect("method computed")
            .1
    };

    let mut checks = Vec::new();
    for (method, name) in [
        (Method::Eq1, "eq1 == oracle B_{r+1}"),
        (Method::Eq2, "eq2 == oracle B_{r+1}"),
        (Method::Eq3, "eq3 == oracle B_r"),
        (Method::Eq4, "eq4 == oracle B_r"),
    ] {
        let vals = by_method(method);
        checks.push(sweep(name, 1..=max_r, |r| {
            vals[r - 1] == oracle[method.index_for_order(r)]
        }));
    }
    checks.push(sweep("stirling form == eulerian form", 1..=max_r, |r| {
        forms_equal(&tables, r).unwrap_or(false)
    }));

    checks.push(sweep("odd indices >= 3 vanish", 3..=max_r + 1, |i| {
        if i % 2 == 0 {
            return true;
        }
        oracle[i].is_zero()
            && values.iter().all(|(m, vals)| {
                // order that yields index i for this method
                let r = if m.index_for_order(1) == 2 { i - 1 } else { i };
                r > max_r || vals[r - 1].is_zero()
            })
    }));
    checks.push(sweep("sign(B_2m) == (-1)^(m+1)", 2..=max_r + 1, |i| {
        i % 2 == 1 || oracle[i].is_positive() == ((i / 2) % 2 == 1)
    }));
    checks.push(sweep("von Staudt-Clausen", 2..=max_r + 1, |i| {
        i % 2 == 1 || staudt_clausen_sum(i as u64, &oracle[i]).is_integer()
    }));

    let mut derivative = RationalFunction::new(Polynomial::new(vec![integer(0), integer(-1)]), 1);
    checks.push(sweep(
        "stirling form == x d/dx oracle",
        1..=max_r.min(DERIVATIVE_ORACLE_MAX),
        |r| {
            derivative = derivative.x_derivative();
            polylog_stirling_form(&tables.stirling, r).is_ok_and(|f| f == derivative)
        },
    ));
    checks.push(sweep(
        "faulhaber power sums",
        1..=max_r.min(FAULHABER_MAX_ORDER),
        |r| {
            (1..=FAULHABER_MAX_TERMS).all(|n| {
                let (lhs, rhs) = faulhaber_check(r, n);
                lhs == rhs
            })
        },
    ));
    checks.push(sweep(
        "hurwitz zeta(-r, 1) == zeta(-r)",
        0..=max_r.min(HURWITZ_MAX_ORDER),
        |r| hurwitz_zeta_neg_int(r, &integer(1)).is_ok_and(|h| h == zeta_neg_int(r)),
    ));
    Ok(checks)
}
