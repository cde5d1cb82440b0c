//! Exit criteria. Each test prints exactly one `[PASS]`/`[FAIL]` line; run
//! with `--nocapture` to see them all.

use std::time::{Duration, Instant};

use bernoulli_core::bernoulli::{
    bernoulli_eq1, bernoulli_eq2, bernoulli_eq3, bernoulli_eq4, faulhaber_check, oracle_sequence,
    staudt_clausen_sum, zeta_neg_int,
};
use bernoulli_core::identities::{
    default_mellin_exponents, verify_eq10, verify_eq11, verify_eq5, verify_eq6, VerificationReport,
};
use bernoulli_core::polylog::{
    forms_equal, harmonic_partial_sum, polylog_eulerian_form, polylog_eval_exact,
    polylog_stirling_form, Polynomial, RationalFunction,
};
use bernoulli_core::rational::{format_rational, integer, rational};
use bernoulli_core::tables::Tables;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

const EQ12_BAR: (i64, i64) = (1, 1_000_000_000_000);

fn report(id: &str, description: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {description}: {detail}");
}

#[test]
fn ac1_cross_formula_agreement() {
    let start = Instant::now();
    let tables = Tables::build(200).unwrap();
    let oracle = oracle_sequence(201);
    let mut failures = Vec::new();
    for r in 1..=100 {
        let b1 = bernoulli_eq1(&tables.stirling, r).unwrap();
        let b2 = bernoulli_eq2(&tables.eulerian, r).unwrap();
        if b1.value != b2.value || b1.value != oracle[r + 1] {
            failures.push(format!("eq1/eq2 r={r}"));
        }
    }
    for r in 1..=200 {
        let b3 = bernoulli_eq3(&tables.stirling, r).unwrap();
        let b4 = bernoulli_eq4(&tables.eulerian, r).unwrap();
        if b3.value != oracle[r] || b4.value != oracle[r] {
            failures.push(format!("eq3/eq4 r={r}"));
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(
        "AC1",
        "eq1 == eq2 == oracle (r<=100), eq3 == eq4 == oracle (r<=200), exact",
        ok,
        &format!("{} mismatches, {:.2?}", failures.len(), elapsed),
    );
    assert!(ok, "mismatches: {failures:?}, elapsed {elapsed:?}");
}

#[test]
fn ac2_zeta_at_zero() {
    let exact = zeta_neg_int(0);
    let quad = verify_eq6(1e-10).unwrap();
    let ok = exact == rational(-1, 2) && (quad.estimate + 0.5).abs() <= 1e-10;
    report(
        "AC2",
        "zeta(0) = -1/2 exactly and by quadrature within 1e-10",
        ok,
        &format!(
            "exact {}, quadrature {:.17e} (err {:.3e})",
            format_rational(&exact),
            quad.estimate,
            (quad.estimate + 0.5).abs()
        ),
    );
    assert!(ok);
}

#[test]
fn ac3_odd_index_vanishing() {
    let tables = Tables::build(200).unwrap();
    let oracle = oracle_sequence(201);
    let mut failures = Vec::new();
    for index in (3..=201).step_by(2) {
        if !oracle[index].is_zero() {
            failures.push(format!("oracle B_{index}"));
        }
        if index - 1 <= 100 {
            if !bernoulli_eq1(&tables.stirling, index - 1)
                .unwrap()
                .value
                .is_zero()
            {
                failures.push(format!("eq1 B_{index}"));
            }
            if !bernoulli_eq2(&tables.eulerian, index - 1)
                .unwrap()
                .value
                .is_zero()
            {
                failures.push(format!("eq2 B_{index}"));
            }
        }
        if index <= 200 {
            if !bernoulli_eq3(&tables.stirling, index)
                .unwrap()
                .value
                .is_zero()
            {
                failures.push(format!("eq3 B_{index}"));
            }
            if !bernoulli_eq4(&tables.eulerian, index)
                .unwrap()
                .value
                .is_zero()
            {
                failures.push(format!("eq4 B_{index}"));
            }
        }
    }
    let ok = failures.is_empty();
    report(
        "AC3",
        "every formula yields exactly 0 at odd indices >= 3",
        ok,
        &format!("{} nonzero values", failures.len()),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn ac4_von_staudt_clausen() {
    let tables = Tables::build(200).unwrap();
    let oracle = oracle_sequence(200);
    let mut failures = Vec::new();
    for index in (2..=200).step_by(2) {
        let from_eq3 = bernoulli_eq3(&tables.stirling, index).unwrap().value;
        let from_eq4 = bernoulli_eq4(&tables.eulerian, index).unwrap().value;
        for (name, b) in [
            ("oracle", &oracle[index]),
            ("eq3", &from_eq3),
            ("eq4", &from_eq4),
        ] {
            if !staudt_clausen_sum(index as u64, b).is_integer() {
                failures.push(format!("{name} B_{index}"));
            }
        }
    }
    let ok = failures.is_empty();
    report(
        "AC4",
        "B_2m + sum_{(p-1)|2m} 1/p is an integer for 2m <= 200",
        ok,
        &format!("{} non-integers", failures.len()),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn ac5_polylog_form_identity() {
    let tables = Tables::build(50).unwrap();
    let unequal: Vec<usize> = (1..=50)
        .filter(|&r| !forms_equal(&tables, r).unwrap())
        .collect();
    let mut derivative = RationalFunction::new(Polynomial::new(vec![integer(0), integer(-1)]), 1);
    let mut oracle_mismatch = Vec::new();
    for r in 1..=12 {
        derivative = derivative.x_derivative();
        let stirling = polylog_stirling_form(&tables.stirling, r).unwrap();
        let eulerian = polylog_eulerian_form(&tables.eulerian, r).unwrap();
        if stirling != derivative || eulerian != derivative {
            oracle_mismatch.push(r);
        }
    }
    let ok = unequal.is_empty() && oracle_mismatch.is_empty();
    report(
        "AC5",
        "Stirling == Eulerian numerators (r<=50), both == x d/dx oracle (r<=12)",
        ok,
        &format!("unequal {unequal:?}, oracle mismatches {oracle_mismatch:?}"),
    );
    assert!(ok);
}

#[test]
fn ac6_quadrature_suite() {
    let start = Instant::now();
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut errors = Vec::new();
    let mut push =
        |label: String, outcome: bernoulli_core::Result<VerificationReport>| match outcome {
            Ok(rep) => reports.push(rep),
            Err(e) => errors.push(format!("{label}: {e}")),
        };
    for r in 0..=8 {
        push(format!("EQ5 r={r}"), verify_eq5(r, 1e-8));
    }
    for r in 1..=8 {
        push(format!("EQ10 r={r}"), verify_eq10(r, 1e-8));
    }
    for r in 0..=6 {
        for n in default_mellin_exponents() {
            push(
                format!("EQ11 r={r} n={}", format_rational(&n)),
                verify_eq11(r, &n, 1e-7),
            );
        }
    }
    let elapsed = start.elapsed();
    let failing: Vec<String> = reports
        .iter()
        .filter(|rep| !rep.pass)
        .map(|rep| format!("{} r={} err={:.3e}", rep.identity, rep.r, rep.abs_err))
        .collect();
    let worst = reports
        .iter()
        .map(|rep| rep.abs_err / rep.tolerance)
        .fold(0.0, f64::max);
    let ok = errors.is_empty()
        && failing.is_empty()
        && reports.len() == 9 + 8 + 21
        && elapsed < Duration::from_secs(30);
    report(
        "AC6",
        "EQ5 r=0..8 and EQ10 r=1..8 at 1e-8, EQ11 r=0..6 x n in {1/2,1/3,1/4} at 1e-7",
        ok,
        &format!(
            "{} cases, worst err/tol {:.3e}, {:.2?}",
            reports.len(),
            worst,
            elapsed
        ),
    );
    assert!(
        ok,
        "errors {errors:?}, failing {failing:?}, elapsed {elapsed:?}"
    );
}

#[test]
fn ac7_faulhaber_exact() {
    let mut failures = Vec::new();
    for r in 1..=20 {
        for n in 1..=100 {
            let (lhs, rhs) = faulhaber_check(r, n);
            if lhs != rhs {
                failures.push((r, n));
            }
        }
    }
    let ok = failures.is_empty();
    report(
        "AC7",
        "sum_{k<=n} k^r == zeta(-r) - zeta(-r, n+1) for r<=20, n<=100, exact",
        ok,
        &format!("{} mismatches", failures.len()),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn ac8_harmonic_generating_function_partial_sums() {
    let half = rational(1, 2);
    let bar = rational(EQ12_BAR.0, EQ12_BAR.1);
    let tables = Tables::build(5).unwrap();
    let mut errors: Vec<(usize, BigRational)> = Vec::new();
    for r in 1..=5 {
        let closed = polylog_eval_exact(&tables.stirling, r, &half).unwrap() / rational(3, 2);
        let partial = harmonic_partial_sum(r, &half, 64).unwrap();
        errors.push((r, (partial - closed).abs()));
    }
    let over: Vec<usize> = errors
        .iter()
        .filter(|(_, e)| *e >= bar)
        .map(|(r, _)| *r)
        .collect();
    let ok = over.is_empty();
    let detail = errors
        .iter()
        .map(|(r, e)| format!("r={r}: {:.3e}", e.to_f64().unwrap()))
        .collect::<Vec<_>>()
        .join(", ");
    report(
        "AC8",
        "N=64 partial sums at x=1/2 match Li_{-r}(-x)/(1+x) within 1e-12 for r=1..5",
        ok,
        &detail,
    );
    assert!(ok, "orders above 1e-12: {over:?} ({detail})");
}
