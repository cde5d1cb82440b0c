use std::io::Write;

use bernoulli_core::identities::{
    default_mellin_exponents, run_cases, suite_cases, Case, CaseOutcome, Identity,
    MAX_MELLIN_ORDER, MAX_QUADRATURE_ORDER,
};
use bernoulli_core::rational::{format_rational, parse_rational};
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::args::{EqChoice, Format};
use crate::{CliError, CliResult, Status};

/// A float as a JSON number with 17 significant digits; `null` when not
/// finite.
fn float17(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

#[derive(Serialize)]
struct ReportRecord {
    identity: &'static str,
    r: usize,
    n: Option<String>,
    exact_target: Option<String>,
    multiplier: Option<Box<RawValue>>,
    target: Option<Box<RawValue>>,
    estimate: Option<Box<RawValue>>,
    abs_err: Option<Box<RawValue>>,
    tolerance: Box<RawValue>,
    est_error: Option<Box<RawValue>>,
    evaluations: Option<usize>,
    pass: bool,
    error: Option<String>,
}

impl ReportRecord {
    fn new(outcome: &CaseOutcome, tol: f64) -> Self {
        let case = &outcome.case;
        let mut record = ReportRecord {
            identity: case.identity.as_str(),
            r: case.r,
            n: case.n.as_ref().map(format_rational),
            exact_target: None,
            multiplier: None,
            target: None,
            estimate: None,
            abs_err: None,
            tolerance: float17(tol),
            est_error: None,
            evaluations: None,
            pass: outcome.passed(),
            error: None,
        };
        match &outcome.outcome {
            Ok(rep) => {
                record.exact_target = Some(format_rational(&rep.exact_target));
                record.multiplier = Some(float17(rep.multiplier));
                record.target = Some(float17(rep.target));
                record.estimate = Some(float17(rep.estimate));
                record.abs_err = Some(float17(rep.abs_err));
                record.tolerance = float17(rep.tolerance);
                record.est_error = Some(float17(rep.quadrature.est_error));
                record.evaluations = Some(rep.quadrature.evaluations);
            }
            Err(e) => record.error = Some(e.to_string()),
        }
        record
    }
}

fn parse_exponent(text: &str) -> CliResult<BigRational> {
    let n = parse_rational(text).map_err(|e| CliError::Usage(e.to_string()))?;
    if !n.is_positive() || n >= BigRational::one() {
        return Err(CliError::Usage(format!(
            "--n must lie in (0, 1), got {text}"
        )));
    }
    Ok(n)
}

/// The cases selected by the command-line flags.
pub fn selected_cases(identity: EqChoice, max_r: usize, n: Option<&str>) -> CliResult<Vec<Case>> {
    if max_r > MAX_QUADRATURE_ORDER {
        return Err(CliError::Usage(format!(
            "--max-r must be at most {MAX_QUADRATURE_ORDER}"
        )));
    }
    let exponents = match n {
        Some(text) => {
            if !matches!(identity, EqChoice::Eq11 | EqChoice::All) {
                return Err(CliError::Usage("--n only applies to --eq 11".to_string()));
            }
            vec![parse_exponent(text)?]
        }
        None => default_mellin_exponents(),
    };
    let all = suite_cases(max_r, &exponents);
    let keep = |id: Identity| all.iter().filter(|c| c.identity == id).cloned().collect();
    Ok(match identity {
        EqChoice::Eq5 => keep(Identity::Eq5),
        EqChoice::Eq10 => keep(Identity::Eq10),
        EqChoice::Eq11 => {
            debug_assert!(all
                .iter()
                .all(|c| c.identity != Identity::Eq11 || c.r <= MAX_MELLIN_ORDER));
            keep(Identity::Eq11)
        }
        EqChoice::Eq6 => vec![Case {
            identity: Identity::Eq6,
            r: 0,
            n: None,
        }],
        EqChoice::All => all,
    })
}

pub fn quadcheck(
    identity: EqChoice,
    max_r: usize,
    n: Option<&str>,
    tol: f64,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<Status> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Usage(format!(
            "--tol must be positive, got {tol}"
        )));
    }
    let cases = selected_cases(identity, max_r, n)?;
    let outcomes = run_cases(&cases, tol);
    match format {
        Format::Json => {
            let records: Vec<ReportRecord> =
                outcomes.iter().map(|o| ReportRecord::new(o, tol)).collect();
            serde_json::to_writer(&mut *out, &records)?;
            writeln!(out)?;
        }
        Format::Plain | Format::Csv => {
            for o in &outcomes {
                let verdict = if o.passed() { "PASS" } else { "FAIL" };
                match &o.outcome {
                    Ok(rep) => writeln!(
                        out,
                        "{verdict} {} target={:.17e} estimate={:.17e} abs_err={:.3e} tol={:.1e}",
                        o.case, rep.target, rep.estimate, rep.abs_err, rep.tolerance
                    )?,
                    Err(e) => writeln!(out, "{verdict} {}: {e}", o.case)?,
                }
            }
        }
    }
    Ok(Status::from_pass(outcomes.iter().all(CaseOutcome::passed)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_selection() {
        assert_eq!(selected_cases(EqChoice::Eq5, 3, None).unwrap().len(), 4);
        assert_eq!(selected_cases(EqChoice::Eq10, 3, None).unwrap().len(), 3);
        assert_eq!(selected_cases(EqChoice::Eq11, 8, None).unwrap().len(), 21);
        assert_eq!(
            selected_cases(EqChoice::Eq11, 2, Some("1/5"))
                .unwrap()
                .len(),
            3
        );
        assert_eq!(selected_cases(EqChoice::Eq6, 8, None).unwrap().len(), 1);
        assert_eq!(selected_cases(EqChoice::All, 0, None).unwrap().len(), 4);
        assert!(selected_cases(EqChoice::Eq11, 2, Some("3/2")).is_err());
        assert!(selected_cases(EqChoice::Eq5, 2, Some("1/2")).is_err());
        assert!(selected_cases(EqChoice::Eq5, 11, None).is_err());
    }

    #[test]
    fn json_floats_carry_seventeen_digits() {
        let mut buf = Vec::new();
        let status = quadcheck(EqChoice::Eq6, 0, None, 1e-10, Format::Json, &mut buf).unwrap();
        assert_eq!(status, Status::Success);
        let text = String::from_utf8(buf).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0]["identity"], "EQ6");
        assert_eq!(v[0]["exact_target"], "-1/2");
        assert_eq!(v[0]["pass"], true);
        assert!(
            text.contains("\"tolerance\":1.0000000000000000e-10"),
            "{text}"
        );
        let estimate = v[0]["estimate"].as_f64().unwrap();
        assert!((estimate + 0.5).abs() < 1e-10);
    }

    #[test]
    fn impossible_tolerance_fails_verification() {
        let mut buf = Vec::new();
        let status = quadcheck(EqChoice::Eq5, 1, None, 1e-30, Format::Plain, &mut buf).unwrap();
        assert_eq!(status, Status::VerificationFailed);
    }
}
