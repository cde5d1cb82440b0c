use std::io::Write;

use bernoulli_core::bernoulli::{evaluate, BernoulliValue, Method};
use bernoulli_core::consistency::{exact_checks, CheckResult};
use bernoulli_core::polylog::{polylog_eulerian_form, polylog_stirling_form};
use bernoulli_core::rational::{format_rational, parse_rational};
use bernoulli_core::tables::Tables;
use num_bigint::BigInt;
use serde::Serialize;

use crate::args::{FormChoice, Format, FormulaChoice, TableKind};
use crate::{CliError, CliResult, Status};

pub fn selected_methods(choice: FormulaChoice) -> Vec<Method> {
    match choice {
        FormulaChoice::Eq1 => vec![Method::Eq1],
        FormulaChoice::Eq2 => vec![Method::Eq2],
        FormulaChoice::Eq3 => vec![Method::Eq3],
        FormulaChoice::Eq4 => vec![Method::Eq4],
        FormulaChoice::Oracle => vec![Method::Oracle],
        FormulaChoice::All => Method::ALL.to_vec(),
    }
}

/// Values for orders `1..=max_r`, grouped by method.
pub fn bernoulli_values(max_r: usize, methods: &[Method]) -> CliResult<Vec<BernoulliValue>> {
    let tables = Tables::build(max_r)?;
    let mut values = Vec::new();
    for &method in methods {
        if method == Method::Oracle {
            let seq = bernoulli_core::bernoulli::oracle_sequence(max_r);
            values.extend(seq.into_iter().enumerate().skip(1).map(|(index, value)| {
                BernoulliValue {
                    index,
                    value,
                    method,
                }
            }));
            continue;
        }
        for r in 1..=max_r {
            values.push(evaluate(method, &tables, r)?);
        }
    }
    Ok(values)
}

#[derive(Serialize)]
struct BernRecord {
    index: usize,
    value: String,
    method: &'static str,
}

pub fn bern(
    max_r: usize,
    formula: FormulaChoice,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<Status> {
    let values = bernoulli_values(max_r, &selected_methods(formula))?;
    match format {
        Format::Plain => {
            for v in &values {
                writeln!(
                    out,
                    "B_{} = {}  [{}]",
                    v.index,
                    format_rational(&v.value),
                    v.method
                )?;
            }
        }
        Format::Csv => {
            writeln!(out, "index,method,value")?;
            for v in &values {
                writeln!(
                    out,
                    "{},{},{}",
                    v.index,
                    v.method,
                    format_rational(&v.value)
                )?;
            }
        }
        Format::Json => {
            let records: Vec<BernRecord> = values
                .iter()
                .map(|v| BernRecord {
                    index: v.index,
                    value: format_rational(&v.value),
                    method: v.method.as_str(),
                })
                .collect();
            serde_json::to_writer(&mut *out, &records)?;
            writeln!(out)?;
        }
    }
    Ok(Status::Success)
}

pub fn tables(
    kind: TableKind,
    max_row: usize,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<Status> {
    let tables = Tables::build(max_row)?;
    // (first column index, row values)
    let rows: Vec<(usize, &[BigInt])> = (1..=max_row)
        .map(|r| match kind {
            TableKind::Stirling => tables.stirling.row(r).map(|row| (1, row)),
            TableKind::Eulerian => tables.eulerian.row(r).map(|row| (0, row)),
        })
        .collect::<Result<_, _>>()?;
    match format {
        Format::Csv => {
            writeln!(out, "row,index,value")?;
            for (r, (offset, row)) in rows.iter().enumerate() {
                for (i, v) in row.iter().enumerate() {
                    writeln!(out, "{},{},{}", r + 1, i + offset, v)?;
                }
            }
        }
        Format::Json => {
            let strings: Vec<Vec<String>> = rows
                .iter()
                .map(|(_, row)| row.iter().map(ToString::to_string).collect())
                .collect();
            serde_json::to_writer(&mut *out, &strings)?;
            writeln!(out)?;
        }
        Format::Plain => {
            for (_, row) in &rows {
                let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
    }
    Ok(Status::Success)
}

#[derive(Serialize)]
struct PolylogRecord {
    order: usize,
    stirling: Option<String>,
    eulerian: Option<String>,
    forms_equal: Option<bool>,
    x: Option<String>,
    value: Option<String>,
}

pub fn polylog(
    order: usize,
    form: FormChoice,
    eval: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<Status> {
    let wants_eulerian = matches!(form, FormChoice::Eulerian | FormChoice::Both);
    if wants_eulerian && order == 0 {
        return Err(CliError::Usage(
            "the Eulerian form needs --order >= 1".to_string(),
        ));
    }
    let x = eval
        .map(parse_rational)
        .transpose()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let tables = Tables::build(order.max(1))?;
    let stirling = polylog_stirling_form(&tables.stirling, order)?;
    let eulerian = if wants_eulerian {
        Some(polylog_eulerian_form(&tables.eulerian, order)?)
    } else {
        None
    };
    let value = match &x {
        Some(x) => Some(
            stirling
                .eval(x)
                .map_err(|e| CliError::Usage(e.to_string()))?,
        ),
        None => None,
    };
    let record = PolylogRecord {
        order,
        stirling: matches!(form, FormChoice::Stirling | FormChoice::Both)
            .then(|| stirling.to_string()),
        eulerian: eulerian.as_ref().map(ToString::to_string),
        forms_equal: (form == FormChoice::Both).then(|| Some(&stirling) == eulerian.as_ref()),
        x: x.as_ref().map(format_rational),
        value: value.as_ref().map(format_rational),
    };
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &record)?;
            writeln!(out)?;
        }
        Format::Plain | Format::Csv => {
            if let Some(s) = &record.stirling {
                writeln!(out, "stirling: {s}")?;
            }
            if let Some(e) = &record.eulerian {
                writeln!(out, "eulerian: {e}")?;
            }
            if let Some(eq) = record.forms_equal {
                writeln!(out, "forms equal: {eq}")?;
            }
            if let (Some(x), Some(v)) = (&record.x, &record.value) {
                writeln!(out, "Li_-{order}(-x) at x = {x}: {v}")?;
            }
        }
    }
    // Disagreeing forms would be a verification failure.
    Ok(Status::from_pass(record.forms_equal.unwrap_or(true)))
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    check: &'a str,
    first: usize,
    last: usize,
    pass: bool,
    first_failure: Option<usize>,
}

/// Runs the exact invariant suite through `max_r`; fails on the first
/// broken identity.
pub fn run_verify(max_r: usize, format: Format, out: &mut dyn Write) -> CliResult<Status> {
    if max_r < 1 {
        return Err(CliError::Usage("--max-r must be at least 1".to_string()));
    }
    let checks = exact_checks(max_r)?;
    match format {
        Format::Json => {
            let records: Vec<CheckRecord> = checks
                .iter()
                .map(|c| CheckRecord {
                    check: c.name,
                    first: c.first,
                    last: c.last,
                    pass: c.passed(),
                    first_failure: c.first_failure,
                })
                .collect();
            serde_json::to_writer(&mut *out, &records)?;
            writeln!(out)?;
        }
        Format::Plain | Format::Csv => {
            for c in &checks {
                let verdict = if c.passed() { "PASS" } else { "FAIL" };
                write!(out, "{verdict} {} ({}..={})", c.name, c.first, c.last)?;
                match c.first_failure {
                    Some(at) => writeln!(out, " first failure at {at}")?,
                    None => writeln!(out)?,
                }
            }
        }
    }
    if let Some(CheckResult {
        name,
        first_failure: Some(at),
        ..
    }) = checks.iter().find(|c| !c.passed())
    {
        eprintln!("verification failed: {name} at r = {at}");
        return Ok(Status::VerificationFailed);
    }
    Ok(Status::Success)
}
