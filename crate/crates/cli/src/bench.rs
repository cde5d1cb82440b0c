use std::io::Write;
use std::time::{Duration, Instant};

use bernoulli_core::bernoulli::{evaluate, oracle_sequence, Method};
use bernoulli_core::tables::{EulerianTable, StirlingTable, Tables};
use serde::Serialize;

use crate::args::Format;
use crate::{CliError, CliResult, Status};

#[derive(Debug, Clone, PartialEq)]
pub struct MethodTiming {
    pub method: Method,
    /// Inclusive range of Bernoulli indices produced.
    pub first_index: usize,
    pub last_index: usize,
    pub median: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub max_r: usize,
    pub repetitions: usize,
    pub stirling_build: Duration,
    pub eulerian_build: Duration,
    pub methods: Vec<MethodTiming>,
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

fn time_reps(reps: usize, mut f: impl FnMut()) -> Duration {
    median(
        (0..reps)
            .map(|_| {
                let start = Instant::now();
                f();
                start.elapsed()
            })
            .collect(),
    )
}

/// Checks every formula against the oracle, then times each over
/// orders `1..=max_r`. Returns `Ok(None)` when the cross-check fails.
pub fn run_bench(max_r: usize, repetitions: usize) -> CliResult<Option<BenchReport>> {
    if max_r < 1 || repetitions < 1 {
        return Err(CliError::Usage(
            "bench needs --max-r >= 1 and --reps >= 1".to_string(),
        ));
    }
    let tables = Tables::build(max_r)?;
    let oracle = oracle_sequence(max_r + 1);
    for method in [Method::Eq1, Method::Eq2, Method::Eq3, Method::Eq4] {
        for r in 1..=max_r {
            let v = evaluate(method, &tables, r)?;
            if v.value != oracle[v.index] {
                return Ok(None);
            }
        }
    }

    let stirling_build = time_reps(repetitions, || {
        std::hint::black_box(StirlingTable::build(max_r).ok());
    });
    let eulerian_build = time_reps(repetitions, || {
        std::hint::black_box(EulerianTable::build(max_r).ok());
    });
    let methods = Method::ALL
        .into_iter()
        .map(|method| {
            let median = if method == Method::Oracle {
                time_reps(repetitions, || {
                    std::hint::black_box(oracle_sequence(max_r));
                })
            } else {
                time_reps(repetitions, || {
                    for r in 1..=max_r {
                        std::hint::black_box(evaluate(method, &tables, r).ok());
                    }
                })
            };
            MethodTiming {
                method,
                first_index: method.index_for_order(1),
                last_index: method.index_for_order(max_r),
                median,
            }
        })
        .collect();
    Ok(Some(BenchReport {
        max_r,
        repetitions,
        stirling_build,
        eulerian_build,
        methods,
    }))
}

#[derive(Serialize)]
struct TimingRecord {
    method: &'static str,
    first_index: usize,
    last_index: usize,
    median_ns: u128,
}

#[derive(Serialize)]
struct BenchRecord {
    max_r: usize,
    repetitions: usize,
    verified: bool,
    stirling_build_ns: u128,
    eulerian_build_ns: u128,
    methods: Vec<TimingRecord>,
}

pub fn bench(max_r: usize, reps: usize, format: Format, out: &mut dyn Write) -> CliResult<Status> {
    let Some(report) = run_bench(max_r, reps)? else {
        eprintln!("bench aborted: a formula disagrees with the oracle");
        return Ok(Status::VerificationFailed);
    };
    match format {
        Format::Json => {
            let record = BenchRecord {
                max_r: report.max_r,
                repetitions: report.repetitions,
                verified: true,
                stirling_build_ns: report.stirling_build.as_nanos(),
                eulerian_build_ns: report.eulerian_build.as_nanos(),
                methods: report
                    .methods
                    .iter()
                    .map(|m| TimingRecord {
                        method: m.method.as_str(),
                        first_index: m.first_index,
                        last_index: m.last_index,
                        median_ns: m.median.as_nanos(),
                    })
                    .collect(),
            };
            serde_json::to_writer(&mut *out, &record)?;
            writeln!(out)?;
        }
        Format::Plain | Format::Csv => {
            writeln!(
                out,
                "orders 1..={}, {} repetitions, values verified against oracle",
                max_r, reps
            )?;
            writeln!(out, "{:<16} {:>14}", "table build", "median")?;
            writeln!(out, "{:<16} {:>14.3?}", "stirling", report.stirling_build)?;
            writeln!(out, "{:<16} {:>14.3?}", "eulerian", report.eulerian_build)?;
            writeln!(out, "{:<16} {:>14}", "method", "median")?;
            for m in &report.methods {
                let label = format!("{} B_{}..B_{}", m.method, m.first_index, m.last_index);
                writeln!(out, "{:<16} {:>14.3?}", label, m.median)?;
            }
        }
    }
    Ok(Status::Success)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_bench_has_five_entries() {
        let report = run_bench(1, 1).unwrap().unwrap();
        assert_eq!(report.methods.len(), 5);
        let eq1 = &report.methods[0];
        assert_eq!((eq1.first_index, eq1.last_index), (2, 2));
        let oracle = &report.methods[4];
        assert_eq!((oracle.first_index, oracle.last_index), (1, 1));
    }

    #[test]
    fn rejects_zero_repetitions() {
        assert!(matches!(run_bench(5, 0), Err(CliError::Usage(_))));
        assert!(matches!(run_bench(0, 1), Err(CliError::Usage(_))));
    }

    #[test]
    fn median_of_even_sample() {
        let ms = Duration::from_millis;
        assert_eq!(
            median(vec![ms(4), ms(1), ms(3), ms(2)]),
            Duration::from_micros(2500)
        );
        assert_eq!(median(vec![ms(9), ms(1), ms(5)]), ms(5));
    }
}
