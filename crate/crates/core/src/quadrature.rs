//! Adaptive Gauss–Kronrod integration over `[0, ∞)`.
//!
//! The half-line is split at `x = 1`. On `[0, 1]` the substitution `x = u²`
//! removes an `x^{-1/2}` endpoint singularity; on `[1, ∞)` the substitution
//! `x = 1/v²` maps the tail onto `(0, 1]` and stays bounded for integrands
//! decaying at least like `x^{-3/2}`. Both pieces are refined together by
//! global bisection of the interval with the largest error estimate.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

pub const DEFAULT_EVALUATION_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub estimate: f64,
    pub est_error: f64,
    pub evaluations: usize,
}

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss rule.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One G7/K15 panel with the QUADPACK error rescaling.
fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = kronrod.abs();
    let mut values = [(0.0, 0.0); 7];
    for (j, value) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let (f1, f2) = (f(center - dx), f(center + dx));
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
        *value = (f1, f2);
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for (j, (f1, f2)) in values.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let (value, abs_sum, asc) = (kronrod * half, abs_sum * half.abs(), asc * half.abs());
    let mut error = ((kronrod - gauss) * half).abs();
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    if abs_sum > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * abs_sum);
    }
    Segment { a, b, value, error }
}

/// Globally adaptive integration of `g` over the union of `initial`
/// intervals, to absolute tolerance `tol`.
fn adaptive<F: Fn(f64) -> f64>(
    g: &F,
    initial: &[(f64, f64)],
    tol: f64,
    budget: usize,
) -> Result<QuadratureResult> {
    const PANEL: usize = 15;
    let mut heap: BinaryHeap<Segment> = initial
        .iter()
        .map(|&(a, b)| gauss_kronrod(g, a, b))
        .collect();
    let mut evaluations = PANEL * initial.len();
    let mut estimate: f64 = heap.iter().map(|s| s.value).sum();
    let mut est_error: f64 = heap.iter().map(|s| s.error).sum();
    loop {
        if est_error <= tol {
            // Re-sum to shed drift from the running totals before accepting.
            estimate = heap.iter().map(|s| s.value).sum();
            est_error = heap.iter().map(|s| s.error).sum();
        }
        let result = QuadratureResult {
            estimate,
            est_error,
            evaluations,
        };
        if !estimate.is_finite() || !est_error.is_finite() {
            return Err(non_convergence(result));
        }
        if est_error <= tol {
            return Ok(result);
        }
        if evaluations + 2 * PANEL > budget {
            return Err(non_convergence(result));
        }
        let worst = heap.pop().expect("heap holds the initial panels");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval cannot be split further in double precision.
            return Err(non_convergence(result));
        }
        let (left, right) = (
            gauss_kronrod(g, worst.a, mid),
            gauss_kronrod(g, mid, worst.b),
        );
        estimate += left.value + right.value - worst.value;
        est_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        evaluations += 2 * PANEL;
    }
}

fn non_convergence(r: QuadratureResult) -> Error {
    Error::NonConvergence {
        estimate: r.estimate,
        est_error: r.est_error,
        evaluations: r.evaluations,
    }
}

/// ∫₀^∞ f(x) dx to absolute tolerance `tol` with the default budget.
pub fn integrate_zero_to_inf<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<QuadratureResult> {
    integrate_zero_to_inf_with_budget(f, tol, DEFAULT_EVALUATION_BUDGET)
}

pub fn integrate_zero_to_inf_with_budget<F: Fn(f64) -> f64>(
    f: F,
    tol: f64,
    budget: usize,
) -> Result<QuadratureResult> {
    // s in [0, 1]: x = s², dx = 2s ds.
    // s in [1, 2]: v = 2 - s, x = 1/v², dx = 2/v³ dv.
    let g = |s: f64| {
        if s <= 1.0 {
            2.0 * s * f(s * s)
        } else {
            let v = 2.0 - s;
            2.0 * f(1.0 / (v * v)) / (v * v * v)
        }
    };
    adaptive(&g, &[(0.0, 1.0), (1.0, 2.0)], tol, budget)
}
