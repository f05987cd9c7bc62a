//! `L^p` norms against a measure and the maximal-function ratio.

pub mod evaluator;
pub mod gk;

use num::Signed;
use serde::Serialize;

pub use evaluator::{MaximalEvaluator, PointwiseEvaluator, StepEvaluator};

use crate::error::{LabError, Result};
use crate::maximal::MaximalKind;
use crate::measure::ops::continuous_mass;
use crate::measure::rational::{to_f64, Rational};
use crate::measure::{ExtReal, Interval, Measure, StepFunction};

const MAX_PANELS: usize = 60_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormResult {
    pub value: f64,
    pub error_bound: f64,
    pub pieces_used: usize,
    /// The integral of the `p`-th power and its error bound.
    pub pth_power: f64,
    pub pth_power_error: f64,
}

impl NormResult {
    fn from_power(power: f64, error: f64, pieces: usize, p: f64) -> Self {
        let value = power.max(0.0).powf(1.0 / p);
        // mean value bound for y -> y^(1/p) on [power - error, power + error]
        let error_bound = if error < 0.5 * power {
            error / (p * (power - error).powf(1.0 - 1.0 / p)) + 4.0 * f64::EPSILON * value
        } else {
            (power + error).powf(1.0 / p)
        };
        NormResult { value, error_bound, pieces_used: pieces, pth_power: power, pth_power_error: error }
    }
}

fn check_exponent(p: f64) -> Result<()> {
    if p.is_finite() && p > 1.0 {
        Ok(())
    } else {
        Err(LabError::InvalidArgument(format!("exponent p = {p} must be a finite real > 1")))
    }
}

/// `(sum of density * length * value^p + sum of weight * point value^p)^(1/p)`.
pub fn lp_norm_step(f: &StepFunction, mu: &Measure, p: f64) -> Result<NormResult> {
    check_exponent(p)?;
    let bps = f.breakpoints();
    let mut terms: Vec<f64> = Vec::new();
    for (i, v) in f.values().iter().enumerate() {
        if !v.is_positive() {
            continue;
        }
        let mass = continuous_mass(mu, &ExtReal::Finite(bps[i].clone()), &ExtReal::Finite(bps[i + 1].clone()));
        let mass = to_f64(mass.finite().expect("bounded region"));
        if mass > 0.0 {
            terms.push(mass * to_f64(v).powf(p));
        }
    }
    for a in mu.atoms() {
        let v = f.value_at(&a.position);
        if v.is_positive() {
            terms.push(to_f64(&a.weight) * to_f64(&v).powf(p));
        }
    }
    let power: f64 = terms.iter().sum();
    let error = 8.0 * f64::EPSILON * power * (terms.len().max(1) as f64);
    let mut result = NormResult::from_power(power, error, terms.len(), p);
    result.error_bound = result.error_bound.max(8.0 * f64::EPSILON * result.value);
    Ok(result)
}

/// Remainder bound for `int_X^inf d (m / (d y))^p dy`.
fn tail_remainder(m: f64, d: f64, p: f64, x: f64) -> f64 {
    m.powf(p) * d.powf(1.0 - p) * x.powf(1.0 - p) / (p - 1.0)
}

/// Geometric panels leaving `start` in direction `sign` until the decay
/// bound certifies the remainder; returns the panels and the remainder.
fn tail_panels(start: f64, sign: f64, m: f64, d: f64, p: f64, budget: f64) -> (Vec<(f64, f64)>, f64) {
    let mut panels = Vec::new();
    let (mut near, mut width) = (0.0f64, 1.0f64);
    loop {
        let rest = tail_remainder(m, d, p, near.max(f64::MIN_POSITIVE));
        if near > 0.0 && rest <= budget {
            return (panels, rest);
        }
        if panels.len() > 400 {
            return (panels, rest);
        }
        let far = near + width;
        let (a, b) = if sign < 0.0 { (start - far, start - near) } else { (start + near, start + far) };
        panels.push((a, b));
        near = far;
        width *= 2.0;
    }
}

/// `L^p(mu)` norm of a pointwise-evaluable function: exact values at atoms,
/// adaptive quadrature on positive-density regions between breaks, and
/// certified truncation of unbounded tails. `tol` bounds the error of the
/// `p`-th power.
pub fn lp_norm_evaluable(
    g: &impl PointwiseEvaluator,
    mu: &Measure,
    p: f64,
    tail_window: Option<&Interval>,
    tol: f64,
) -> Result<NormResult> {
    check_exponent(p)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(LabError::InvalidArgument("tol must be positive".into()));
    }
    let mut pts: Vec<Rational> = g.breaks();
    pts.extend(mu.breakpoints().iter().cloned());
    pts.extend(mu.atoms().iter().map(|a| a.position.clone()));
    if let Some(w) = tail_window {
        pts.extend([w.lo(), w.hi()].into_iter().filter_map(|e| e.finite().cloned()));
    }
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        pts.push(Rational::from_integer(0.into()));
    }

    let atom_terms: Vec<f64> = mu.atoms().iter().map(|a| to_f64(&a.weight) * g.eval_at(&a.position).powf(p)).collect();
    let atom_sum: f64 = atom_terms.iter().sum();

    let bounds: Vec<f64> = pts.iter().map(to_f64).collect();
    let mut densities = vec![to_f64(mu.left_tail_density())];
    densities.extend(pts.iter().map(|x| to_f64(mu.density_right_of(x))));

    let mut panels: Vec<(f64, f64)> = Vec::new();
    for i in 0..pts.len() - 1 {
        if densities[i + 1] > 0.0 {
            panels.push((bounds[i], bounds[i + 1]));
        }
    }

    let mut remainder = 0.0;
    let tails = [(densities[0], bounds[0], -1.0), (*densities.last().unwrap(), *bounds.last().unwrap(), 1.0)];
    for (d, start, sign) in tails {
        if d <= 0.0 || g.vanishes_outside() {
            continue;
        }
        let m = g
            .decay_mass()
            .ok_or_else(|| LabError::TailNotCertified("the function has no decay bound on an infinite tail".into()))?;
        if m <= 0.0 {
            continue;
        }
        let (tail, rest) = tail_panels(start, sign, m, d, p, tol / 4.0);
        if rest > tol {
            return Err(LabError::TailNotCertified(format!("remainder bound {rest:e} exceeds tolerance {tol:e}")));
        }
        panels.extend(tail);
        remainder += rest;
    }

    let integrand = |x: f64| {
        let i = bounds.partition_point(|b| *b <= x);
        let d = densities[i];
        if d > 0.0 {
            d * g.eval(x).powf(p)
        } else {
            0.0
        }
    };
    let quad = gk::integrate(&integrand, &panels, tol / 2.0, MAX_PANELS);
    let power = atom_sum + quad.value;
    let error = quad.error + remainder + 8.0 * f64::EPSILON * atom_sum * (atom_terms.len().max(1) as f64);
    Ok(NormResult::from_power(power, error, quad.panels + atom_terms.len(), p))
}

/// `||M f||_p` for the chosen maximal kind.
pub fn maximal_norm(mu: &Measure, f: &StepFunction, p: f64, kind: MaximalKind, tol: f64) -> Result<NormResult> {
    lp_norm_evaluable(&MaximalEvaluator::new(mu, f, kind), mu, p, None, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioResult {
    pub value: f64,
    pub error_bound: f64,
    pub maximal_norm: NormResult,
    pub function_norm: NormResult,
}

fn combine(numerator: NormResult, denominator: NormResult) -> RatioResult {
    let value = numerator.value / denominator.value;
    let slack = (denominator.value - denominator.error_bound).max(f64::MIN_POSITIVE);
    let error_bound = (numerator.error_bound + value * denominator.error_bound) / slack;
    RatioResult { value, error_bound, maximal_norm: numerator, function_norm: denominator }
}

fn ratio_with(
    mu: &Measure,
    f: &StepFunction,
    p: f64,
    tol: f64,
    evaluator: &impl PointwiseEvaluator,
) -> Result<RatioResult> {
    let denominator = lp_norm_step(f, mu, p)?;
    if denominator.value.is_nan() || denominator.value <= 0.0 {
        return Err(LabError::ZeroNorm);
    }
    let numerator = lp_norm_evaluable(evaluator, mu, p, None, tol * denominator.pth_power)?;
    Ok(combine(numerator, denominator))
}

/// `||M f||_p / ||f||_p`; `tol` is relative to `||f||_p^p`.
pub fn ratio(mu: &Measure, f: &StepFunction, p: f64, tol: f64) -> Result<RatioResult> {
    ratio_with(mu, f, p, tol, &MaximalEvaluator::new(mu, f, MaximalKind::TwoSided))
}

/// Floating-point variant of [`ratio`] used inside the search loop.
pub fn ratio_fast(mu: &Measure, f: &StepFunction, p: f64, tol: f64) -> Result<RatioResult> {
    ratio_with(mu, f, p, tol, &MaximalEvaluator::fast(mu, f, MaximalKind::TwoSided))
}
