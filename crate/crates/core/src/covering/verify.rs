//! Exact checks for a covering family at level `t`.

use num::Zero;
use serde::Serialize;

use super::family::CoveringFamily;
use super::selection::superlevel_components;
use crate::measure::interval::{ExtReal, Interval};
use crate::measure::intervalset::difference;
use crate::measure::rational::{format_rational, rat, Rational};
use crate::measure::{average, measure_of, Measure, StepFunction};

#[derive(Debug, Clone, Serialize)]
pub struct AverageFailure {
    pub ball: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub level: String,
    pub balls: usize,
    pub average_failures: Vec<AverageFailure>,
    pub uncovered: Vec<String>,
    pub max_overlap: usize,
    pub overlap_bound: usize,
}

impl VerificationReport {
    pub fn averages_ok(&self) -> bool {
        self.average_failures.is_empty()
    }

    pub fn coverage_ok(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn overlap_ok(&self) -> bool {
        self.max_overlap <= self.overlap_bound
    }

    pub fn passed(&self) -> bool {
        self.averages_ok() && self.coverage_ok() && self.overlap_ok()
    }
}

/// Number of balls containing `x`.
pub fn overlap_count(family: &CoveringFamily, x: &Rational) -> usize {
    family.balls.iter().filter(|b| b.contains(x)).count()
}

/// Points at which the overlap count attains every value it takes: all
/// finite endpoints, midpoints between them, and one point past each end.
fn overlap_probes(family: &CoveringFamily) -> Vec<Rational> {
    let mut ends: Vec<Rational> =
        family.balls.iter().flat_map(|b| [b.lo(), b.hi()]).filter_map(ExtReal::finite).cloned().collect();
    ends.sort();
    ends.dedup();
    let (Some(first), Some(last)) = (ends.first().cloned(), ends.last().cloned()) else {
        return vec![Rational::zero()];
    };
    let mut probes = ends.clone();
    probes.extend(ends.windows(2).map(|w| (&w[0] + &w[1]) / rat(2)));
    probes.push(first - rat(1));
    probes.push(last + rat(1));
    probes
}

/// Checks that every ball has average exactly `t`, that the balls cover
/// `{f > t}` within the support up to a null set, and that no point lies in
/// more than `overlap_bound` balls.
pub fn verify_covering(
    family: &CoveringFamily,
    mu: &Measure,
    f: &StepFunction,
    t: &Rational,
    overlap_bound: usize,
) -> VerificationReport {
    let mut average_failures = Vec::new();
    for (ball, stored) in family.balls.iter().zip(&family.averages) {
        let mass = measure_of(mu, ball);
        let reason = if mass.is_zero() {
            Some("ball has zero measure".to_string())
        } else if mass.is_infinite() {
            Some("ball has infinite measure".to_string())
        } else {
            let exact = average(mu, f, ball);
            if &exact != t {
                Some(format!("average is {}", format_rational(&exact)))
            } else if stored != t {
                Some(format!("recorded average is {}", format_rational(stored)))
            } else {
                None
            }
        };
        if let Some(reason) = reason {
            average_failures.push(AverageFailure { ball: ball.to_string(), reason });
        }
    }

    let uncovered: Vec<String> = difference(&superlevel_components(mu, f, t), &family.balls)
        .into_iter()
        .filter(|piece: &Interval| !measure_of(mu, piece).is_zero())
        .map(|piece| piece.to_string())
        .collect();

    let max_overlap = overlap_probes(family).iter().map(|x| overlap_count(family, x)).max().unwrap_or(0);

    VerificationReport {
        level: format_rational(t),
        balls: family.len(),
        average_failures,
        uncovered,
        max_overlap,
        overlap_bound,
    }
}
