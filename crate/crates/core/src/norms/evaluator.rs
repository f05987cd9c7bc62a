use crate::maximal::arrangement::Arrangement;
use crate::maximal::evaluate::{maximal_value, maximal_value_f64, MaximalKind};
use crate::maximal::profile::{build_profile, RegionProfile};
use crate::measure::rational::{to_f64, Rational};
use crate::measure::{integral_of, Interval, Measure, StepFunction};

/// A nonnegative function that can be sampled for quadrature.
pub trait PointwiseEvaluator: Sync {
    /// Value at a point that is not one of `breaks`.
    fn eval(&self, x: f64) -> f64;

    /// Value at an exact point, used at atoms of the measure.
    fn eval_at(&self, x: &Rational) -> f64;

    /// Points outside of which, and between which, the function is smooth.
    fn breaks(&self) -> Vec<Rational>;

    /// A mass `m` with `g(x) <= m / mu([nearest break, x])` beyond the
    /// outermost breaks, or `None` when no such bound is known.
    fn decay_mass(&self) -> Option<f64>;

    /// Whether the function vanishes outside `[first break, last break]`.
    fn vanishes_outside(&self) -> bool {
        false
    }
}

/// Envelope evaluator for a maximal function. Atom values are exact, or
/// approximate in the fast variant used by the search.
pub struct MaximalEvaluator<'a> {
    mu: &'a Measure,
    f: &'a StepFunction,
    kind: MaximalKind,
    arr: Arrangement<f64>,
    regions: Vec<RegionProfile<f64>>,
    exact_atoms: bool,
    l1: f64,
}

impl<'a> MaximalEvaluator<'a> {
    pub fn new(mu: &'a Measure, f: &'a StepFunction, kind: MaximalKind) -> Self {
        Self::build(mu, f, kind, true)
    }

    pub fn fast(mu: &'a Measure, f: &'a StepFunction, kind: MaximalKind) -> Self {
        Self::build(mu, f, kind, false)
    }

    fn build(mu: &'a Measure, f: &'a StepFunction, kind: MaximalKind, exact_atoms: bool) -> Self {
        let arr: Arrangement<f64> = Arrangement::new(mu, f, &[]);
        let regions = build_profile(&arr, kind, true);
        let l1 = to_f64(&integral_of(mu, f, &Interval::real_line()));
        MaximalEvaluator { mu, f, kind, arr, regions, exact_atoms, l1 }
    }
}

impl PointwiseEvaluator for MaximalEvaluator<'_> {
    fn eval(&self, x: f64) -> f64 {
        let idx = self.regions.partition_point(|r| r.hi_pos.is_some_and(|h| h <= x));
        match self.regions.get(idx) {
            Some(r) if r.lo_pos.is_none_or(|l| l < x) => r.value_at(&x),
            _ => 0.0,
        }
    }

    fn eval_at(&self, x: &Rational) -> f64 {
        match (self.exact_atoms, self.arr.index_of(x)) {
            (false, Some(ix)) => maximal_value_f64(&self.arr, ix, self.kind),
            _ => to_f64(&maximal_value(self.mu, self.f, x, self.kind).value),
        }
    }

    fn breaks(&self) -> Vec<Rational> {
        self.arr.points.clone()
    }

    fn decay_mass(&self) -> Option<f64> {
        Some(self.l1)
    }
}

/// A step function viewed as a pointwise evaluator.
pub struct StepEvaluator<'a> {
    f: &'a StepFunction,
    bounds: Vec<f64>,
    values: Vec<f64>,
}

impl<'a> StepEvaluator<'a> {
    pub fn new(f: &'a StepFunction) -> Self {
        StepEvaluator {
            f,
            bounds: f.breakpoints().iter().map(to_f64).collect(),
            values: f.values().iter().map(to_f64).collect(),
        }
    }
}

impl PointwiseEvaluator for StepEvaluator<'_> {
    fn eval(&self, x: f64) -> f64 {
        let i = self.bounds.partition_point(|b| *b <= x);
        if i == 0 || i == self.bounds.len() {
            0.0
        } else {
            self.values[i - 1]
        }
    }

    fn eval_at(&self, x: &Rational) -> f64 {
        to_f64(&self.f.value_at(x))
    }

    fn breaks(&self) -> Vec<Rational> {
        self.f.breakpoints().to_vec()
    }

    fn decay_mass(&self) -> Option<f64> {
        None
    }

    fn vanishes_outside(&self) -> bool {
        true
    }
}
