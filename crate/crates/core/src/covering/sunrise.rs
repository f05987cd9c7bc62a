//! The one-sided identity `t * mu({M+ f > t}) = integral of f over that set`.

use num::Signed;
use serde::Serialize;

use crate::error::{LabError, Result};
use crate::maximal::{auto_window, superlevel_set, LevelKind, MaximalKind};
use crate::measure::interval::Interval;
use crate::measure::rational::{format_rational, rat, to_f64, Rational};
use crate::measure::{integral_of, measure_of, Measure, StepFunction};

#[derive(Debug, Clone, Serialize)]
pub struct SunriseReport {
    pub t: String,
    pub level_set: Vec<String>,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub lhs_exact: String,
    pub rhs_exact: String,
    #[serde(skip)]
    pub intervals: Vec<Interval>,
}

impl SunriseReport {
    pub fn holds(&self) -> bool {
        self.lhs_exact == self.rhs_exact
    }
}

const WINDOW_RETRIES: usize = 32;

fn widened(window: &Interval) -> Result<Interval> {
    let lo = window.lo().finite().cloned().unwrap_or_else(|| rat(0));
    let hi = window.hi().finite().cloned().unwrap_or_else(|| rat(0));
    let width = &hi - &lo + rat(1);
    Interval::closed(lo - &width, hi + width)
}

pub fn sunrise_check(mu: &Measure, f: &StepFunction, t: &Rational, tol: f64) -> Result<SunriseReport> {
    if !mu.is_atomless() {
        return Err(LabError::PreconditionViolated("the measure must have no atoms".into()));
    }
    if !mu.left_tail_density().is_positive() {
        return Err(LabError::PreconditionViolated("the left half-line must have infinite measure".into()));
    }
    if !t.is_positive() {
        return Err(LabError::InvalidArgument("level t must be positive".into()));
    }
    let kind = LevelKind::Maximal(MaximalKind::OneSidedPlus);
    let mut window = auto_window(mu, f, t)?;
    let mut set = None;
    for _ in 0..WINDOW_RETRIES {
        match superlevel_set(mu, f, t, kind, &window, tol) {
            Ok(s) => {
                set = Some(s);
                break;
            }
            Err(LabError::WindowTooSmall(_)) => window = widened(&window)?,
            Err(e) => return Err(e),
        }
    }
    let set = set.ok_or_else(|| LabError::WindowTooSmall(format!("level set still meets {window}")))?;

    let mut mass = rat(0);
    let mut integral = rat(0);
    for piece in &set {
        let m = measure_of(mu, piece);
        let m = m.finite().cloned().ok_or_else(|| LabError::WindowTooSmall(format!("{piece} has infinite measure")))?;
        mass += m;
        integral += integral_of(mu, f, piece);
    }
    let lhs = t * mass;
    let (lhs_f, rhs_f) = (to_f64(&lhs), to_f64(&integral));
    Ok(SunriseReport {
        t: format_rational(t),
        level_set: set.iter().map(|i| i.to_string()).collect(),
        lhs: lhs_f,
        rhs: rhs_f,
        residual: to_f64(&(&lhs - &integral).abs()),
        lhs_exact: format_rational(&lhs),
        rhs_exact: format_rational(&integral),
        intervals: set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rational::ratio;

    #[test]
    fn indicator_on_lebesgue() {
        let f = StepFunction::from_regions(vec![rat(0), rat(1)], vec![rat(1)]).unwrap();
        let r = sunrise_check(&Measure::lebesgue(), &f, &ratio(1, 2), 1e-12).unwrap();
        assert_eq!(r.intervals, vec![Interval::open(rat(-1), rat(1)).unwrap()]);
        assert_eq!((r.lhs, r.rhs), (1.0, 1.0));
        assert!(r.residual <= 1e-9 && r.holds());
    }

    #[test]
    fn levels_above_the_function() {
        let f = StepFunction::open_indicator_sum(&[(rat(0), rat(1), rat(1)), (rat(2), rat(3), rat(3))]).unwrap();
        let leb = Measure::lebesgue();
        let r = sunrise_check(&leb, &f, &rat(2), 1e-12).unwrap();
        assert!(!r.intervals.is_empty() && r.holds());
        let r = sunrise_check(&leb, &f, &rat(3), 1e-12).unwrap();
        assert!(r.intervals.is_empty());
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
    }

    #[test]
    fn preconditions() {
        let f = StepFunction::from_regions(vec![rat(0), rat(1)], vec![rat(1)]).unwrap();
        let atom = Measure::new(vec![(rat(0), rat(1))], vec![], vec![rat(1)]).unwrap();
        assert!(matches!(sunrise_check(&atom, &f, &rat(1), 1e-9), Err(LabError::PreconditionViolated(_))));
        let right_only = Measure::new(vec![], vec![rat(0)], vec![rat(0), rat(1)]).unwrap();
        assert!(matches!(sunrise_check(&right_only, &f, &rat(1), 1e-9), Err(LabError::PreconditionViolated(_))));
    }
}
