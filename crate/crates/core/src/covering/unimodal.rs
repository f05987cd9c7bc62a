//! A single ball of average `t` around the superlevel set of a unimodal
//! function, grown by equal measure on both sides.

use num::{Signed, Zero};

use super::family::{CoveringFamily, Side};
use super::selection::superlevel_components;
use crate::error::{LabError, Result};
use crate::measure::interval::Interval;
use crate::measure::rational::Rational;
use crate::measure::{average, candidate_points, integral_of, measure_of, Measure, StepFunction};

/// Whether the region values rise and then fall, counting zero outside.
pub fn is_unimodal(f: &StepFunction) -> bool {
    let zero = Rational::zero();
    let mut seq = vec![&zero];
    seq.extend(f.values());
    seq.push(&zero);
    let mut falling = false;
    for w in seq.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

/// One endpoint moving rightwards through the regions of `mu` and `f`.
struct Frontier {
    pos: Rational,
    stops: Vec<Rational>,
    density_tail: Rational,
}

struct Segment {
    density: Rational,
    value: Rational,
    capacity: Option<Rational>,
}

impl Frontier {
    fn new(mu: &Measure, f: &StepFunction, start: Rational) -> Self {
        let stops = candidate_points(mu, f).into_iter().filter(|p| p > &start).collect();
        Frontier { pos: start, stops, density_tail: mu.right_tail_density().clone() }
    }

    fn next_stop(&self) -> Option<&Rational> {
        self.stops.iter().find(|p| **p > self.pos)
    }

    /// Skips null regions; `None` once only a null tail remains.
    fn segment(&mut self, mu: &Measure, f: &StepFunction) -> Option<Segment> {
        loop {
            let density = mu.density_right_of(&self.pos).clone();
            let next = self.next_stop().cloned();
            match next {
                Some(stop) if density.is_zero() => self.pos = stop,
                Some(stop) => {
                    let capacity = Some(&density * (&stop - &self.pos));
                    return Some(Segment { density, value: f.value_right_of(&self.pos), capacity });
                }
                None if self.density_tail.is_positive() => {
                    return Some(Segment { density, value: f.value_right_of(&self.pos), capacity: None });
                }
                None => return None,
            }
        }
    }

    fn advance(&mut self, seg: &Segment, mass: &Rational) {
        self.pos += mass / &seg.density;
    }
}

/// Covers `{f > t}` by one open ball with average exactly `t`.
pub fn unimodal_covering(mu: &Measure, f: &StepFunction, t: &Rational) -> Result<CoveringFamily> {
    if !t.is_positive() {
        return Err(LabError::InvalidArgument("level t must be positive".into()));
    }
    if !mu.is_atomless() {
        return Err(LabError::PreconditionViolated("the measure must have no atoms".into()));
    }
    if !mu.left_tail_density().is_positive() && !mu.right_tail_density().is_positive() {
        return Err(LabError::PreconditionViolated("the measure must have infinite total mass".into()));
    }
    if !is_unimodal(f) {
        return Err(LabError::PreconditionViolated("the function must rise and then fall".into()));
    }
    let comps = superlevel_components(mu, f, t);
    let mut family = CoveringFamily::empty(t.clone());
    let (Some(first), Some(last)) = (comps.first(), comps.last()) else {
        return Ok(family);
    };
    let lo = first.lo().finite().cloned().expect("bounded superlevel set");
    let hi = last.hi().finite().cloned().expect("bounded superlevel set");
    let hull = Interval::open(lo.clone(), hi.clone())?;
    let mut excess = integral_of(mu, f, &hull)
        - t * measure_of(mu, &hull).finite().cloned().expect("bounded hull has finite measure");

    let (mu_left, f_left) = (mu.reflect(), f.reflect());
    let mut left = Frontier::new(&mu_left, &f_left, -lo);
    let mut right = Frontier::new(mu, f, hi);
    loop {
        let ls = left.segment(&mu_left, &f_left);
        let rs = right.segment(mu, f);
        if ls.is_none() && rs.is_none() {
            return Err(LabError::NoSolution("the measure ran out before the average reached t".into()));
        }
        let active: Vec<&Segment> = ls.iter().chain(rs.iter()).collect();
        let slope: Rational = active.iter().map(|s| &s.value - t).sum();
        let step = active.iter().filter_map(|s| s.capacity.clone()).min();
        let mut mass = match step.clone() {
            Some(m) => m,
            None if slope.is_negative() => &excess / -&slope,
            None => return Err(LabError::NoSolution("the average does not decay in the tails".into())),
        };
        let mut done = false;
        if slope.is_negative() {
            let reach = &excess / -&slope;
            if reach <= mass {
                mass = reach;
                done = true;
            }
        }
        excess += &slope * &mass;
        if let Some(s) = &ls {
            left.advance(s, &mass);
        }
        if let Some(s) = &rs {
            right.advance(s, &mass);
        }
        if done {
            break;
        }
    }

    let ball = Interval::open(-left.pos, right.pos)?;
    let exact = average(mu, f, &ball);
    if &exact != t {
        return Err(LabError::NoSolution(format!("ball {ball} has average {exact}, not {t}")));
    }
    family.push(ball, exact, Side::Unimodal);
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::verify::verify_covering;
    use crate::measure::rational::{rat, ratio};

    fn staircase() -> StepFunction {
        StepFunction::from_regions(vec![rat(-2), rat(-1), rat(1), rat(2)], vec![rat(1), rat(2), rat(1)]).unwrap()
    }

    #[test]
    fn staircase_levels() {
        let leb = Measure::lebesgue();
        let f = staircase();
        for (t, inner) in [(ratio(1, 2), rat(2)), (ratio(3, 2), rat(1))] {
            let fam = unimodal_covering(&leb, &f, &t).unwrap();
            assert_eq!(fam.len(), 1);
            let ball = &fam.balls[0];
            assert!(ball.contains(&(-inner.clone() + ratio(1, 1000))) && ball.contains(&(inner - ratio(1, 1000))));
            assert!(verify_covering(&fam, &leb, &f, &t, 1).passed());
        }
        assert_eq!(
            unimodal_covering(&leb, &f, &ratio(1, 2)).unwrap().balls[0],
            Interval::open(rat(-6), rat(6)).unwrap()
        );
        assert!(unimodal_covering(&leb, &f, &rat(2)).unwrap().is_empty());
    }

    #[test]
    fn one_finite_side() {
        let mu = Measure::new(vec![], vec![rat(-3)], vec![rat(0), rat(1)]).unwrap();
        let f = staircase();
        let t = ratio(1, 4);
        let fam = unimodal_covering(&mu, &f, &t).unwrap();
        assert!(verify_covering(&fam, &mu, &f, &t, 1).passed());
    }

    #[test]
    fn rejects_two_bumps() {
        let f = StepFunction::open_indicator_sum(&[(rat(0), rat(1), rat(1)), (rat(2), rat(3), rat(1))]).unwrap();
        assert!(!is_unimodal(&f));
        assert!(matches!(
            unimodal_covering(&Measure::lebesgue(), &f, &ratio(1, 2)),
            Err(LabError::PreconditionViolated(_))
        ));
    }
}
