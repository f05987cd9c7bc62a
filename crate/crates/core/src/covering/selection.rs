//! Disjoint ball coverings of `{f > t}` over measures with at most two
//! atoms.
//!
//! The line is split so that each side is covered by balls growing away from
//! the split. On the left side the rightmost uncovered component anchors a
//! ball that is solved leftwards; whenever the solved end lands inside
//! another component the ball is extended from there, and the pieces are
//! merged (adjacent balls of average `t` have average `t`).

use num::Signed;

use super::family::{CoveringFamily, Side};
use super::solve::{solve_average_equation, Direction};
use crate::error::{LabError, Result};
use crate::maximal::function_level_set;
use crate::measure::interval::{ExtReal, Interval};
use crate::measure::intervalset::intersect;
use crate::measure::ops::continuous_mass;
use crate::measure::rational::Rational;
use crate::measure::{average, measure_of, support_of, Measure, StepFunction};

/// Components of `{f > t}` within the support, dropping null components.
pub fn superlevel_components(mu: &Measure, f: &StepFunction, t: &Rational) -> Vec<Interval> {
    intersect(&function_level_set(f, t), &support_of(mu)).into_iter().filter(|c| !measure_of(mu, c).is_zero()).collect()
}

fn check_preconditions(mu: &Measure, t: &Rational) -> Result<()> {
    if !t.is_positive() {
        return Err(LabError::InvalidArgument("level t must be positive".into()));
    }
    if !mu.left_tail_density().is_positive() || !mu.right_tail_density().is_positive() {
        return Err(LabError::PreconditionViolated("both half-lines must have infinite measure".into()));
    }
    match mu.atoms() {
        [] | [_] => Ok(()),
        [a, b] => {
            let between =
                continuous_mass(mu, &ExtReal::Finite(a.position.clone()), &ExtReal::Finite(b.position.clone()));
            if between.is_zero() {
                Ok(())
            } else {
                Err(LabError::PreconditionViolated("the two atoms must have no mass between them".into()))
            }
        }
        _ => Err(LabError::PreconditionViolated("at most two atoms are supported".into())),
    }
}

fn finite(e: &ExtReal) -> Rational {
    e.finite().cloned().expect("components of a compactly supported function are bounded")
}

/// True when the ball with left end `(s, closed)` leaves part of `c` uncovered
/// that matters: an interior part, or an atom at its left end.
fn partially_covered(mu: &Measure, c: &Interval, s: &Rational, closed: bool) -> bool {
    let lo = finite(c.lo());
    let hi = finite(c.hi());
    if &lo < s && s < &hi {
        return true;
    }
    if &hi == s && c.hi_closed() && !closed && lo == hi {
        return mu.atom_weight(s).is_positive();
    }
    &lo == s && c.lo_closed() && !closed && mu.atom_weight(s).is_positive()
}

fn covers(c: &Interval, s: &Rational, closed: bool) -> bool {
    let lo = finite(c.lo());
    &lo > s || (&lo == s && (closed || !c.lo_closed()))
}

/// Covers `comps` (sorted, all left of the split) with balls grown leftwards.
fn cover_leftwards(mu: &Measure, f: &StepFunction, t: &Rational, comps: &[Interval]) -> Result<Vec<Interval>> {
    let mut uncovered: Vec<Interval> = comps.to_vec();
    let mut balls: Vec<Interval> = Vec::new();
    while let Some(last) = uncovered.last().cloned() {
        let anchor = finite(last.hi());
        let blocked = balls.last().is_some_and(|b: &Interval| b.lo() == last.hi() && b.lo_closed());
        let anchor_closed = last.hi_closed() && !blocked;
        let mut end = solve_average_equation(mu, f, &anchor, t, Direction::Left, anchor_closed)?;
        let mut steps = 0;
        while uncovered.iter().any(|c| partially_covered(mu, c, &end.point, end.closed)) {
            steps += 1;
            if steps > comps.len() {
                return Err(LabError::NoSolution(format!(
                    "ball extension from {anchor} did not settle within {} steps",
                    comps.len()
                )));
            }
            end = solve_average_equation(mu, f, &end.point, t, Direction::Left, !end.closed)?;
        }
        let ball =
            Interval::new(ExtReal::Finite(end.point.clone()), ExtReal::Finite(anchor), end.closed, anchor_closed)
                .map_err(|e| LabError::NoSolution(e.to_string()))?;
        uncovered.retain(|c| !covers(c, &end.point, end.closed));
        balls.push(ball);
    }
    Ok(balls)
}

/// Covers `{f > t}` within the support by disjoint balls of average `t`.
pub fn covering_selection(mu: &Measure, f: &StepFunction, t: &Rational) -> Result<CoveringFamily> {
    check_preconditions(mu, t)?;
    let comps = superlevel_components(mu, f, t);
    let mut family = CoveringFamily::empty(t.clone());
    if comps.is_empty() {
        return Ok(family);
    }
    let (left, right): (Vec<Interval>, Vec<Interval>) = match mu.atoms().first() {
        None => (comps, vec![]),
        Some(atom) => {
            let y = &atom.position;
            match comps.iter().position(|c| c.contains(y)) {
                Some(k) => (comps[..=k].to_vec(), comps[k + 1..].to_vec()),
                None => comps.into_iter().partition(|c| finite(c.hi()) <= *y),
            }
        }
    };
    for ball in cover_leftwards(mu, f, t, &left)? {
        family.push(ball, t.clone(), Side::Left);
    }
    if !right.is_empty() {
        let mirrored: Vec<Interval> = right.iter().rev().map(Interval::reflect).collect();
        for ball in cover_leftwards(&mu.reflect(), &f.reflect(), t, &mirrored)? {
            family.push(ball.reflect(), t.clone(), Side::Right);
        }
    }
    family.sort();
    for (ball, avg) in family.balls.iter().zip(&family.averages) {
        let exact = average(mu, f, ball);
        if &exact != avg || measure_of(mu, ball).is_zero() {
            return Err(LabError::NoSolution(format!("ball {ball} has average {exact}, not {avg}")));
        }
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::verify::verify_covering;
    use crate::measure::rational::{rat, ratio};

    #[test]
    fn single_indicator() {
        let leb = Measure::lebesgue();
        let f = StepFunction::open_indicator(rat(0), rat(1), rat(1)).unwrap();
        let fam = covering_selection(&leb, &f, &ratio(1, 2)).unwrap();
        assert_eq!(fam.balls, vec![Interval::open(rat(-1), rat(1)).unwrap()]);
        assert!(verify_covering(&fam, &leb, &f, &ratio(1, 2), 1).passed());
    }

    #[test]
    fn two_indicators() {
        let leb = Measure::lebesgue();
        let f = StepFunction::open_indicator_sum(&[(rat(0), rat(1), rat(1)), (rat(2), rat(3), rat(1))]).unwrap();
        let t = ratio(1, 2);
        let fam = covering_selection(&leb, &f, &t).unwrap();
        assert!(verify_covering(&fam, &leb, &f, &t, 1).passed());
    }

    #[test]
    fn atom_at_origin() {
        let mu = Measure::new(vec![(rat(0), rat(1))], vec![], vec![rat(1)]).unwrap();
        let f = StepFunction::open_indicator(rat(1), rat(2), rat(1)).unwrap();
        let t = ratio(1, 2);
        let fam = covering_selection(&mu, &f, &t).unwrap();
        assert!(verify_covering(&fam, &mu, &f, &t, 1).passed());
        for b in &fam.balls {
            assert!(!b.contains(&rat(0)));
        }
    }

    #[test]
    fn preconditions() {
        let f = StepFunction::open_indicator(rat(0), rat(1), rat(1)).unwrap();
        let half = Measure::new(vec![], vec![rat(0)], vec![rat(0), rat(1)]).unwrap();
        assert!(matches!(covering_selection(&half, &f, &ratio(1, 2)), Err(LabError::PreconditionViolated(_))));
        let spread = Measure::new(vec![(rat(0), rat(1)), (rat(2), rat(1))], vec![], vec![rat(1)]).unwrap();
        assert!(matches!(covering_selection(&spread, &f, &ratio(1, 2)), Err(LabError::PreconditionViolated(_))));
        assert!(covering_selection(&Measure::lebesgue(), &f, &rat(1)).unwrap().is_empty());
    }
}
