//! Solving `average = t` for one moving endpoint.
//!
//! Walking away from the anchor, `g = integral - t * mass` of the growing
//! interval is piecewise affine in the moving endpoint, with jumps at atoms.
//! The first place where `g` returns to zero after becoming positive is the
//! wanted endpoint.

use num::{Signed, Zero};

use crate::error::{LabError, Result};
use crate::measure::rational::Rational;
use crate::measure::{candidate_points, Measure, StepFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// The solved endpoint and whether the ball includes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    pub point: Rational,
    pub closed: bool,
}

/// Finds `s` with average `t` over the interval between `s` and `anchor`.
/// `anchor_closed` says whether the anchor belongs to the interval.
pub fn solve_average_equation(
    mu: &Measure,
    f: &StepFunction,
    anchor: &Rational,
    t: &Rational,
    direction: Direction,
    anchor_closed: bool,
) -> Result<Boundary> {
    if !t.is_positive() {
        return Err(LabError::InvalidArgument("level t must be positive".into()));
    }
    match direction {
        Direction::Left => solve_leftward(mu, f, anchor, t, anchor_closed),
        Direction::Right => {
            let b = solve_leftward(&mu.reflect(), &f.reflect(), &-anchor.clone(), t, anchor_closed)?;
            Ok(Boundary { point: -b.point, closed: b.closed })
        }
    }
}

fn no_solution(anchor: &Rational) -> LabError {
    LabError::NoSolution(format!("average never crosses the level moving left from {anchor}"))
}

fn solve_leftward(
    mu: &Measure,
    f: &StepFunction,
    anchor: &Rational,
    t: &Rational,
    anchor_closed: bool,
) -> Result<Boundary> {
    let pts: Vec<Rational> = candidate_points(mu, f).into_iter().filter(|p| p < anchor).rev().collect();
    let mut g = Rational::zero();
    let mut started = false;

    if anchor_closed {
        let w = mu.atom_weight(anchor);
        if w.is_positive() {
            let fv = f.value_at(anchor);
            if fv < *t {
                return Err(no_solution(anchor));
            }
            if fv == *t {
                return Ok(Boundary { point: anchor.clone(), closed: true });
            }
            g = w * (fv - t);
            started = true;
        }
    }

    let mut right = anchor.clone();
    for p in pts {
        let d = mu.density_left_of(&right).clone();
        let v = f.value_left_of(&right);
        let len = &right - &p;
        if d.is_positive() {
            if !started {
                match v.cmp(t) {
                    std::cmp::Ordering::Less => return Err(no_solution(anchor)),
                    std::cmp::Ordering::Equal => return Ok(Boundary { point: p, closed: false }),
                    std::cmp::Ordering::Greater => started = true,
                }
            }
            let slope = &d * (&v - t);
            if slope.is_negative() {
                let reach = &g / -&slope;
                if reach <= len {
                    return Ok(Boundary { point: &right - reach, closed: false });
                }
            }
            g += slope * &len;
        }
        let w = mu.atom_weight(&p);
        if w.is_positive() {
            let fv = f.value_at(&p);
            let next = &g + &w * (&fv - t);
            if !started {
                match fv.cmp(t) {
                    std::cmp::Ordering::Less => return Err(no_solution(anchor)),
                    std::cmp::Ordering::Equal => return Ok(Boundary { point: p, closed: true }),
                    std::cmp::Ordering::Greater => started = true,
                }
            } else if next.is_negative() {
                return Err(LabError::NoSolution(format!("the atom at {p} jumps across the level")));
            } else if next.is_zero() {
                return Ok(Boundary { point: p, closed: true });
            }
            g = next;
        }
        right = p;
    }

    let d = mu.left_tail_density().clone();
    if !started || !d.is_positive() {
        return Err(no_solution(anchor));
    }
    let reach = &g / (d * t);
    Ok(Boundary { point: right - reach, closed: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rational::{rat, ratio};
    use crate::measure::{average, Interval};

    fn indicator01() -> StepFunction {
        StepFunction::open_indicator(rat(0), rat(1), rat(1)).unwrap()
    }

    #[test]
    fn lebesgue_examples() {
        let leb = Measure::lebesgue();
        let f = indicator01();
        let b = solve_average_equation(&leb, &f, &rat(1), &ratio(1, 2), Direction::Left, false).unwrap();
        assert_eq!(b, Boundary { point: rat(-1), closed: false });
        assert_eq!(average(&leb, &f, &Interval::open(rat(-1), rat(1)).unwrap()), ratio(1, 2));
        let b = solve_average_equation(&leb, &f, &rat(1), &rat(1), Direction::Left, false).unwrap();
        assert_eq!(b.point, rat(0));
        let r = solve_average_equation(&leb, &f, &rat(0), &ratio(1, 2), Direction::Right, false).unwrap();
        assert_eq!(r, Boundary { point: rat(2), closed: false });
    }

    #[test]
    fn zero_density_gap_has_no_solution() {
        let mu = Measure::new(vec![], vec![rat(0), rat(5)], vec![rat(1), rat(0), rat(1)]).unwrap();
        let f = indicator01();
        assert!(matches!(
            solve_average_equation(&mu, &f, &rat(3), &rat(2), Direction::Left, false),
            Err(LabError::NoSolution(_))
        ));
    }

    #[test]
    fn atom_inside_superlevel_set() {
        let mu = Measure::new(vec![(ratio(1, 2), rat(2))], vec![], vec![rat(1)]).unwrap();
        let f = StepFunction::from_regions(vec![rat(0), rat(1)], vec![rat(1)]).unwrap();
        let t = ratio(1, 3);
        let b = solve_average_equation(&mu, &f, &rat(1), &t, Direction::Left, false).unwrap();
        let ball = Interval::new(b.point.clone().into(), rat(1).into(), b.closed, false).unwrap();
        assert_eq!(average(&mu, &f, &ball), t);
    }
}
