//! Strict superlevel sets of step functions and of maximal functions.
//!
//! Inside a region every member of the envelope is above `t` on a piece
//! touching one end of the region (the condition is affine in the distance
//! to that end), so the set in a region is the union of at most two such
//! pieces and all boundaries are exact rationals.

use num::{Signed, Zero};

use super::arrangement::Arrangement;
use super::evaluate::{best_cut, MaximalKind};
use super::profile::{build_profile, RegionProfile};
use crate::error::{LabError, Result};
use crate::measure::interval::{ExtReal, Interval};
use crate::measure::intervalset::normalize;
use crate::measure::rational::{rat, Rational};
use crate::measure::{candidate_points, integral_of, Measure, StepFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelKind {
    FunctionItself,
    Maximal(MaximalKind),
}

/// `{f > t}` as a normalized union of intervals.
pub fn function_level_set(f: &StepFunction, t: &Rational) -> Vec<Interval> {
    let bps = f.breakpoints();
    let mut pieces = Vec::new();
    for (i, v) in f.values().iter().enumerate() {
        if v > t {
            pieces.push(Interval::open(bps[i].clone(), bps[i + 1].clone()).expect("regions are nonempty"));
        }
    }
    for (p, v) in bps.iter().zip(f.point_values()) {
        if v > t {
            pieces.push(Interval::point(p.clone()));
        }
    }
    normalize(pieces)
}

/// Which condition on the distance `r` from the anchoring end holds.
enum Condition {
    Everywhere,
    Nowhere,
    Beyond(Rational),
    Within(Rational),
}

fn classify(k0: Rational, k1: &Rational) -> Condition {
    if k1.is_zero() {
        return if k0.is_positive() { Condition::Everywhere } else { Condition::Nowhere };
    }
    let root = -k0 / k1;
    if k1.is_positive() {
        if root.is_positive() {
            Condition::Beyond(root)
        } else {
            Condition::Everywhere
        }
    } else if root.is_positive() {
        Condition::Within(root)
    } else {
        Condition::Nowhere
    }
}

fn region_pieces(region: &RegionProfile<Rational>, t: &Rational) -> Vec<Interval> {
    let lo = region.lo.clone().map_or(ExtReal::NegInf, ExtReal::Finite);
    let hi = region.hi.clone().map_or(ExtReal::PosInf, ExtReal::Finite);
    let whole = || vec![Interval::new(lo.clone(), hi.clone(), false, false).expect("region is nonempty")];
    if let Some((s, m)) = &region.constant {
        if s > &(t * m) {
            return whole();
        }
    }
    let d = &region.density;
    let slope = d * (&region.value - t);
    let mut left_reach = lo.clone();
    let mut right_reach = hi.clone();
    let mut extend_left = |to: ExtReal| {
        if to > left_reach {
            left_reach = to;
        }
    };
    let mut extend_right = |from: ExtReal| {
        if from < right_reach {
            right_reach = from;
        }
    };
    let mut everywhere = false;
    if let Some(h) = &region.hi {
        for (a, b) in &region.from_right {
            if b.is_zero() && d.is_zero() {
                continue;
            }
            match classify(a - t * b, &slope) {
                Condition::Everywhere => everywhere = true,
                Condition::Nowhere => {}
                Condition::Beyond(r) => extend_left(ExtReal::Finite(h - r)),
                Condition::Within(r) => extend_right(ExtReal::Finite(h - r)),
            }
        }
    }
    if let Some(l) = &region.lo {
        for (a, b) in &region.from_left {
            if b.is_zero() && d.is_zero() {
                continue;
            }
            match classify(a - t * b, &slope) {
                Condition::Everywhere => everywhere = true,
                Condition::Nowhere => {}
                Condition::Beyond(r) => extend_right(ExtReal::Finite(l + r)),
                Condition::Within(r) => extend_left(ExtReal::Finite(l + r)),
            }
        }
    }
    if everywhere || left_reach >= right_reach {
        return whole();
    }
    let mut out = Vec::new();
    if left_reach > lo {
        let end = left_reach.min(hi.clone());
        out.push(Interval::new(lo.clone(), end, false, false).expect("piece is nonempty"));
    }
    if right_reach < hi {
        let start = right_reach.max(lo.clone());
        out.push(Interval::new(start, hi.clone(), false, false).expect("piece is nonempty"));
    }
    out
}

/// Exact `{M f > t}` for a maximal kind; may be unbounded.
pub fn maximal_level_set(mu: &Measure, f: &StepFunction, t: &Rational, kind: MaximalKind) -> Vec<Interval> {
    let arr: Arrangement<Rational> = Arrangement::new(mu, f, &[]);
    let mut pieces: Vec<Interval> = Vec::new();
    if arr.is_empty() {
        return pieces;
    }
    for region in build_profile(&arr, kind, false) {
        pieces.extend(region_pieces(&region, t));
    }
    for k in 0..arr.len() {
        if let Some((s, m, _, _)) = best_cut(&arr, k, kind) {
            if s > t * &m {
                pieces.push(Interval::point(arr.points[k].clone()));
            }
        }
    }
    normalize(pieces)
}

/// Strict superlevel set within a bounded window. Boundaries are computed
/// exactly, so `tol` only has to be positive.
pub fn superlevel_set(
    mu: &Measure,
    f: &StepFunction,
    t: &Rational,
    kind: LevelKind,
    window: &Interval,
    tol: f64,
) -> Result<Vec<Interval>> {
    if !t.is_positive() {
        return Err(LabError::InvalidArgument("level t must be positive".into()));
    }
    if !window.is_bounded() {
        return Err(LabError::InvalidArgument("window must be bounded".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(LabError::InvalidArgument("tol must be positive".into()));
    }
    let set = match kind {
        LevelKind::FunctionItself => function_level_set(f, t),
        LevelKind::Maximal(k) => maximal_level_set(mu, f, t, k),
    };
    for piece in &set {
        if piece.lo() <= window.lo() || piece.hi() >= window.hi() {
            return Err(LabError::WindowTooSmall(format!("{piece} meets the window {window}")));
        }
    }
    Ok(set)
}

/// A window outside of which every maximal function of `f` stays at or
/// below `t`, using `M f(x) <= |f|_1 / (d * dist)` beyond the candidates.
pub fn auto_window(mu: &Measure, f: &StepFunction, t: &Rational) -> Result<Interval> {
    let pts = candidate_points(mu, f);
    let (first, last) = match (pts.first(), pts.last()) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => (rat(0), rat(0)),
    };
    let tail = mu.left_tail_density().min(mu.right_tail_density()).clone();
    let width = if tail.is_positive() && t.is_positive() {
        integral_of(mu, f, &Interval::real_line()) / (tail * t) + rat(1)
    } else {
        &last - &first + rat(1)
    };
    Interval::closed(first - &width, last + width)
}
