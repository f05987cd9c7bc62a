//! The maximal function between consecutive candidate points as an upper
//! envelope of linear-fractional functions.
//!
//! For `x` strictly inside a region the admissible intervals either have both
//! ends at candidate cuts (a constant), start at `x` and end at a cut to the
//! right, or start at a cut to the left and end at `x`. With density `d` and
//! function value `v` on the region, an interval `[x, h)` has average
//! `(A + d v s) / (B + d s)` with `s` the distance from `x` to the region's
//! right end; intervals ending at `x` use the distance to the left end.

use super::arrangement::{ratio_greater, Arrangement, Scalar};
use super::evaluate::MaximalKind;
use crate::measure::rational::Rational;

#[derive(Debug, Clone)]
pub struct RegionProfile<S> {
    /// Left and right ends; `None` for the unbounded tails.
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
    pub lo_pos: Option<S>,
    pub hi_pos: Option<S>,
    pub density: S,
    pub value: S,
    /// Best `(integral, mass)` over intervals with both ends at cuts.
    pub constant: Option<(S, S)>,
    /// `(A, B)` for intervals starting at `x`.
    pub from_right: Vec<(S, S)>,
    /// `(A, B)` for intervals ending at `x`.
    pub from_left: Vec<(S, S)>,
}

impl<S: Scalar> RegionProfile<S> {
    pub fn contains(&self, x: &Rational) -> bool {
        self.lo.as_ref().is_none_or(|lo| x > lo) && self.hi.as_ref().is_none_or(|hi| x < hi)
    }

    /// Envelope value at an interior point, given its position as `S`.
    pub fn value_at(&self, x: &S) -> S {
        let d = &self.density;
        let dv = self.density.clone() * self.value.clone();
        let mut best = self.constant.as_ref().map(|(s, m)| s.clone() / m.clone()).unwrap_or_else(S::zero);
        let mut consider = |a: &S, b: &S, dist: &S| {
            let mass = b.clone() + d.clone() * dist.clone();
            if mass.is_positive() {
                let v = (a.clone() + dv.clone() * dist.clone()) / mass;
                if v > best {
                    best = v;
                }
            }
        };
        if let Some(hi) = &self.hi_pos {
            let s = hi.clone() - x.clone();
            for (a, b) in &self.from_right {
                consider(a, b, &s);
            }
        }
        if let Some(lo) = &self.lo_pos {
            let u = x.clone() - lo.clone();
            for (a, b) in &self.from_left {
                consider(a, b, &u);
            }
        }
        best
    }
}

fn differences<S: Scalar>(
    arr: &Arrangement<S>,
    anchor: usize,
    cuts: impl Iterator<Item = usize>,
    anchor_first: bool,
) -> Vec<(S, S)> {
    cuts.map(|c| {
        let (m, s) = if anchor_first { arr.stats(anchor, c) } else { arr.stats(c, anchor) };
        (s, m)
    })
    .collect()
}

fn best_constant<S: Scalar>(
    arr: &Arrangement<S>,
    lo_cuts: std::ops::Range<usize>,
    hi_cuts: std::ops::Range<usize>,
) -> Option<(S, S)> {
    let mut best: Option<(S, S)> = None;
    for l in lo_cuts {
        for h in hi_cuts.clone() {
            let (m, s) = arr.stats(l, h);
            if !m.is_positive() {
                continue;
            }
            if best.as_ref().is_none_or(|(bs, bm)| ratio_greater(&s, &m, bs, bm)) {
                best = Some((s, m));
            }
        }
    }
    best
}

/// Profiles of every open region of the arrangement, left tail first. With
/// `charged_only` only regions of positive density are produced.
pub fn build_profile<S: Scalar>(arr: &Arrangement<S>, kind: MaximalKind, charged_only: bool) -> Vec<RegionProfile<S>> {
    let n = arr.len();
    let cuts = 2 * n;
    let two = kind == MaximalKind::TwoSided;
    let plus = kind != MaximalKind::OneSidedMinus;
    let minus = kind != MaximalKind::OneSidedPlus;
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let keep = |d: &S| !charged_only || d.is_positive();

    if keep(&arr.left_tail) {
        out.push(RegionProfile {
            lo: None,
            hi: Some(arr.points[0].clone()),
            lo_pos: None,
            hi_pos: Some(arr.pos[0].clone()),
            density: arr.left_tail.clone(),
            value: S::zero(),
            constant: None,
            from_right: if plus { differences(arr, 0, 0..cuts, true) } else { vec![] },
            from_left: vec![],
        });
    }
    for i in 0..n.saturating_sub(1) {
        let d = arr.gap_density[i].clone();
        if !keep(&d) {
            continue;
        }
        let left_end = 2 * i + 1;
        let right_start = 2 * i + 2;
        out.push(RegionProfile {
            lo: Some(arr.points[i].clone()),
            hi: Some(arr.points[i + 1].clone()),
            lo_pos: Some(arr.pos[i].clone()),
            hi_pos: Some(arr.pos[i + 1].clone()),
            density: d,
            value: arr.gap_value[i].clone(),
            constant: if two { best_constant(arr, 0..left_end + 1, right_start..cuts) } else { None },
            from_right: if plus { differences(arr, right_start, right_start..cuts, true) } else { vec![] },
            from_left: if minus { differences(arr, left_end, 0..left_end + 1, false) } else { vec![] },
        });
    }
    if keep(&arr.right_tail) {
        out.push(RegionProfile {
            lo: Some(arr.points[n - 1].clone()),
            hi: None,
            lo_pos: Some(arr.pos[n - 1].clone()),
            hi_pos: None,
            density: arr.right_tail.clone(),
            value: S::zero(),
            constant: None,
            from_right: vec![],
            from_left: if minus { differences(arr, cuts - 1, 0..cuts, false) } else { vec![] },
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maximal::evaluate::maximal_value;
    use crate::measure::rational::{rat, ratio};
    use crate::measure::{Measure, StepFunction};

    #[test]
    fn envelope_matches_pointwise_evaluation() {
        let mu = Measure::new(
            vec![(rat(1), rat(2)), (rat(3), ratio(1, 2))],
            vec![rat(-2), rat(0), rat(2)],
            vec![ratio(1, 3), rat(1), rat(0), rat(2)],
        )
        .unwrap();
        let f = StepFunction::new(
            vec![rat(-1), rat(0), ratio(5, 2)],
            vec![rat(3), rat(1)],
            Some(vec![rat(0), rat(4), rat(0)]),
        )
        .unwrap();
        for kind in [MaximalKind::TwoSided, MaximalKind::OneSidedPlus, MaximalKind::OneSidedMinus] {
            let arr: Arrangement<Rational> = Arrangement::new(&mu, &f, &[]);
            let regions = build_profile(&arr, kind, false);
            for k in -12..=20 {
                let x = ratio(2 * k + 1, 5);
                if arr.index_of(&x).is_some() {
                    continue;
                }
                let region = regions.iter().find(|r| r.contains(&x)).unwrap();
                assert_eq!(region.value_at(&x), maximal_value(&mu, &f, &x, kind).value, "{kind:?} at {x}");
            }
        }
    }
}
