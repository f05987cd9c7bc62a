use rayon::prelude::*;
use serde::Serialize;

use super::arrangement::{ratio_greater, Arrangement, Scalar};
use crate::error::{LabError, Result};
use crate::measure::rational::Rational;
use crate::measure::{Interval, Measure, StepFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MaximalKind {
    TwoSided,
    OneSidedPlus,
    OneSidedMinus,
}

impl MaximalKind {
    pub fn name(self) -> &'static str {
        match self {
            MaximalKind::TwoSided => "two_sided",
            MaximalKind::OneSidedPlus => "one_sided_plus",
            MaximalKind::OneSidedMinus => "one_sided_minus",
        }
    }

    pub fn mirror(self) -> MaximalKind {
        match self {
            MaximalKind::TwoSided => MaximalKind::TwoSided,
            MaximalKind::OneSidedPlus => MaximalKind::OneSidedMinus,
            MaximalKind::OneSidedMinus => MaximalKind::OneSidedPlus,
        }
    }
}

/// A maximal-function value and an interval attaining it. The witness is
/// absent only when no interval of positive finite measure contains the
/// point, in which case the value is 0 and is a supremum only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalValue {
    pub value: Rational,
    pub witness: Option<Interval>,
}

impl MaximalValue {
    pub fn is_supremum_only(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct EvaluatedMaximal {
    pub mesh: Vec<Rational>,
    pub values: Vec<MaximalValue>,
    pub kind: MaximalKind,
}

/// Best `(integral, mass, lo_cut, hi_cut)` over the cut pairs admitted by
/// `kind` around point `ix`. Pairs are visited in lexicographic order of
/// `(lo, hi, lo_closed, hi_closed)` and only strict improvements replace the
/// incumbent, so the reported pair is the smallest maximizer.
pub(crate) fn best_cut<S: Scalar>(arr: &Arrangement<S>, ix: usize, kind: MaximalKind) -> Option<(S, S, usize, usize)> {
    let n = arr.len();
    let (lo_points, hi_points) = match kind {
        MaximalKind::TwoSided => (0..ix + 1, ix..n),
        MaximalKind::OneSidedPlus => (ix..ix + 1, ix..n),
        MaximalKind::OneSidedMinus => (0..ix + 1, ix..ix + 1),
    };
    let mut best: Option<(S, S, usize, usize)> = None;
    for i in lo_points {
        let lo_cuts: &[usize] = if i == ix { &[2 * i] } else { &[2 * i + 1, 2 * i] };
        for j in hi_points.clone() {
            let hi_cuts: &[usize] = if j == ix { &[2 * j + 1] } else { &[2 * j, 2 * j + 1] };
            for &l in lo_cuts {
                for &h in hi_cuts {
                    let (m, s) = arr.stats(l, h);
                    if !m.is_positive() {
                        continue;
                    }
                    let better = match &best {
                        None => true,
                        Some((bs, bm, _, _)) => ratio_greater(&s, &m, bs, bm),
                    };
                    if better {
                        best = Some((s, m, l, h));
                    }
                }
            }
        }
    }
    best
}

pub(crate) fn value_from_best(
    arr: &Arrangement<Rational>,
    best: Option<(Rational, Rational, usize, usize)>,
) -> MaximalValue {
    match best {
        Some((s, m, l, h)) => MaximalValue { value: s / m, witness: Some(arr.interval(l, h)) },
        None => MaximalValue { value: <Rational as Scalar>::zero(), witness: None },
    }
}

pub fn maximal_value(mu: &Measure, f: &StepFunction, x: &Rational, kind: MaximalKind) -> MaximalValue {
    let arr: Arrangement<Rational> = Arrangement::new(mu, f, std::slice::from_ref(x));
    let ix = arr.index_of(x).expect("x is a point of the arrangement");
    value_from_best(&arr, best_cut(&arr, ix, kind))
}

/// Uncentered maximal function at `x`.
pub fn maximal_at(mu: &Measure, f: &StepFunction, x: &Rational) -> MaximalValue {
    maximal_value(mu, f, x, MaximalKind::TwoSided)
}

/// Supremum of averages over `[x, b)`, `b > x`.
pub fn one_sided_plus_at(mu: &Measure, f: &StepFunction, x: &Rational) -> MaximalValue {
    maximal_value(mu, f, x, MaximalKind::OneSidedPlus)
}

/// Supremum of averages over `(a, x]`, `a < x`.
pub fn one_sided_minus_at(mu: &Measure, f: &StepFunction, x: &Rational) -> MaximalValue {
    maximal_value(mu, f, x, MaximalKind::OneSidedMinus)
}

/// Approximate value at point `ix` of an `f64` arrangement.
pub fn maximal_value_f64(arr: &Arrangement<f64>, ix: usize, kind: MaximalKind) -> f64 {
    best_cut(arr, ix, kind).map_or(0.0, |(s, m, _, _)| s / m)
}

pub fn evaluate_on_mesh(
    mu: &Measure,
    f: &StepFunction,
    mesh: &[Rational],
    kind: MaximalKind,
) -> Result<EvaluatedMaximal> {
    if mesh.windows(2).any(|w| w[0] >= w[1]) {
        return Err(LabError::InvalidArgument("mesh must be strictly increasing".into()));
    }
    let values = mesh.par_iter().map(|x| maximal_value(mu, f, x, kind)).collect();
    Ok(EvaluatedMaximal { mesh: mesh.to_vec(), values, kind })
}

/// Which balls a restricted supremum ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallShape {
    Open,
    Closed,
}

/// Supremum of averages over open-only or closed-only intervals containing
/// `x`, computed independently of the cut enumeration: each endpoint is a
/// candidate point or a candidate point shifted by an infinitesimal `eps`,
/// and the average is taken in the limit `eps -> 0`.
pub fn restricted_sup(mu: &Measure, f: &StepFunction, x: &Rational, shape: BallShape) -> Rational {
    let arr: Arrangement<Rational> = Arrangement::new(mu, f, std::slice::from_ref(x));
    let ix = arr.index_of(x).expect("x is a point of the arrangement");
    let zero = <Rational as Scalar>::zero;
    // (cut, d mass / d eps, d integral / d eps)
    let mut lows: Vec<(usize, Rational, Rational)> = Vec::new();
    let mut highs: Vec<(usize, Rational, Rational)> = Vec::new();
    match shape {
        BallShape::Open => {
            for i in 0..=ix {
                if i < ix {
                    lows.push((2 * i + 1, zero(), zero()));
                }
                lows.push((2 * i, arr.density_left_of(i), arr.flux_left_of(i)));
            }
            for j in ix..arr.len() {
                if j > ix {
                    highs.push((2 * j, zero(), zero()));
                }
                highs.push((2 * j + 1, arr.density_right_of(j), arr.flux_right_of(j)));
            }
        }
        BallShape::Closed => {
            for i in 0..=ix {
                lows.push((2 * i, zero(), zero()));
                if i < ix {
                    lows.push((2 * i + 1, -arr.density_right_of(i), -arr.flux_right_of(i)));
                }
            }
            for j in ix..arr.len() {
                highs.push((2 * j + 1, zero(), zero()));
                if j > ix {
                    highs.push((2 * j, -arr.density_left_of(j), -arr.flux_left_of(j)));
                }
            }
        }
    }
    let mut best = zero();
    for (l, lm, li) in &lows {
        for (h, hm, hi) in &highs {
            let (m0, i0) = arr.stats(*l, *h);
            let limit = if m0.is_positive() {
                i0 / m0
            } else {
                let m1 = lm + hm;
                if !m1.is_positive() {
                    continue;
                }
                (li + hi) / m1
            };
            if limit > best {
                best = limit;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rational::{rat, ratio};
    use crate::measure::{average, measure_of};

    fn indicator01() -> StepFunction {
        StepFunction::open_indicator(rat(0), rat(1), rat(1)).unwrap()
    }

    fn one_atom(t: i64) -> (Measure, StepFunction) {
        let mu = Measure::new(vec![(rat(1), rat(t))], vec![rat(0)], vec![rat(0), rat(1)]).unwrap();
        (mu, indicator01())
    }

    #[test]
    fn two_sided_lebesgue_indicator() {
        let v = maximal_at(&Measure::lebesgue(), &indicator01(), &rat(2));
        assert_eq!(v.value, ratio(1, 2));
        let w = v.witness.unwrap();
        assert_eq!(average(&Measure::lebesgue(), &indicator01(), &w), ratio(1, 2));
        assert_eq!(w.lo(), &rat(0).into());
        assert_eq!(w.hi(), &rat(2).into());
        assert!(w.hi_closed());
    }

    #[test]
    fn one_atom_formula() {
        for t in [3, 10] {
            let (mu, f) = one_atom(t);
            assert_eq!(maximal_at(&mu, &f, &ratio(1, 2)).value, rat(1));
            for x in [rat(1), ratio(3, 2), rat(4)] {
                assert_eq!(maximal_at(&mu, &f, &x).value, rat(1) / (rat(t) + &x));
            }
        }
    }

    #[test]
    fn geometric_atoms_give_powers() {
        let t = 3i64;
        let mut atoms = vec![(rat(0), ratio(1, t - 1))];
        for i in 1..=6 {
            atoms.push((rat(i), rat(t.pow(i as u32 - 1))));
        }
        let mu = Measure::atomic(atoms).unwrap();
        let f = StepFunction::point_indicator(rat(0));
        for i in 1..=6u32 {
            assert_eq!(maximal_at(&mu, &f, &rat(i as i64)).value, ratio(1, t.pow(i)));
        }
    }

    #[test]
    fn one_sided_examples() {
        let leb = Measure::lebesgue();
        let f = indicator01();
        assert_eq!(one_sided_plus_at(&leb, &f, &rat(-1)).value, ratio(1, 2));
        assert_eq!(one_sided_plus_at(&leb, &f, &rat(2)).value, rat(0));
        let half = one_sided_plus_at(&leb, &f, &ratio(1, 2));
        assert_eq!(half.value, rat(1));
        assert_eq!(half.witness.unwrap(), Interval::closed_open(ratio(1, 2), rat(1)).unwrap());
        let minus = one_sided_minus_at(&leb, &f, &rat(2));
        assert_eq!(minus.value, ratio(1, 2));
        assert_eq!(minus.witness.unwrap(), Interval::open_closed(rat(0), rat(2)).unwrap());
        assert_eq!(one_sided_minus_at(&leb, &f, &rat(-1)).value, rat(0));
    }

    #[test]
    fn supremum_only_without_mass() {
        let mu = Measure::atomic(vec![(rat(5), rat(1))]).unwrap();
        let v = one_sided_minus_at(&mu, &indicator01(), &rat(2));
        assert!(v.is_supremum_only());
        assert_eq!(v.value, rat(0));
        let w = maximal_at(&mu, &indicator01(), &rat(2));
        assert!(!w.is_supremum_only());
        assert!(measure_of(&mu, w.witness.as_ref().unwrap()).finite().unwrap() > &rat(0));
    }

    #[test]
    fn restricted_suprema_agree() {
        let (mu, _) = one_atom(3);
        let f =
            StepFunction::new(vec![rat(0), rat(1), rat(2)], vec![rat(1), rat(2)], Some(vec![rat(0), rat(5), rat(0)]))
                .unwrap();
        for x in [ratio(-1, 2), rat(0), ratio(1, 2), rat(1), ratio(3, 2), rat(3)] {
            let full = maximal_at(&mu, &f, &x).value;
            assert_eq!(restricted_sup(&mu, &f, &x, BallShape::Open), full, "open at {x}");
            assert_eq!(restricted_sup(&mu, &f, &x, BallShape::Closed), full, "closed at {x}");
        }
    }

    #[test]
    fn mesh_rejects_unsorted() {
        assert!(
            evaluate_on_mesh(&Measure::lebesgue(), &indicator01(), &[rat(1), rat(0)], MaximalKind::TwoSided).is_err()
        );
        let e = evaluate_on_mesh(&Measure::lebesgue(), &indicator01(), &[rat(0), rat(2)], MaximalKind::OneSidedMinus)
            .unwrap();
        assert_eq!(e.values[1].value, ratio(1, 2));
    }
}
