//! Measures on which the maximal operator barely increases `L^p` norms.

use serde::Serialize;

use crate::error::{LabError, Result};
use crate::measure::rational::{rat, to_f64, Rational};
use crate::measure::{Measure, StepFunction};
use crate::norms::ratio;

fn check_base(t: &Rational) -> Result<()> {
    if t <= &rat(1) {
        return Err(LabError::InvalidArgument(format!("t must exceed 1, got {t}")));
    }
    Ok(())
}

/// Atom `1/(t-1)` at 0 and atoms `t^(i-1)` at `i = 1..=n`, with the
/// indicator of the origin. A ball reaching from 0 to `i` has average `t^-i`.
pub fn example_discrete_atoms(t: &Rational, n: usize) -> Result<(Measure, StepFunction)> {
    check_base(t)?;
    if n == 0 {
        return Err(LabError::InvalidArgument("at least one atom besides the origin is needed".into()));
    }
    let mut atoms = vec![(rat(0), rat(1) / (t - rat(1)))];
    let mut weight = rat(1);
    for i in 1..=n {
        atoms.push((rat(i as i64), weight.clone()));
        weight *= t;
    }
    Ok((Measure::atomic(atoms)?, StepFunction::point_indicator(rat(0))))
}

/// `ratio^p` of the discrete example once all atoms are present.
pub fn discrete_closed_form(t: f64, p: f64) -> f64 {
    1.0 + (t - 1.0) / (t.powf(p) - t)
}

/// Amount by which the first `n` atoms undershoot [`discrete_closed_form`].
pub fn discrete_tail_bound(t: f64, p: f64, n: usize) -> f64 {
    let r = t.powf(1.0 - p);
    (t - 1.0) / t * r.powi(n as i32 + 1) / (1.0 - r)
}

/// Atom `t` at 1 on top of Lebesgue measure on `(0, inf)`, with `f` the
/// indicator of `(0, 1)`.
pub fn example_one_atom(t: &Rational) -> Result<(Measure, StepFunction)> {
    check_base(t)?;
    let mu = Measure::new(vec![(rat(1), t.clone())], vec![rat(0)], vec![rat(0), rat(1)])?;
    let f = StepFunction::from_regions(vec![rat(0), rat(1)], vec![rat(1)])?;
    Ok((mu, f))
}

/// Exact value of the maximal function of the one-atom example at `x > 0`.
pub fn one_atom_maximal(t: &Rational, x: &Rational) -> Rational {
    if x < &rat(1) {
        rat(1)
    } else {
        rat(1) / (t + x)
    }
}

/// `||M f||_p^p` for the one-atom example.
pub fn one_atom_closed_form(t: f64, p: f64) -> f64 {
    1.0 + (t + 1.0).powf(1.0 - p) / (p - 1.0) + t / (t + 1.0).powf(p)
}

pub fn one_atom_upper_bound(t: f64, p: f64) -> f64 {
    1.0 + p / (p - 1.0) * (t + 1.0).powf(1.0 - p)
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscreteReproduction {
    pub t: f64,
    pub p: f64,
    pub atoms: usize,
    pub ratio: f64,
    pub ratio_power: f64,
    pub closed_form: f64,
    pub tail_bound: f64,
    pub margin: f64,
    pub error_bound: f64,
}

pub fn reproduce_discrete(t: &Rational, p: f64, n: usize) -> Result<DiscreteReproduction> {
    let (mu, f) = example_discrete_atoms(t, n)?;
    let r = ratio(&mu, &f, p, 1e-12)?;
    let tf = to_f64(t);
    let power = r.maximal_norm.pth_power / r.function_norm.pth_power;
    let closed = discrete_closed_form(tf, p);
    Ok(DiscreteReproduction {
        t: tf,
        p,
        atoms: n + 1,
        ratio: r.value,
        ratio_power: power,
        closed_form: closed,
        tail_bound: discrete_tail_bound(tf, p, n),
        margin: (closed - power).abs(),
        error_bound: r.error_bound,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OneAtomReproduction {
    pub t: f64,
    pub p: f64,
    pub norm: f64,
    pub norm_power: f64,
    pub closed_form: f64,
    pub upper_bound: f64,
    pub margin: f64,
    pub error_bound: f64,
}

pub fn reproduce_one_atom(t: &Rational, p: f64) -> Result<OneAtomReproduction> {
    let (mu, f) = example_one_atom(t)?;
    let norm = crate::norms::maximal_norm(&mu, &f, p, crate::maximal::MaximalKind::TwoSided, 1e-10)?;
    let tf = to_f64(t);
    let closed = one_atom_closed_form(tf, p);
    Ok(OneAtomReproduction {
        t: tf,
        p,
        norm: norm.value,
        norm_power: norm.pth_power,
        closed_form: closed,
        upper_bound: one_atom_upper_bound(tf, p),
        margin: (closed - norm.pth_power).abs(),
        error_bound: norm.pth_power_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maximal::maximal_at;
    use crate::measure::rational::ratio as frac;

    #[test]
    fn discrete_pointwise() {
        let t = rat(2);
        let (mu, f) = example_discrete_atoms(&t, 10).unwrap();
        for i in 1..=10i64 {
            assert_eq!(maximal_at(&mu, &f, &rat(i)).value, rat(1) / num::pow(t.clone(), i as usize));
        }
    }

    #[test]
    fn discrete_ratio() {
        let r = reproduce_discrete(&rat(2), 2.0, 20).unwrap();
        assert!((r.ratio_power - 1.5).abs() < 1e-5);
        assert!(r.margin <= 1e-9 + r.tail_bound);
        assert!((r.ratio - 1.5f64.sqrt()).abs() < 1e-5);
        assert!(reproduce_discrete(&rat(1000), 2.0, 20).unwrap().ratio <= 1.01);
    }

    #[test]
    fn one_atom_pointwise_and_norm() {
        let t = rat(3);
        let (mu, f) = example_one_atom(&t).unwrap();
        for x in [frac(1, 3), rat(1), frac(7, 2), rat(50)] {
            assert_eq!(maximal_at(&mu, &f, &x).value, one_atom_maximal(&t, &x));
        }
        let r = reproduce_one_atom(&t, 2.0).unwrap();
        assert!(r.margin < 1e-6, "{r:?}");
        assert!(r.norm_power <= r.upper_bound);
    }
}
