//! Cumulative tables over the sorted candidate points of a (measure,
//! function) pair.
//!
//! Every interval whose endpoints are candidate points is described by two
//! cuts. Cut `2i` sits just before point `i`, cut `2i + 1` just after it. A
//! lower cut `2i` gives a closed left end at `p_i`, `2i + 1` an open one; an
//! upper cut `2j + 1` gives a closed right end at `p_j`, `2j` an open one.
//! Measure and integral of the interval are differences of the tables.
//!
//! Between consecutive points the density and the function are constant, so
//! when one endpoint moves inside such a gap both the integral and the mass
//! are affine in it and the average is linear-fractional, hence monotone.
//! The supremum over intervals containing `x` is therefore attained at a
//! cut once `x` itself is added as a point.

use std::ops::{Add, Div, Mul, Sub};

use num::{Signed, Zero};

use crate::measure::interval::{ExtReal, Interval};
use crate::measure::rational::{to_f64, Rational};
use crate::measure::{candidate_points, Measure, StepFunction};

/// Arithmetic the enumeration needs, implemented exactly for rationals and
/// approximately for `f64`.
pub trait Scalar:
    Clone + PartialOrd + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Send + Sync
{
    fn from_rational(r: &Rational) -> Self;
    fn zero() -> Self;
    fn is_positive(&self) -> bool;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        to_f64(r)
    }

    fn zero() -> Self {
        0.0
    }

    fn is_positive(&self) -> bool {
        *self > 0.0
    }
}

#[derive(Debug, Clone)]
pub struct Arrangement<S> {
    pub points: Vec<Rational>,
    pub pos: Vec<S>,
    pub atom: Vec<S>,
    pub point_value: Vec<S>,
    /// Density and function value on `(p_i, p_{i+1})`.
    pub gap_density: Vec<S>,
    pub gap_value: Vec<S>,
    pub left_tail: S,
    pub right_tail: S,
    pub mass: Vec<S>,
    pub integral: Vec<S>,
}

impl<S: Scalar> Arrangement<S> {
    pub fn new(mu: &Measure, f: &StepFunction, extra: &[Rational]) -> Self {
        let mut points = candidate_points(mu, f);
        points.extend(extra.iter().cloned());
        points.sort();
        points.dedup();
        Self::with_points(mu, f, points)
    }

    pub fn with_points(mu: &Measure, f: &StepFunction, points: Vec<Rational>) -> Self {
        let n = points.len();
        let pos: Vec<S> = points.iter().map(S::from_rational).collect();
        let atom: Vec<S> = points.iter().map(|p| S::from_rational(&mu.atom_weight(p))).collect();
        let point_value: Vec<S> = points.iter().map(|p| S::from_rational(&f.value_at(p))).collect();
        let gap_density: Vec<S> =
            points.iter().take(n.saturating_sub(1)).map(|p| S::from_rational(mu.density_right_of(p))).collect();
        let gap_value: Vec<S> =
            points.iter().take(n.saturating_sub(1)).map(|p| S::from_rational(&f.value_right_of(p))).collect();
        let gap_len: Vec<S> = points.windows(2).map(|w| S::from_rational(&(&w[1] - &w[0]))).collect();

        let mut mass = Vec::with_capacity(2 * n);
        let mut integral = Vec::with_capacity(2 * n);
        let (mut m, mut s) = (S::zero(), S::zero());
        for i in 0..n {
            mass.push(m.clone());
            integral.push(s.clone());
            m = m + atom[i].clone();
            s = s + atom[i].clone() * point_value[i].clone();
            mass.push(m.clone());
            integral.push(s.clone());
            if i + 1 < n {
                let dm = gap_density[i].clone() * gap_len[i].clone();
                s = s + dm.clone() * gap_value[i].clone();
                m = m + dm;
            }
        }
        Arrangement {
            points,
            pos,
            atom,
            point_value,
            gap_density,
            gap_value,
            left_tail: S::from_rational(mu.left_tail_density()),
            right_tail: S::from_rational(mu.right_tail_density()),
            mass,
            integral,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, x: &Rational) -> Option<usize> {
        self.points.binary_search(x).ok()
    }

    /// `(mass, integral)` of the interval between two cuts.
    pub fn stats(&self, lo_cut: usize, hi_cut: usize) -> (S, S) {
        (
            self.mass[hi_cut].clone() - self.mass[lo_cut].clone(),
            self.integral[hi_cut].clone() - self.integral[lo_cut].clone(),
        )
    }

    /// Density just left of point `i` (the left tail for `i = 0`).
    pub fn density_left_of(&self, i: usize) -> S {
        if i == 0 {
            self.left_tail.clone()
        } else {
            self.gap_density[i - 1].clone()
        }
    }

    /// Density just right of point `i` (the right tail for the last point).
    pub fn density_right_of(&self, i: usize) -> S {
        if i + 1 == self.len() {
            self.right_tail.clone()
        } else {
            self.gap_density[i].clone()
        }
    }

    /// `density * value` just left of point `i`; zero on the tails.
    pub fn flux_left_of(&self, i: usize) -> S {
        if i == 0 {
            S::zero()
        } else {
            self.gap_density[i - 1].clone() * self.gap_value[i - 1].clone()
        }
    }

    /// `density * value` just right of point `i`; zero on the tails.
    pub fn flux_right_of(&self, i: usize) -> S {
        if i + 1 == self.len() {
            S::zero()
        } else {
            self.gap_density[i].clone() * self.gap_value[i].clone()
        }
    }

    /// The interval described by a pair of cuts.
    pub fn interval(&self, lo_cut: usize, hi_cut: usize) -> Interval {
        let lo = self.points[lo_cut / 2].clone();
        let hi = self.points[hi_cut / 2].clone();
        Interval::new(ExtReal::Finite(lo), ExtReal::Finite(hi), lo_cut.is_multiple_of(2), hi_cut % 2 == 1)
            .expect("cuts describe a valid interval")
    }
}

/// Strictly larger ratio `a / b > c / d` for positive denominators.
pub fn ratio_greater<S: Scalar>(a: &S, b: &S, c: &S, d: &S) -> bool {
    a.clone() * d.clone() > c.clone() * b.clone()
}
