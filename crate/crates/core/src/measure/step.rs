use num::{Signed, Zero};

use super::rational::{rat, Rational};
use crate::error::{LabError, Result};

/// A nonnegative, compactly supported, piecewise-constant function.
///
/// `values[i]` is the value on `(t_i, t_{i+1})`; `point_values[i]` is the
/// value at `t_i`, defaulting to the value of the region to its right (so
/// the last breakpoint defaults to 0). The function vanishes outside
/// `[t_0, t_k]`. Point values matter only where the measure has atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepFunction {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
    point_values: Vec<Rational>,
}

impl StepFunction {
    pub fn new(breakpoints: Vec<Rational>, values: Vec<Rational>, point_values: Option<Vec<Rational>>) -> Result<Self> {
        let expected = breakpoints.len().saturating_sub(1);
        if values.len() != expected {
            return Err(LabError::InvalidStepFunction(format!(
                "{} region values for {} breakpoints; expected {expected}",
                values.len(),
                breakpoints.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LabError::InvalidStepFunction("breakpoints must be strictly increasing".into()));
        }
        if values.iter().any(|v| v.is_negative()) {
            return Err(LabError::InvalidStepFunction("values must be nonnegative".into()));
        }
        let point_values = match point_values {
            Some(pv) => {
                if pv.len() != breakpoints.len() {
                    return Err(LabError::InvalidStepFunction(format!(
                        "{} point values for {} breakpoints",
                        pv.len(),
                        breakpoints.len()
                    )));
                }
                if pv.iter().any(|v| v.is_negative()) {
                    return Err(LabError::InvalidStepFunction("point values must be nonnegative".into()));
                }
                pv
            }
            None => (0..breakpoints.len()).map(|i| values.get(i).cloned().unwrap_or_else(Rational::zero)).collect(),
        };
        Ok(StepFunction { breakpoints, values, point_values })
    }

    /// Right-continuous step function from breakpoints and region values.
    pub fn from_regions(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        Self::new(breakpoints, values, None)
    }

    pub fn zero() -> Self {
        StepFunction { breakpoints: vec![], values: vec![], point_values: vec![] }
    }

    /// `height * 1_(a,b)`, vanishing at both endpoints.
    pub fn open_indicator(a: Rational, b: Rational, height: Rational) -> Result<Self> {
        Self::new(vec![a, b], vec![height], Some(vec![Rational::zero(), Rational::zero()]))
    }

    /// `1_{x}`: zero everywhere except the value 1 at `x`.
    pub fn point_indicator(x: Rational) -> Self {
        StepFunction { breakpoints: vec![x], values: vec![], point_values: vec![rat(1)] }
    }

    /// Sum of open-interval indicators `sum_i c_i 1_(a_i, b_i)`, with point
    /// values zero at every breakpoint. Intervals must be disjoint.
    pub fn open_indicator_sum(pieces: &[(Rational, Rational, Rational)]) -> Result<Self> {
        let mut pieces = pieces.to_vec();
        pieces.sort_by(|x, y| x.0.cmp(&y.0));
        let mut breakpoints: Vec<Rational> = Vec::new();
        let mut values = Vec::new();
        for (a, b, c) in pieces {
            if a >= b {
                return Err(LabError::InvalidStepFunction("empty indicator interval".into()));
            }
            match breakpoints.last() {
                Some(last) if *last > a => {
                    return Err(LabError::InvalidStepFunction("indicator intervals overlap".into()))
                }
                Some(last) if *last == a => {}
                Some(_) => {
                    values.push(Rational::zero());
                    breakpoints.push(a);
                }
                None => breakpoints.push(a),
            }
            values.push(c);
            breakpoints.push(b);
        }
        let pv = vec![Rational::zero(); breakpoints.len()];
        Self::new(breakpoints, values, Some(pv))
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn point_values(&self) -> &[Rational] {
        &self.point_values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero) && self.point_values.iter().all(Zero::is_zero)
    }

    pub fn support_start(&self) -> Option<&Rational> {
        self.breakpoints.first()
    }

    pub fn support_end(&self) -> Option<&Rational> {
        self.breakpoints.last()
    }

    pub fn value_at(&self, x: &Rational) -> Rational {
        match self.breakpoints.binary_search(x) {
            Ok(i) => self.point_values[i].clone(),
            Err(0) => Rational::zero(),
            Err(i) if i == self.breakpoints.len() => Rational::zero(),
            Err(i) => self.values[i - 1].clone(),
        }
    }

    /// Value on the open region immediately right of `x`.
    pub fn value_right_of(&self, x: &Rational) -> Rational {
        let i = self.breakpoints.partition_point(|b| b <= x);
        if i == 0 || i == self.breakpoints.len() {
            Rational::zero()
        } else {
            self.values[i - 1].clone()
        }
    }

    /// Value on the open region immediately left of `x`.
    pub fn value_left_of(&self, x: &Rational) -> Rational {
        let i = self.breakpoints.partition_point(|b| b < x);
        if i == 0 || i == self.breakpoints.len() {
            Rational::zero()
        } else {
            self.values[i - 1].clone()
        }
    }

    /// Largest value taken anywhere, point values included.
    pub fn max_value(&self) -> Rational {
        self.values.iter().chain(self.point_values.iter()).max().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scaled(&self, c: &Rational) -> Result<StepFunction> {
        if c.is_negative() {
            return Err(LabError::InvalidArgument("scale must be nonnegative".into()));
        }
        Ok(StepFunction {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
            point_values: self.point_values.iter().map(|v| v * c).collect(),
        })
    }

    /// Mirror image under `x -> -x`.
    pub fn reflect(&self) -> StepFunction {
        StepFunction {
            breakpoints: self.breakpoints.iter().rev().map(|b| -b.clone()).collect(),
            values: self.values.iter().rev().cloned().collect(),
            point_values: self.point_values.iter().rev().cloned().collect(),
        }
    }

    /// Pointwise sum on the common refinement of both breakpoint sets.
    pub fn add(&self, other: &StepFunction) -> StepFunction {
        let mut pts: Vec<Rational> = self.breakpoints.iter().chain(other.breakpoints.iter()).cloned().collect();
        pts.sort();
        pts.dedup();
        let point_values = pts.iter().map(|p| self.value_at(p) + other.value_at(p)).collect();
        let values = pts
            .windows(2)
            .map(|w| {
                let mid = (&w[0] + &w[1]) / rat(2);
                self.value_at(&mid) + other.value_at(&mid)
            })
            .collect();
        StepFunction { breakpoints: pts, values, point_values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rational::ratio;

    #[test]
    fn right_continuous_default() {
        let f = StepFunction::from_regions(vec![rat(0), rat(1)], vec![rat(1)]).unwrap();
        assert_eq!(f.value_at(&rat(0)), rat(1));
        assert_eq!(f.value_at(&rat(1)), rat(0));
        assert_eq!(f.value_at(&ratio(1, 2)), rat(1));
        assert_eq!(f.value_at(&rat(-1)), rat(0));
    }

    #[test]
    fn indicator_sum_fills_gaps() {
        let f = StepFunction::open_indicator_sum(&[(rat(2), rat(3), rat(1)), (rat(0), rat(1), rat(2))]).unwrap();
        assert_eq!(f.breakpoints(), &[rat(0), rat(1), rat(2), rat(3)]);
        assert_eq!(f.values(), &[rat(2), rat(0), rat(1)]);
        assert_eq!(f.value_at(&rat(1)), rat(0));
        assert!(StepFunction::open_indicator_sum(&[(rat(0), rat(2), rat(1)), (rat(1), rat(3), rat(1))]).is_err());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(StepFunction::new(vec![rat(0), rat(1)], vec![], None).is_err());
        assert!(StepFunction::new(vec![rat(0), rat(1)], vec![rat(-1)], None).is_err());
        assert!(StepFunction::new(vec![rat(1), rat(0)], vec![rat(1)], None).is_err());
    }

    #[test]
    fn reflection_and_sum() {
        let f = StepFunction::from_regions(vec![rat(0), rat(1), rat(2)], vec![rat(2), rat(1)]).unwrap();
        let r = f.reflect();
        assert_eq!(r.value_at(&ratio(-3, 2)), rat(1));
        assert_eq!(r.value_at(&rat(-1)), rat(1));
        let g = f.add(&StepFunction::open_indicator(ratio(1, 2), rat(3), rat(1)).unwrap());
        assert_eq!(g.value_at(&ratio(3, 4)), rat(3));
        assert_eq!(g.value_at(&ratio(5, 2)), rat(1));
        assert_eq!(g.max_value(), rat(3));
    }
}
