use num::{Signed, Zero};

use super::interval::ExtReal;
use super::rational::{rat, Rational};
use crate::error::{LabError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub position: Rational,
    pub weight: Rational,
}

/// Finitely many weighted atoms plus a piecewise-constant density.
///
/// `densities[0]` is the density on `(-inf, b_0)`, `densities[i]` the
/// density on `(b_{i-1}, b_i)` and the last entry the density on
/// `(b_m, +inf)`. With no breakpoints the density is a single constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    atoms: Vec<Atom>,
    breakpoints: Vec<Rational>,
    densities: Vec<Rational>,
}

impl Measure {
    pub fn new(atoms: Vec<(Rational, Rational)>, breakpoints: Vec<Rational>, densities: Vec<Rational>) -> Result<Self> {
        if densities.len() != breakpoints.len() + 1 {
            return Err(LabError::InvalidMeasure(format!(
                "{} density values for {} breakpoints; expected exactly one more value than breakpoints",
                densities.len(),
                breakpoints.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LabError::InvalidMeasure("density breakpoints must be strictly increasing".into()));
        }
        if densities.iter().any(|d| d.is_negative()) {
            return Err(LabError::InvalidMeasure("density values must be nonnegative".into()));
        }
        let mut atoms: Vec<Atom> = atoms.into_iter().map(|(position, weight)| Atom { position, weight }).collect();
        if atoms.iter().any(|a| !a.weight.is_positive()) {
            return Err(LabError::InvalidMeasure("atom weights must be strictly positive".into()));
        }
        atoms.sort_by(|a, b| a.position.cmp(&b.position));
        if atoms.windows(2).any(|w| w[0].position == w[1].position) {
            return Err(LabError::InvalidMeasure("atom positions must be distinct".into()));
        }
        Ok(Measure { atoms, breakpoints, densities })
    }

    pub fn lebesgue() -> Self {
        Measure { atoms: vec![], breakpoints: vec![], densities: vec![rat(1)] }
    }

    pub fn atomic(atoms: Vec<(Rational, Rational)>) -> Result<Self> {
        Self::new(atoms, vec![], vec![Rational::zero()])
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn densities(&self) -> &[Rational] {
        &self.densities
    }

    pub fn is_atomless(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom_weight(&self, x: &Rational) -> Rational {
        self.atoms
            .binary_search_by(|a| a.position.cmp(x))
            .map(|i| self.atoms[i].weight.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Density on the open region immediately to the right of `x`.
    pub fn density_right_of(&self, x: &Rational) -> &Rational {
        let idx = self.breakpoints.partition_point(|b| b <= x);
        &self.densities[idx]
    }

    /// Density on the open region immediately to the left of `x`.
    pub fn density_left_of(&self, x: &Rational) -> &Rational {
        let idx = self.breakpoints.partition_point(|b| b < x);
        &self.densities[idx]
    }

    pub fn left_tail_density(&self) -> &Rational {
        &self.densities[0]
    }

    pub fn right_tail_density(&self) -> &Rational {
        self.densities.last().unwrap()
    }

    /// Open density regions `(lo, hi, density)` from left to right.
    pub fn density_regions(&self) -> impl Iterator<Item = (ExtReal, ExtReal, &Rational)> + '_ {
        (0..self.densities.len()).map(move |i| {
            let lo = if i == 0 { ExtReal::NegInf } else { ExtReal::Finite(self.breakpoints[i - 1].clone()) };
            let hi = if i == self.breakpoints.len() {
                ExtReal::PosInf
            } else {
                ExtReal::Finite(self.breakpoints[i].clone())
            };
            (lo, hi, &self.densities[i])
        })
    }

    /// Mirror image under `x -> -x`.
    pub fn reflect(&self) -> Measure {
        let atoms =
            self.atoms.iter().rev().map(|a| Atom { position: -a.position.clone(), weight: a.weight.clone() }).collect();
        Measure {
            atoms,
            breakpoints: self.breakpoints.iter().rev().map(|b| -b.clone()).collect(),
            densities: self.densities.iter().rev().cloned().collect(),
        }
    }

    /// Multiplies every weight and density by a positive constant.
    pub fn scaled(&self, c: &Rational) -> Result<Measure> {
        if !c.is_positive() {
            return Err(LabError::InvalidArgument("scale must be positive".into()));
        }
        Ok(Measure {
            atoms: self.atoms.iter().map(|a| Atom { position: a.position.clone(), weight: &a.weight * c }).collect(),
            breakpoints: self.breakpoints.clone(),
            densities: self.densities.iter().map(|d| d * c).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rational::ratio;

    #[test]
    fn validates_representation() {
        assert!(Measure::new(vec![], vec![rat(0)], vec![rat(1)]).is_err());
        assert!(Measure::new(vec![], vec![rat(1), rat(0)], vec![rat(1); 3]).is_err());
        assert!(Measure::new(vec![(rat(0), rat(0))], vec![], vec![rat(1)]).is_err());
        assert!(Measure::new(vec![(rat(0), rat(1)), (rat(0), rat(2))], vec![], vec![rat(1)]).is_err());
        assert!(Measure::new(vec![], vec![], vec![rat(-1)]).is_err());
    }

    #[test]
    fn densities_on_either_side_of_a_breakpoint() {
        let mu = Measure::new(vec![(rat(2), rat(3))], vec![rat(0)], vec![rat(0), rat(1)]).unwrap();
        assert_eq!(*mu.density_left_of(&rat(0)), rat(0));
        assert_eq!(*mu.density_right_of(&rat(0)), rat(1));
        assert_eq!(*mu.density_right_of(&ratio(-1, 2)), rat(0));
        assert_eq!(mu.atom_weight(&rat(2)), rat(3));
        assert_eq!(mu.atom_weight(&rat(1)), rat(0));
        let r = mu.reflect();
        assert_eq!(*r.density_left_of(&rat(0)), rat(1));
        assert_eq!(r.atom_weight(&rat(-2)), rat(3));
    }
}
