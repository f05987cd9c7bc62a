use serde::Serialize;

use crate::error::{LabError, Result};

/// Lower bounds for `||M f||_p / ||f||_p` with disjoint (`L = 1`) or
/// `L`-overlapping coverings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundConstants {
    pub p: f64,
    pub overlap: u32,
    pub lerner: f64,
    pub besicovitch: f64,
}

pub fn lerner(p: f64) -> f64 {
    (p / (p - 1.0)).powf(1.0 / p)
}

pub fn besicovitch(p: f64, overlap: u32) -> f64 {
    (1.0 + 1.0 / ((p - 1.0) * f64::from(overlap))).powf(1.0 / p)
}

pub fn constants(p: f64, overlap: u32) -> Result<BoundConstants> {
    if p.is_nan() || p <= 1.0 || p.is_infinite() {
        return Err(LabError::InvalidArgument(format!("exponent p must exceed 1, got {p}")));
    }
    if overlap == 0 {
        return Err(LabError::InvalidArgument("overlap L must be at least 1".into()));
    }
    Ok(BoundConstants { p, overlap, lerner: lerner(p), besicovitch: besicovitch(p, overlap) })
}

/// Strict Hadwiger number of `R^d` for `d = 1, 2`.
pub fn hadwiger_strict(dimension: u32) -> Result<u32> {
    match dimension {
        1 => Ok(2),
        2 => Ok(5),
        d => Err(LabError::UnsupportedDimension(d)),
    }
}

/// Distance in units in the last place between two positive floats.
pub fn ulp_distance(a: f64, b: f64) -> u64 {
    a.to_bits().abs_diff(b.to_bits())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let c = constants(2.0, 1).unwrap();
        assert!((c.lerner - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(ulp_distance(c.lerner, c.besicovitch), 0);
        assert!((constants(2.0, 5).unwrap().besicovitch - 1.2f64.sqrt()).abs() < 1e-15);
        assert!(constants(1.0, 1).is_err() && constants(2.0, 0).is_err());
    }

    #[test]
    fn hadwiger() {
        assert_eq!(hadwiger_strict(1).unwrap(), 2);
        assert_eq!(hadwiger_strict(2).unwrap(), 5);
        assert!(matches!(hadwiger_strict(3), Err(LabError::UnsupportedDimension(3))));
    }
}
