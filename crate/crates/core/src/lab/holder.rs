//! Report-only comparison of searched minima across exponents. The
//! estimates are upper bounds on infima, so no inequality is asserted.

use std::collections::BTreeMap;

use serde::Serialize;

use super::constants::lerner;
use super::search::{search_min_ratio, SearchConfig};
use crate::error::{LabError, Result};
use crate::measure::Measure;

#[derive(Debug, Clone, Serialize)]
pub struct HolderRow {
    pub p: f64,
    pub r: f64,
    pub estimate_p: f64,
    pub estimate_r: f64,
    /// `estimate_p^(p/r)`.
    pub interpolated: f64,
    pub floor_p: f64,
    pub floor_r: f64,
}

/// Searches each exponent once and tabulates every pair `p < r`.
pub fn holder_experiment(
    mu: &Measure,
    p_list: &[f64],
    r_list: &[f64],
    pieces: usize,
    budget: usize,
    seed: u64,
) -> Result<Vec<HolderRow>> {
    if let Some(bad) = p_list.iter().chain(r_list).find(|e| e.is_nan() || **e <= 1.0) {
        return Err(LabError::InvalidArgument(format!("exponents must exceed 1, got {bad}")));
    }
    let mut estimates: BTreeMap<u64, f64> = BTreeMap::new();
    let mut estimate = |e: f64| -> Result<f64> {
        if let Some(v) = estimates.get(&e.to_bits()) {
            return Ok(*v);
        }
        let v = search_min_ratio(mu, &SearchConfig::new(e, pieces, budget, seed))?.best_ratio;
        estimates.insert(e.to_bits(), v);
        Ok(v)
    };
    let mut rows = Vec::new();
    for &p in p_list {
        for &r in r_list.iter().filter(|r| **r > p) {
            let (estimate_p, estimate_r) = (estimate(p)?, estimate(r)?);
            rows.push(HolderRow {
                p,
                r,
                estimate_p,
                estimate_r,
                interpolated: estimate_p.powf(p / r),
                floor_p: lerner(p),
                floor_r: lerner(r),
            });
        }
    }
    Ok(rows)
}
