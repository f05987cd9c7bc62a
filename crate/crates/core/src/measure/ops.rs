use num::{Signed, Zero};

use super::interval::{ExtReal, Interval};
use super::radon::Measure;
use super::rational::{ExtendedNonneg, Rational};
use super::step::StepFunction;

/// Mass of the density part on the open interval `(lo, hi)`.
pub(crate) fn continuous_mass(mu: &Measure, lo: &ExtReal, hi: &ExtReal) -> ExtendedNonneg {
    let mut total = Rational::zero();
    for (a, b, d) in mu.density_regions() {
        if d.is_zero() {
            continue;
        }
        let l = if &a > lo { a } else { lo.clone() };
        let h = if &b < hi { b } else { hi.clone() };
        if l >= h {
            continue;
        }
        match (l, h) {
            (ExtReal::Finite(l), ExtReal::Finite(h)) => total += d * (h - l),
            _ => return ExtendedNonneg::Infinite,
        }
    }
    ExtendedNonneg::Finite(total)
}

pub fn measure_of(mu: &Measure, interval: &Interval) -> ExtendedNonneg {
    let atoms: Rational = mu.atoms().iter().filter(|a| interval.contains(&a.position)).map(|a| a.weight.clone()).sum();
    continuous_mass(mu, interval.lo(), interval.hi()) + ExtendedNonneg::Finite(atoms)
}

pub fn integral_of(mu: &Measure, f: &StepFunction, interval: &Interval) -> Rational {
    let mut total = Rational::zero();
    let bps = f.breakpoints();
    for (i, v) in f.values().iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let region_lo = ExtReal::Finite(bps[i].clone());
        let region_hi = ExtReal::Finite(bps[i + 1].clone());
        if let Some((l, h)) = interval.clip_open(&region_lo, &region_hi) {
            let mass = continuous_mass(mu, &l, &h);
            total += v * mass.finite().expect("bounded region has finite mass");
        }
    }
    for a in mu.atoms() {
        if interval.contains(&a.position) {
            total += &a.weight * f.value_at(&a.position);
        }
    }
    total
}

/// Integral average; 0 when the interval has zero or infinite measure.
pub fn average(mu: &Measure, f: &StepFunction, interval: &Interval) -> Rational {
    match measure_of(mu, interval) {
        ExtendedNonneg::Finite(m) if m.is_positive() => integral_of(mu, f, interval) / m,
        _ => Rational::zero(),
    }
}

/// Sorted union of atom positions, density breakpoints and breakpoints of `f`.
pub fn candidate_points(mu: &Measure, f: &StepFunction) -> Vec<Rational> {
    let mut pts: Vec<Rational> = mu
        .atoms()
        .iter()
        .map(|a| a.position.clone())
        .chain(mu.breakpoints().iter().cloned())
        .chain(f.breakpoints().iter().cloned())
        .collect();
    pts.sort();
    pts.dedup();
    pts
}

/// Closed support as a minimal sorted list of disjoint closed intervals and
/// points. Unbounded ends are open at infinity.
pub fn support_of(mu: &Measure) -> Vec<Interval> {
    let mut spans: Vec<(ExtReal, ExtReal)> = Vec::new();
    for (a, b, d) in mu.density_regions() {
        if d.is_zero() {
            continue;
        }
        match spans.last_mut() {
            Some(last) if last.1 == a => last.1 = b,
            _ => spans.push((a, b)),
        }
    }
    for atom in mu.atoms() {
        let x = ExtReal::Finite(atom.position.clone());
        let idx = spans.partition_point(|s| s.1 < x);
        if idx < spans.len() && spans[idx].0 <= x {
            continue;
        }
        spans.insert(idx, (x.clone(), x));
    }
    spans
        .into_iter()
        .map(|(lo, hi)| {
            let lc = lo.is_finite();
            let hc = hi.is_finite();
            Interval::new(lo, hi, lc, hc).expect("support span is a valid interval")
        })
        .collect()
}
