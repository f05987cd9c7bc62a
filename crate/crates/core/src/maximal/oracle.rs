//! Independent brute-force lower bound: the best average over intervals
//! whose endpoints lie on a uniform grid (plus the query point).
//!
//! Each interval is a pair of cuts, one at or left of `x` and one at or right
//! of it, and its average is the slope between the cumulative
//! `(mass, integral)` points of the two cuts. The steepest pair between the
//! two point sets joins a vertex of the lower hull of the left set to a
//! vertex of the upper hull of the right set, so the search is near-linear.
//! Hulls are built in `f64`; the selected interval is then re-evaluated
//! exactly, which keeps the result an honest average of a real interval.

use num::{Signed, ToPrimitive, Zero};

use crate::measure::interval::{ExtReal, Interval};
use crate::measure::rational::{rat, to_f64, Rational};
use crate::measure::{average, Measure, StepFunction};

#[derive(Debug, Clone, Copy)]
struct Cut {
    mass: f64,
    integral: f64,
    /// Index into the query's endpoint table.
    tag: usize,
}

pub struct GridOracle<'a> {
    mu: &'a Measure,
    f: &'a StepFunction,
    grid: Vec<Rational>,
    grid_f64: Vec<f64>,
    /// `(mass, integral)` just before and just after each grid point.
    before: Vec<(f64, f64)>,
    after: Vec<(f64, f64)>,
    piece_bounds: Vec<f64>,
    densities: Vec<f64>,
    values: Vec<f64>,
}

impl<'a> GridOracle<'a> {
    /// Uniform grid of `n >= 2` points spanning one unit beyond the support of `f`.
    pub fn new(mu: &'a Measure, f: &'a StepFunction, n: usize) -> Self {
        let n = n.max(2);
        let (a, b) = match (f.support_start(), f.support_end()) {
            (Some(s), Some(e)) => (s - rat(1), e + rat(1)),
            _ => (rat(-1), rat(1)),
        };
        let step = (&b - &a) / rat(n as i64 - 1);
        let grid: Vec<Rational> = (0..n).map(|k| &a + &step * rat(k as i64)).collect();
        let grid_f64: Vec<f64> = grid.iter().map(to_f64).collect();

        let mut piece_bounds: Vec<Rational> = mu.breakpoints().iter().chain(f.breakpoints()).cloned().collect();
        piece_bounds.sort();
        piece_bounds.dedup();
        let densities =
            piece_midpoint_values(&piece_bounds, |x| to_f64(mu.density_right_of(x)), || to_f64(mu.left_tail_density()));
        let values = piece_midpoint_values(&piece_bounds, |x| to_f64(&f.value_right_of(x)), || 0.0);
        let piece_bounds: Vec<f64> = piece_bounds.iter().map(to_f64).collect();

        let mut oracle = GridOracle {
            mu,
            f,
            grid,
            grid_f64,
            before: Vec::new(),
            after: Vec::new(),
            piece_bounds,
            densities,
            values,
        };
        oracle.build_tables(&a, &step);
        oracle
    }

    fn build_tables(&mut self, a: &Rational, step: &Rational) {
        let n = self.grid.len();
        let mut at_point = vec![(0.0, 0.0); n];
        let mut in_cell = vec![(0.0, 0.0); n];
        for atom in self.mu.atoms() {
            let w = to_f64(&atom.weight);
            let wf = w * to_f64(&self.f.value_at(&atom.position));
            let k = (&atom.position - a) / step;
            if k.is_negative() || k > rat(n as i64 - 1) {
                continue;
            }
            let idx = k.floor().to_integer().to_usize().unwrap();
            let slot = if k.is_integer() { &mut at_point[idx] } else { &mut in_cell[idx] };
            slot.0 += w;
            slot.1 += wf;
        }
        let (mut m, mut s) = (0.0, 0.0);
        for i in 0..n {
            self.before.push((m, s));
            m += at_point[i].0;
            s += at_point[i].1;
            self.after.push((m, s));
            if i + 1 < n {
                let (cm, cs) = self.continuous(self.grid_f64[i], self.grid_f64[i + 1]);
                m += cm + in_cell[i].0;
                s += cs + in_cell[i].1;
            }
        }
    }

    /// Continuous `(mass, integral)` over `(lo, hi)` in floating point.
    fn continuous(&self, lo: f64, hi: f64) -> (f64, f64) {
        let mut start = self.piece_bounds.partition_point(|b| *b <= lo);
        let (mut m, mut s) = (0.0, 0.0);
        let mut left = lo;
        loop {
            let right = match self.piece_bounds.get(start) {
                Some(b) if *b < hi => *b,
                _ => hi,
            };
            let dm = self.densities[start] * (right - left);
            m += dm;
            s += dm * self.values[start];
            if right >= hi {
                break;
            }
            left = right;
            start += 1;
        }
        (m, s)
    }

    /// Atoms strictly between two exact positions, as `(mass, integral)`.
    fn atoms_between(&self, lo: &Rational, hi: &Rational) -> (f64, f64) {
        self.mu.atoms().iter().filter(|a| &a.position > lo && &a.position < hi).fold((0.0, 0.0), |(m, s), a| {
            let w = to_f64(&a.weight);
            (m + w, s + w * to_f64(&self.f.value_at(&a.position)))
        })
    }

    pub fn grid(&self) -> &[Rational] {
        &self.grid
    }

    /// Best grid-interval average containing `x`; never exceeds the true
    /// maximal function at `x`.
    pub fn at(&self, x: &Rational) -> Rational {
        if self.f.is_zero() {
            return Rational::zero();
        }
        let n = self.grid.len();
        let xf = to_f64(x);
        let k = self.grid.partition_point(|g| g < x);
        let on_grid = k < n && &self.grid[k] == x;

        // Endpoint table: (position, closed) per tag.
        let mut ends: Vec<(Rational, bool)> = Vec::new();
        let mut lows: Vec<Cut> = Vec::new();
        let mut highs: Vec<Cut> = Vec::new();
        let mut push = |set: &mut Vec<Cut>, pos: &Rational, closed: bool, (m, s): (f64, f64)| {
            set.push(Cut { mass: m, integral: s, tag: ends.len() });
            ends.push((pos.clone(), closed));
        };

        let (x_before, x_after) = if on_grid {
            (self.before[k], self.after[k])
        } else {
            let atom = self.mu.atom_weight(x);
            let w = to_f64(&atom);
            let wf = w * to_f64(&self.f.value_at(x));
            let before = if k == 0 {
                let (cm, cs) = self.continuous(xf, self.grid_f64[0]);
                let (am, as_) = self.atoms_between(x, &self.grid[0]);
                let (m0, s0) = self.before[0];
                (m0 - cm - am - w, s0 - cs - as_ - wf)
            } else {
                let (cm, cs) = self.continuous(self.grid_f64[k - 1], xf);
                let (am, as_) = self.atoms_between(&self.grid[k - 1], x);
                let (m0, s0) = self.after[k - 1];
                (m0 + cm + am, s0 + cs + as_)
            };
            (before, (before.0 + w, before.1 + wf))
        };

        for i in 0..k {
            push(&mut lows, &self.grid[i], false, self.after[i]);
            push(&mut lows, &self.grid[i], true, self.before[i]);
        }
        push(&mut lows, x, true, x_before);
        push(&mut highs, x, true, x_after);
        let first_hi = if on_grid { k + 1 } else { k };
        for j in first_hi..n {
            push(&mut highs, &self.grid[j], false, self.before[j]);
            push(&mut highs, &self.grid[j], true, self.after[j]);
        }

        let Some((l, h)) = steepest_pair(&lows, &highs) else {
            return Rational::zero();
        };
        let (lo, lc) = &ends[l];
        let (hi, hc) = &ends[h];
        let interval = Interval::new(ExtReal::Finite(lo.clone()), ExtReal::Finite(hi.clone()), *lc, *hc)
            .expect("grid cuts form a valid interval");
        average(self.mu, self.f, &interval)
    }
}

fn piece_midpoint_values(
    bounds: &[Rational],
    right_of: impl Fn(&Rational) -> f64,
    leftmost: impl Fn() -> f64,
) -> Vec<f64> {
    let mut out = vec![leftmost()];
    out.extend(bounds.iter().map(right_of));
    out
}

/// Convenience wrapper building a fresh oracle for one query.
pub fn grid_oracle_at(mu: &Measure, f: &StepFunction, x: &Rational, n: usize) -> Rational {
    GridOracle::new(mu, f, n).at(x)
}

fn cross(o: &Cut, a: &Cut, b: &Cut) -> f64 {
    (a.mass - o.mass) * (b.integral - o.integral) - (a.integral - o.integral) * (b.mass - o.mass)
}

fn collinear_slack(o: &Cut, a: &Cut, b: &Cut) -> f64 {
    let scale = (a.mass - o.mass).abs() + (b.mass - o.mass).abs();
    let scale2 = (a.integral - o.integral).abs() + (b.integral - o.integral).abs();
    1e-13 * scale * scale2
}

/// Lower hull of points sorted by mass, keeping the lowest point per mass.
fn lower_hull(points: &[Cut]) -> Vec<Cut> {
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| a.mass.total_cmp(&b.mass).then(a.integral.total_cmp(&b.integral)));
    sorted.dedup_by(|b, a| a.mass == b.mass);
    let mut hull: Vec<Cut> = Vec::new();
    for p in sorted {
        while hull.len() >= 2 {
            let (o, a) = (&hull[hull.len() - 2], &hull[hull.len() - 1]);
            if cross(o, a, &p) <= collinear_slack(o, a, &p) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Upper hull of points sorted by mass, keeping the highest point per mass.
fn upper_hull(points: &[Cut]) -> Vec<Cut> {
    let flipped: Vec<Cut> = points.iter().map(|c| Cut { mass: c.mass, integral: -c.integral, tag: c.tag }).collect();
    lower_hull(&flipped).into_iter().map(|c| Cut { mass: c.mass, integral: -c.integral, tag: c.tag }).collect()
}

fn slope(l: &Cut, h: &Cut) -> f64 {
    (h.integral - l.integral) / (h.mass - l.mass)
}

/// Index of the lower-hull vertex giving the steepest slope towards `h`,
/// which lies strictly to the right of every hull vertex.
fn tangent(hull: &[Cut], h: &Cut) -> usize {
    let (mut lo, mut hi) = (0usize, hull.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if slope(&hull[mid], h) < slope(&hull[mid + 1], h) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Tags of the steepest `(low, high)` pair with positive mass between them.
fn steepest_pair(lows: &[Cut], highs: &[Cut]) -> Option<(usize, usize)> {
    let top = lows.iter().map(|c| c.mass).fold(f64::NEG_INFINITY, f64::max);
    let full = lower_hull(lows);
    let below: Vec<Cut> = lows.iter().copied().filter(|c| c.mass < top).collect();
    let strict = lower_hull(&below);
    let (level, above): (Vec<Cut>, Vec<Cut>) = highs.iter().partition(|c| c.mass <= top);

    let mut best: Option<(f64, usize, usize)> = None;
    let mut consider = |hull: &[Cut], h: &Cut| {
        if hull.is_empty() {
            return;
        }
        let l = &hull[tangent(hull, h)];
        let s = slope(l, h);
        if best.is_none_or(|(b, _, _)| s > b) {
            best = Some((s, l.tag, h.tag));
        }
    };
    for h in upper_hull(&above) {
        consider(&full, &h);
    }
    for h in upper_hull(&level) {
        consider(&strict, &h);
    }
    best.map(|(_, l, h)| (l, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maximal::maximal_at;
    use crate::measure::rational::ratio;

    /// Exhaustive enumeration over grid-and-x endpoints with exact averages.
    fn brute_force(mu: &Measure, f: &StepFunction, x: &Rational, n: usize) -> Rational {
        let oracle = GridOracle::new(mu, f, n);
        let mut pts = oracle.grid().to_vec();
        pts.push(x.clone());
        pts.sort();
        pts.dedup();
        let mut best = Rational::zero();
        for lo in pts.iter().filter(|p| *p <= x) {
            for hi in pts.iter().filter(|p| *p >= x) {
                for lc in [false, true] {
                    for hc in [false, true] {
                        let Ok(iv) = Interval::new(lo.clone().into(), hi.clone().into(), lc, hc) else {
                            continue;
                        };
                        if !iv.contains(x) {
                            continue;
                        }
                        let avg = average(mu, f, &iv);
                        if avg > best {
                            best = avg;
                        }
                    }
                }
            }
        }
        best
    }

    fn mixed_instance() -> (Measure, StepFunction) {
        let mu = Measure::new(
            vec![(rat(0), rat(2)), (ratio(7, 5), rat(1))],
            vec![rat(-1), rat(1)],
            vec![ratio(1, 2), rat(1), rat(0)],
        )
        .unwrap();
        let f = StepFunction::new(
            vec![rat(-1), rat(0), ratio(3, 2)],
            vec![rat(1), rat(2)],
            Some(vec![rat(1), rat(3), rat(0)]),
        )
        .unwrap();
        (mu, f)
    }

    #[test]
    fn hull_search_matches_exhaustive() {
        let (mu, f) = mixed_instance();
        for n in [2, 5, 9, 14] {
            for x in [rat(-3), ratio(-1, 3), rat(0), ratio(7, 5), rat(2), rat(4)] {
                let fast = grid_oracle_at(&mu, &f, &x, n);
                let slow = brute_force(&mu, &f, &x, n);
                assert!(fast <= slow, "n={n} x={x}");
                assert!(to_f64(&(slow - &fast)) < 1e-12, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn lower_bound_and_convergence() {
        let leb = Measure::lebesgue();
        let f = StepFunction::open_indicator(rat(0), rat(1), rat(1)).unwrap();
        let x = rat(2);
        let exact = maximal_at(&leb, &f, &x).value;
        let coarse = grid_oracle_at(&leb, &f, &x, 2);
        assert!(coarse >= rat(0) && coarse <= exact);
        let fine = grid_oracle_at(&leb, &f, &x, 100_000);
        assert!(fine <= exact);
        assert!(to_f64(&(exact - fine)) <= 1e-3);
        let (mu, g) = mixed_instance();
        for x in [ratio(-1, 3), ratio(7, 5), rat(3)] {
            assert!(grid_oracle_at(&mu, &g, &x, 1000) <= maximal_at(&mu, &g, &x).value);
        }
    }
}
