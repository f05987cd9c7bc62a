//! Derivative-free search for step functions with a small maximal ratio.
//!
//! A `k`-piece step function is described by an offset, `k` log gaps and `k`
//! log heights. Each restart runs Nelder-Mead from a seeded random start on
//! its share of the evaluation budget.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{LabError, Result};
use crate::measure::rational::{dyadic, to_f64, Rational};
use crate::measure::{candidate_points, Measure, StepFunction};
use crate::norms::{ratio, ratio_fast};

pub const DEFAULT_RESTARTS: usize = 8;
const ROUNDING_BITS: u32 = 16;
const LOG_GAP_RANGE: (f64, f64) = (-8.0, 8.0);
const LOG_HEIGHT_RANGE: (f64, f64) = (-8.0, 8.0);
const SEARCH_TOL: f64 = 1e-6;
const FINAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub p: f64,
    pub pieces: usize,
    pub budget: usize,
    pub seed: u64,
    pub restarts: usize,
}

impl SearchConfig {
    pub fn new(p: f64, pieces: usize, budget: usize, seed: u64) -> Self {
        SearchConfig { p, pieces, budget, seed, restarts: DEFAULT_RESTARTS }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    #[serde(skip)]
    pub best_f: StepFunction,
    pub best_ratio: f64,
    pub error_bound: f64,
    pub evaluations: usize,
    pub seed: u64,
    pub history: Vec<(usize, f64)>,
}

/// Maps a parameter vector to a step function with dyadic breakpoints and
/// heights.
pub fn decode(params: &[f64], pieces: usize) -> Result<StepFunction> {
    let mut x = params[0];
    let mut bps = vec![dyadic(x, ROUNDING_BITS)?];
    for g in &params[1..=pieces] {
        x += g.clamp(LOG_GAP_RANGE.0, LOG_GAP_RANGE.1).exp();
        bps.push(dyadic(x, ROUNDING_BITS)?);
    }
    let heights = params[pieces + 1..=2 * pieces]
        .iter()
        .map(|h| dyadic(h.clamp(LOG_HEIGHT_RANGE.0, LOG_HEIGHT_RANGE.1).exp(), ROUNDING_BITS))
        .collect::<Result<Vec<Rational>>>()?;
    StepFunction::new(bps, heights, None)
}

struct Objective<'a> {
    mu: &'a Measure,
    p: f64,
    pieces: usize,
}

impl Objective<'_> {
    fn value(&self, params: &[f64]) -> f64 {
        decode(params, self.pieces)
            .and_then(|f| ratio_fast(self.mu, &f, self.p, SEARCH_TOL))
            .map_or(f64::INFINITY, |r| r.value)
    }
}

struct RestartOutcome {
    best: Vec<f64>,
    value: f64,
    used: usize,
    improvements: Vec<(usize, f64)>,
}

/// Counts evaluations and remembers the best point seen.
struct Tracker<'a> {
    objective: &'a Objective<'a>,
    budget: usize,
    used: usize,
    best: Vec<f64>,
    value: f64,
    improvements: Vec<(usize, f64)>,
}

impl Tracker<'_> {
    fn exhausted(&self) -> bool {
        self.used >= self.budget
    }

    fn eval(&mut self, x: &[f64]) -> f64 {
        self.used += 1;
        let v = self.objective.value(x);
        if v < self.value {
            self.value = v;
            self.best = x.to_vec();
            self.improvements.push((self.used, v));
        }
        v
    }
}

fn nelder_mead(tracker: &mut Tracker, start: Vec<f64>, step: f64) {
    let n = start.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        if tracker.exhausted() {
            return;
        }
        let mut x = start.clone();
        if i > 0 {
            x[i - 1] += step;
        }
        let v = tracker.eval(&x);
        simplex.push((x, v));
    }
    while !tracker.exhausted() {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = simplex[n].1 - simplex[0].1;
        if spread.is_finite() && spread <= 1e-12 * simplex[0].1.abs().max(1.0) {
            return;
        }
        let (worst, worst_v) = simplex[n].clone();
        let centroid: Vec<f64> =
            (0..n).map(|j| simplex[..n].iter().map(|(x, _)| x[j]).sum::<f64>() / n as f64).collect();
        let along = |c: f64| -> Vec<f64> { centroid.iter().zip(&worst).map(|(m, w)| m + c * (m - w)).collect() };

        let reflected = along(1.0);
        let rv = tracker.eval(&reflected);
        if rv < simplex[0].1 {
            if tracker.exhausted() {
                simplex[n] = (reflected, rv);
                break;
            }
            let expanded = along(2.0);
            let ev = tracker.eval(&expanded);
            simplex[n] = if ev < rv { (expanded, ev) } else { (reflected, rv) };
            continue;
        }
        if rv < simplex[n - 1].1 {
            simplex[n] = (reflected, rv);
            continue;
        }
        if tracker.exhausted() {
            break;
        }
        let contracted = if rv < worst_v { along(0.5) } else { along(-0.5) };
        let cv = tracker.eval(&contracted);
        if cv < worst_v.min(rv) {
            simplex[n] = (contracted, cv);
            continue;
        }
        let best = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            if tracker.exhausted() {
                return;
            }
            let x: Vec<f64> = best.iter().zip(&vertex.0).map(|(b, v)| b + 0.5 * (v - b)).collect();
            let v = tracker.eval(&x);
            *vertex = (x, v);
        }
    }
}

fn random_start(rng: &mut ChaCha8Rng, pieces: usize, span: (f64, f64)) -> Vec<f64> {
    let mut x = vec![rng.gen_range(span.0..=span.1)];
    x.extend((0..pieces).map(|_| rng.gen_range(-2.0..=1.0)));
    x.extend((0..pieces).map(|_| rng.gen_range(-1.0..=1.0)));
    x
}

fn run_restart(objective: &Objective, seed: u64, budget: usize, span: (f64, f64)) -> RestartOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tracker = Tracker { objective, budget, used: 0, best: vec![], value: f64::INFINITY, improvements: vec![] };
    while !tracker.exhausted() {
        let start = random_start(&mut rng, objective.pieces, span);
        let step = rng.gen_range(0.25..=1.0);
        nelder_mead(&mut tracker, start, step);
    }
    RestartOutcome { best: tracker.best, value: tracker.value, used: tracker.used, improvements: tracker.improvements }
}

/// Minimizes `||M f||_p / ||f||_p` over `k`-piece step functions. Point
/// indicators at the atoms of `mu` are evaluated first as known witnesses.
pub fn search_min_ratio(mu: &Measure, config: &SearchConfig) -> Result<SearchResult> {
    if config.budget == 0 || config.pieces == 0 || config.restarts == 0 {
        return Err(LabError::InvalidArgument("budget, pieces and restarts must be positive".into()));
    }
    if config.p.is_nan() || config.p <= 1.0 {
        return Err(LabError::InvalidArgument(format!("exponent p must exceed 1, got {}", config.p)));
    }
    let objective = Objective { mu, p: config.p, pieces: config.pieces };

    let mut history = Vec::new();
    let mut used = 0;
    let mut best: Option<(StepFunction, f64)> = None;
    for atom in mu.atoms() {
        if used >= config.budget {
            break;
        }
        used += 1;
        let f = StepFunction::point_indicator(atom.position.clone());
        let v = ratio_fast(mu, &f, config.p, SEARCH_TOL).map_or(f64::INFINITY, |r| r.value);
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            history.push((used, v));
            best = Some((f, v));
        }
    }

    let pts = candidate_points(mu, &StepFunction::zero());
    let span = match (pts.first(), pts.last()) {
        (Some(a), Some(b)) => (to_f64(a) - 1.0, to_f64(b)),
        _ => (-1.0, 1.0),
    };
    let remaining = config.budget - used;
    let mut master = ChaCha8Rng::seed_from_u64(config.seed);
    let plans: Vec<(u64, usize)> = (0..config.restarts)
        .map(|i| {
            let share = remaining / config.restarts + usize::from(i < remaining % config.restarts);
            (master.gen::<u64>(), share)
        })
        .filter(|(_, share)| *share > 0)
        .collect();
    let outcomes: Vec<RestartOutcome> =
        plans.par_iter().map(|&(seed, share)| run_restart(&objective, seed, share, span)).collect();

    for outcome in outcomes {
        let mut incumbent = best.as_ref().map_or(f64::INFINITY, |(_, b)| *b);
        for (i, v) in &outcome.improvements {
            if *v < incumbent {
                history.push((used + i, *v));
                incumbent = *v;
            }
        }
        if best.as_ref().is_none_or(|(_, b)| outcome.value < *b) {
            if let Ok(f) = decode(&outcome.best, config.pieces) {
                best = Some((f, outcome.value));
            }
        }
        used += outcome.used;
    }

    let (best_f, _) = best.ok_or_else(|| LabError::NoSolution("no candidate had a finite ratio".into()))?;
    let exact = ratio(mu, &best_f, config.p, FINAL_TOL)?;
    Ok(SearchResult {
        best_f,
        best_ratio: exact.value,
        error_bound: exact.error_bound,
        evaluations: used,
        seed: config.seed,
        history,
    })
}
