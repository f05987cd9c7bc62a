#![allow(dead_code)]

use maxlab::measure::rational::{rat, ratio, Rational};
use maxlab::measure::{integral_of, Interval, Measure, StepFunction};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A quarter-integer in `[lo, hi]`.
pub fn quarter(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    ratio(rng.gen_range(4 * lo..=4 * hi), 4)
}

fn distinct_points(rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<Rational> {
    let mut pts: Vec<Rational> = Vec::new();
    while pts.len() < count {
        let p = quarter(rng, lo, hi);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts.sort();
    pts
}

/// Nonnegative step function with `pieces` regions on `[-4, 4]`, some of
/// them zero, with right-continuous point values.
pub fn random_step(rng: &mut ChaCha8Rng, pieces: usize) -> StepFunction {
    let bps = distinct_points(rng, pieces + 1, -4, 4);
    let mut values: Vec<Rational> =
        (0..pieces).map(|_| if rng.gen_bool(0.2) { rat(0) } else { ratio(rng.gen_range(1..=16), 4) }).collect();
    if values.iter().all(|v| v == &rat(0)) {
        values[0] = rat(1);
    }
    StepFunction::new(bps, values, None).expect("valid step function")
}

fn random_density(rng: &mut ChaCha8Rng, allow_zero: bool) -> Rational {
    let choices: &[(i64, i64)] =
        if allow_zero { &[(0, 1), (1, 2), (1, 1), (2, 1), (3, 1)] } else { &[(1, 2), (1, 1), (2, 1), (3, 1)] };
    let (n, d) = *choices.choose(rng).unwrap();
    ratio(n, d)
}

/// Atomless measure with a positive left tail density; the right tail may
/// vanish and interior regions may have zero density.
pub fn random_atomless_left_tail(rng: &mut ChaCha8Rng) -> Measure {
    let k = rng.gen_range(0..=3);
    let bps = distinct_points(rng, k, -5, 5);
    let mut dens = vec![random_density(rng, false)];
    dens.extend((0..k).map(|_| random_density(rng, true)));
    Measure::new(vec![], bps, dens).expect("valid measure")
}

/// Measure with positive densities on both tails and `atoms` atoms. With two
/// atoms there is no mass strictly between them.
pub fn random_covering_measure(rng: &mut ChaCha8Rng, atoms: usize) -> Measure {
    match atoms {
        0 => Measure::lebesgue(),
        1 => {
            let y = quarter(rng, -4, 4);
            let w = ratio(rng.gen_range(1..=12), 4);
            let bp = quarter(rng, -5, 5);
            Measure::new(vec![(y, w)], vec![bp], vec![random_density(rng, false), random_density(rng, false)])
                .expect("valid measure")
        }
        _ => {
            let pts = distinct_points(rng, 2, -4, 4);
            let (y1, y2) = (pts[0].clone(), pts[1].clone());
            let w1 = ratio(rng.gen_range(1..=12), 4);
            let w2 = ratio(rng.gen_range(1..=12), 4);
            let dens = vec![random_density(rng, false), rat(0), random_density(rng, false)];
            Measure::new(vec![(y1.clone(), w1), (y2.clone(), w2)], vec![y1, y2], dens).expect("valid measure")
        }
    }
}

/// Mixed measure: up to three atoms over a piecewise density with a
/// positive left tail.
pub fn random_mixed_measure(rng: &mut ChaCha8Rng) -> Measure {
    let base = random_atomless_left_tail(rng);
    let n = rng.gen_range(0..=3);
    let atoms: Vec<(Rational, Rational)> =
        distinct_points(rng, n, -4, 4).into_iter().map(|y| (y, ratio(rng.gen_range(1..=8), 4))).collect();
    Measure::new(atoms, base.breakpoints().to_vec(), base.densities().to_vec()).expect("valid measure")
}

/// A rational level strictly between 0 and `max f`.
pub fn random_level(rng: &mut ChaCha8Rng, f: &StepFunction) -> Rational {
    let top = f.max_value();
    let k = rng.gen_range(1..=15);
    top * ratio(k, 16)
}

/// A random step function with positive `L^1(mu)` norm.
pub fn random_charged_step(rng: &mut ChaCha8Rng, mu: &Measure) -> StepFunction {
    loop {
        let pieces = rng.gen_range(1..=5);
        let f = random_step(rng, pieces);
        let mass = integral_of(mu, &f, &Interval::real_line());
        if mass > rat(0) {
            return f;
        }
    }
}
