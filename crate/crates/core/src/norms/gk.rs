//! Globally adaptive 7/15-point Gauss–Kronrod quadrature over a fixed list of
//! panels. The panel with the largest error estimate is bisected until the
//! summed estimate meets the tolerance; summation runs in panel order so the
//! result does not depend on heap internals.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

/// Weights of the embedded Gauss rule at the odd Kronrod nodes.
const GAUSS_WEIGHTS: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

/// Kronrod estimate and `|Kronrod - Gauss|` on `[a, b]`.
pub fn gauss_kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * KRONROD_WEIGHTS[7];
    let mut gauss = fc * GAUSS_WEIGHTS[3];
    for k in 0..7 {
        let dx = half * KRONROD_NODES[k];
        let pair = f(center - dx) + f(center + dx);
        kronrod += KRONROD_WEIGHTS[k] * pair;
        if k % 2 == 1 {
            gauss += GAUSS_WEIGHTS[k / 2] * pair;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs() + 50.0 * f64::EPSILON * value.abs();
    (value, error)
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    order: u64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then(other.order.cmp(&self.order))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub panels: usize,
}

/// Integrates `f` over the union of `panels`, which must not overlap.
pub fn integrate(f: &impl Fn(f64) -> f64, panels: &[(f64, f64)], tol: f64, max_panels: usize) -> Quadrature {
    let mut heap = BinaryHeap::new();
    let mut order = 0u64;
    for &(a, b) in panels {
        if b > a {
            let (value, error) = gauss_kronrod(f, a, b);
            heap.push(Panel { a, b, value, error, order });
            order += 1;
        }
    }
    let mut err: f64 = heap.iter().map(|p| p.error).sum();
    while err > tol && heap.len() < max_panels {
        let worst = heap.pop().expect("nonempty while error is positive");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            heap.push(worst);
            break;
        }
        err -= worst.error;
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (value, error) = gauss_kronrod(f, a, b);
            err += error;
            heap.push(Panel { a, b, value, error, order });
            order += 1;
        }
        if order.is_multiple_of(256) {
            err = heap.iter().map(|p| p.error).sum();
        }
    }
    let mut done: Vec<Panel> = heap.into_vec();
    done.sort_by(|p, q| p.a.total_cmp(&q.a));
    Quadrature {
        value: done.iter().map(|p| p.value).sum(),
        error: done.iter().map(|p| p.error).sum(),
        panels: done.len(),
    }
}
