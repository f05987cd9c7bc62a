//! Finite unions of intervals kept as sorted, disjoint, non-touching lists.

use super::interval::{ExtReal, Interval};
use super::rational::Rational;

fn make(lo: ExtReal, hi: ExtReal, lc: bool, hc: bool) -> Option<Interval> {
    if lo < hi || (lo == hi && lc && hc) {
        let (lc, hc) = (lc && lo.is_finite(), hc && hi.is_finite());
        Interval::new(lo, hi, lc, hc).ok()
    } else {
        None
    }
}

/// Sorts and merges overlapping or touching intervals.
pub fn normalize(mut items: Vec<Interval>) -> Vec<Interval> {
    items.sort_by(|a, b| a.lo().cmp(b.lo()).then(b.lo_closed().cmp(&a.lo_closed())));
    let mut out: Vec<Interval> = Vec::new();
    for next in items {
        if let Some(cur) = out.last_mut() {
            let joins = next.lo() < cur.hi() || (next.lo() == cur.hi() && (cur.hi_closed() || next.lo_closed()));
            if joins {
                let (hi, hc) = match next.hi().cmp(cur.hi()) {
                    std::cmp::Ordering::Greater => (next.hi().clone(), next.hi_closed()),
                    std::cmp::Ordering::Less => (cur.hi().clone(), cur.hi_closed()),
                    std::cmp::Ordering::Equal => (cur.hi().clone(), cur.hi_closed() || next.hi_closed()),
                };
                *cur = make(cur.lo().clone(), hi, cur.lo_closed(), hc).expect("merged interval is valid");
                continue;
            }
        }
        out.push(next);
    }
    out
}

pub fn intersect_one(a: &Interval, b: &Interval) -> Option<Interval> {
    let (lo, lc) = match a.lo().cmp(b.lo()) {
        std::cmp::Ordering::Greater => (a.lo().clone(), a.lo_closed()),
        std::cmp::Ordering::Less => (b.lo().clone(), b.lo_closed()),
        std::cmp::Ordering::Equal => (a.lo().clone(), a.lo_closed() && b.lo_closed()),
    };
    let (hi, hc) = match a.hi().cmp(b.hi()) {
        std::cmp::Ordering::Less => (a.hi().clone(), a.hi_closed()),
        std::cmp::Ordering::Greater => (b.hi().clone(), b.hi_closed()),
        std::cmp::Ordering::Equal => (a.hi().clone(), a.hi_closed() && b.hi_closed()),
    };
    make(lo, hi, lc, hc)
}

pub fn intersect(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            if let Some(z) = intersect_one(x, y) {
                out.push(z);
            }
        }
    }
    normalize(out)
}

pub fn complement(set: &[Interval]) -> Vec<Interval> {
    let set = normalize(set.to_vec());
    let mut out = Vec::new();
    let mut lo = ExtReal::NegInf;
    let mut lc = false;
    for iv in &set {
        if let Some(gap) = make(lo.clone(), iv.lo().clone(), lc, !iv.lo_closed()) {
            out.push(gap);
        }
        lo = iv.hi().clone();
        lc = !iv.hi_closed();
    }
    if let Some(gap) = make(lo, ExtReal::PosInf, lc, false) {
        out.push(gap);
    }
    out
}

pub fn difference(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    intersect(a, &complement(b))
}

pub fn contains(set: &[Interval], x: &Rational) -> bool {
    set.iter().any(|iv| iv.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rational::rat;

    #[test]
    fn merges_touching_pieces() {
        let s = normalize(vec![
            Interval::open(rat(1), rat(2)).unwrap(),
            Interval::open(rat(0), rat(1)).unwrap(),
            Interval::point(rat(1)),
            Interval::open(rat(3), rat(4)).unwrap(),
            Interval::open(rat(2), rat(3)).unwrap(),
        ]);
        assert_eq!(
            s,
            vec![
                Interval::open(rat(0), rat(2)).unwrap(),
                Interval::open(rat(2), rat(3)).unwrap(),
                Interval::open(rat(3), rat(4)).unwrap()
            ]
        );
    }

    #[test]
    fn difference_leaves_points() {
        let a = vec![Interval::open(rat(0), rat(4)).unwrap()];
        let b = vec![Interval::open(rat(0), rat(2)).unwrap(), Interval::closed(rat(3), rat(5)).unwrap()];
        assert_eq!(difference(&a, &b), vec![Interval::closed_open(rat(2), rat(3)).unwrap()]);
        let c = vec![Interval::open(rat(0), rat(2)).unwrap(), Interval::open(rat(2), rat(4)).unwrap()];
        assert_eq!(difference(&a, &c), vec![Interval::point(rat(2))]);
        assert_eq!(complement(&[Interval::real_line()]), vec![]);
    }
}
