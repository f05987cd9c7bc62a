use std::cmp::Ordering;
use std::fmt;

use num::Signed;

use super::rational::{format_rational, Rational};
use crate::error::{LabError, Result};

/// A point of the extended real line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtReal {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtReal {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn neg(&self) -> ExtReal {
        match self {
            ExtReal::NegInf => ExtReal::PosInf,
            ExtReal::PosInf => ExtReal::NegInf,
            ExtReal::Finite(v) => ExtReal::Finite(-v.clone()),
        }
    }
}

impl From<Rational> for ExtReal {
    fn from(v: Rational) -> Self {
        ExtReal::Finite(v)
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtReal::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => write!(f, "-inf"),
            ExtReal::PosInf => write!(f, "inf"),
            ExtReal::Finite(v) => write!(f, "{}", format_rational(v)),
        }
    }
}

/// An interval of the line with per-endpoint inclusion flags. These are the
/// balls of the one-dimensional theory; a closed singleton is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: ExtReal,
    hi: ExtReal,
    lo_closed: bool,
    hi_closed: bool,
}

impl Interval {
    pub fn new(lo: ExtReal, hi: ExtReal, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo > hi {
            return Err(LabError::InvalidInterval(format!("{lo} > {hi}")));
        }
        if (lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite()) {
            return Err(LabError::InvalidInterval("infinite endpoints cannot be closed".into()));
        }
        if lo == hi && !(lo_closed && hi_closed) {
            return Err(LabError::InvalidInterval(format!("equal endpoints {lo} must form a closed singleton")));
        }
        if lo == ExtReal::PosInf || hi == ExtReal::NegInf {
            return Err(LabError::InvalidInterval("empty interval at infinity".into()));
        }
        Ok(Interval { lo, hi, lo_closed, hi_closed })
    }

    pub fn open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo.into(), hi.into(), false, false)
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo.into(), hi.into(), true, true)
    }

    /// `[lo, hi)`
    pub fn closed_open(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo.into(), hi.into(), true, false)
    }

    /// `(lo, hi]`
    pub fn open_closed(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo.into(), hi.into(), false, true)
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: ExtReal::Finite(x.clone()), hi: ExtReal::Finite(x), lo_closed: true, hi_closed: true }
    }

    pub fn real_line() -> Self {
        Interval { lo: ExtReal::NegInf, hi: ExtReal::PosInf, lo_closed: false, hi_closed: false }
    }

    pub fn lo(&self) -> &ExtReal {
        &self.lo
    }

    pub fn hi(&self) -> &ExtReal {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lo {
            ExtReal::NegInf => true,
            ExtReal::PosInf => false,
            ExtReal::Finite(a) => x > a || (self.lo_closed && x == a),
        };
        let below = match &self.hi {
            ExtReal::PosInf => true,
            ExtReal::NegInf => false,
            ExtReal::Finite(b) => x < b || (self.hi_closed && x == b),
        };
        above && below
    }

    /// Overlap with the open interval `(a, b)` (infinite ends as `None`), as
    /// the endpoints of the intersection; `None` when empty or degenerate.
    pub(crate) fn clip_open(&self, a: &ExtReal, b: &ExtReal) -> Option<(ExtReal, ExtReal)> {
        let lo = if &self.lo > a { self.lo.clone() } else { a.clone() };
        let hi = if &self.hi < b { self.hi.clone() } else { b.clone() };
        if lo < hi {
            Some((lo, hi))
        } else {
            None
        }
    }

    /// Mirror image under `x -> -x`.
    pub fn reflect(&self) -> Interval {
        Interval { lo: self.hi.neg(), hi: self.lo.neg(), lo_closed: self.hi_closed, hi_closed: self.lo_closed }
    }

    /// Length of a bounded interval.
    pub fn length(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => Some((b - a).abs()),
            _ => None,
        }
    }

    /// Sort key giving the lexicographic order on `(lo, hi, lo_closed, hi_closed)`.
    pub fn lex_key(&self) -> (ExtReal, ExtReal, bool, bool) {
        (self.lo.clone(), self.hi.clone(), self.lo_closed, self.hi_closed)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rational::{rat, ratio};

    #[test]
    fn rejects_malformed() {
        assert!(Interval::open(rat(1), rat(0)).is_err());
        assert!(Interval::open(rat(1), rat(1)).is_err());
        assert!(Interval::closed_open(rat(1), rat(1)).is_err());
        assert!(Interval::new(ExtReal::NegInf, rat(0).into(), true, false).is_err());
        assert!(Interval::closed(rat(1), rat(1)).is_ok());
    }

    #[test]
    fn membership_respects_flags() {
        let i = Interval::closed_open(rat(0), rat(1)).unwrap();
        assert!(i.contains(&rat(0)));
        assert!(!i.contains(&rat(1)));
        assert!(i.contains(&ratio(1, 2)));
        let r = i.reflect();
        assert!(r.contains(&rat(0)));
        assert!(!r.contains(&rat(-1)));
        assert_eq!(r.to_string(), "(-1, 0]");
    }
}
