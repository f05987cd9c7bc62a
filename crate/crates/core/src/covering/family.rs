use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::measure::interval::{ExtReal, Interval};
use crate::measure::rational::{format_rational, parse_rational, Rational};

/// Which pass of a construction produced a ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
    Unimodal,
    External,
}

/// Balls at one level `t`, each carrying its exact average.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringFamily {
    pub level: Rational,
    pub balls: Vec<Interval>,
    pub averages: Vec<Rational>,
    pub side_labels: Vec<Side>,
}

impl CoveringFamily {
    pub fn empty(level: Rational) -> Self {
        CoveringFamily { level, balls: vec![], averages: vec![], side_labels: vec![] }
    }

    pub fn push(&mut self, ball: Interval, average: Rational, side: Side) {
        self.balls.push(ball);
        self.averages.push(average);
        self.side_labels.push(side);
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    /// Orders balls from left to right.
    pub fn sort(&mut self) {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| self.balls[i].lex_key());
        self.balls = idx.iter().map(|&i| self.balls[i].clone()).collect();
        self.averages = idx.iter().map(|&i| self.averages[i].clone()).collect();
        self.side_labels = idx.iter().map(|&i| self.side_labels[i]).collect();
    }
}

#[derive(Serialize, Deserialize)]
struct BallJson {
    lo: String,
    hi: String,
    lo_closed: bool,
    hi_closed: bool,
    average: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    side: Option<Side>,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    t: String,
    balls: Vec<BallJson>,
}

fn end_to_string(e: &ExtReal) -> String {
    e.to_string()
}

fn end_from_string(field: String, s: &str) -> Result<ExtReal> {
    match s.trim() {
        "-inf" => Ok(ExtReal::NegInf),
        "inf" | "+inf" => Ok(ExtReal::PosInf),
        other => parse_rational(other).map(ExtReal::Finite).map_err(|m| LabError::parse(field, m)),
    }
}

pub fn family_to_json(family: &CoveringFamily) -> String {
    let raw = FamilyJson {
        t: format_rational(&family.level),
        balls: family
            .balls
            .iter()
            .zip(&family.averages)
            .zip(&family.side_labels)
            .map(|((b, avg), side)| BallJson {
                lo: end_to_string(b.lo()),
                hi: end_to_string(b.hi()),
                lo_closed: b.lo_closed(),
                hi_closed: b.hi_closed(),
                average: format_rational(avg),
                side: Some(*side),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("family serializes")
}

pub fn family_from_json(text: &str) -> Result<CoveringFamily> {
    let raw: FamilyJson = serde_json::from_str(text).map_err(|e| LabError::parse("family", e.to_string()))?;
    let level = parse_rational(&raw.t).map_err(|m| LabError::parse("t", m))?;
    let mut family = CoveringFamily::empty(level);
    for (i, b) in raw.balls.iter().enumerate() {
        let lo = end_from_string(format!("balls[{i}].lo"), &b.lo)?;
        let hi = end_from_string(format!("balls[{i}].hi"), &b.hi)?;
        let ball = Interval::new(lo, hi, b.lo_closed, b.hi_closed)
            .map_err(|e| LabError::parse(format!("balls[{i}]"), e.to_string()))?;
        let average = parse_rational(&b.average).map_err(|m| LabError::parse(format!("balls[{i}].average"), m))?;
        family.push(ball, average, b.side.unwrap_or(Side::External));
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::rational::{rat, ratio};

    #[test]
    fn json_round_trip() {
        let mut fam = CoveringFamily::empty(ratio(1, 2));
        fam.push(Interval::open_closed(rat(-1), rat(1)).unwrap(), ratio(1, 2), Side::Left);
        fam.push(Interval::new(rat(3).into(), ExtReal::PosInf, true, false).unwrap(), ratio(1, 2), Side::Right);
        let back = family_from_json(&family_to_json(&fam)).unwrap();
        assert_eq!(back, fam);
        assert!(family_from_json(
            r#"{"t": "1", "balls": [{"lo": "2", "hi": "1", "lo_closed": false, "hi_closed": false, "average": "1"}]}"#
        )
        .is_err());
    }
}
