//! JSON forms of measures and step functions. Numbers travel as strings
//! ("3/7", "0.25") so that values round-trip exactly.

use serde::{Deserialize, Serialize};

use super::radon::Measure;
use super::rational::{format_rational, parse_rational, Rational};
use super::step::StepFunction;
use crate::error::{LabError, Result};

#[derive(Debug, Serialize, Deserialize)]
struct AtomJson {
    x: String,
    w: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct DensityJson {
    breakpoints: Vec<String>,
    values: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct MeasureJson {
    #[serde(default)]
    atoms: Vec<AtomJson>,
    density: DensityJson,
}

#[derive(Debug, Serialize, Deserialize)]
struct StepJson {
    breakpoints: Vec<String>,
    values: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    point_values: Option<Vec<String>>,
}

fn parse_field(field: String, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|m| LabError::parse(field, m))
}

fn parse_list(field: &str, items: &[String]) -> Result<Vec<Rational>> {
    items.iter().enumerate().map(|(i, s)| parse_field(format!("{field}[{i}]"), s)).collect()
}

fn format_list(items: &[Rational]) -> Vec<String> {
    items.iter().map(format_rational).collect()
}

pub fn measure_from_json(text: &str) -> Result<Measure> {
    let raw: MeasureJson = serde_json::from_str(text).map_err(|e| LabError::parse("measure", e.to_string()))?;
    let atoms = raw
        .atoms
        .iter()
        .enumerate()
        .map(|(i, a)| Ok((parse_field(format!("atoms[{i}].x"), &a.x)?, parse_field(format!("atoms[{i}].w"), &a.w)?)))
        .collect::<Result<Vec<_>>>()?;
    let breakpoints = parse_list("density.breakpoints", &raw.density.breakpoints)?;
    let values = parse_list("density.values", &raw.density.values)?;
    Measure::new(atoms, breakpoints, values)
}

pub fn measure_to_json(mu: &Measure) -> String {
    let raw = MeasureJson {
        atoms: mu
            .atoms()
            .iter()
            .map(|a| AtomJson { x: format_rational(&a.position), w: format_rational(&a.weight) })
            .collect(),
        density: DensityJson { breakpoints: format_list(mu.breakpoints()), values: format_list(mu.densities()) },
    };
    serde_json::to_string_pretty(&raw).expect("measure serializes")
}

pub fn step_from_json(text: &str) -> Result<StepFunction> {
    let raw: StepJson = serde_json::from_str(text).map_err(|e| LabError::parse("function", e.to_string()))?;
    let breakpoints = parse_list("breakpoints", &raw.breakpoints)?;
    let values = parse_list("values", &raw.values)?;
    let point_values = raw.point_values.as_deref().map(|pv| parse_list("point_values", pv)).transpose()?;
    StepFunction::new(breakpoints, values, point_values)
}

pub fn step_to_json(f: &StepFunction) -> String {
    let raw = StepJson {
        breakpoints: format_list(f.breakpoints()),
        values: format_list(f.values()),
        point_values: Some(format_list(f.point_values())),
    };
    serde_json::to_string_pretty(&raw).expect("step function serializes")
}
