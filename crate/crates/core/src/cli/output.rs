use std::fs;
use std::path::PathBuf;

use maxlab::lab::report::csv_string;
use maxlab::LabError;
use serde::Serialize;

use super::args::Format;

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit code 2.
    Input(String),
    /// A check ran and failed, or the computation could not finish: exit code 1.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failed(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Failed(m) => m,
        }
    }
}

impl From<LabError> for CliError {
    fn from(e: LabError) -> Self {
        match e {
            LabError::InvalidInterval(_)
            | LabError::InvalidMeasure(_)
            | LabError::InvalidStepFunction(_)
            | LabError::Parse { .. }
            | LabError::PreconditionViolated(_)
            | LabError::UnsupportedDimension(_)
            | LabError::ZeroNorm
            | LabError::InvalidArgument(_) => CliError::Input(e.to_string()),
            LabError::WindowTooSmall(_) | LabError::TailNotCertified(_) | LabError::NoSolution(_) => {
                CliError::Failed(e.to_string())
            }
        }
    }
}

/// Everything a command produces, written once at the end.
pub struct Output {
    pub name: String,
    pub body: String,
    pub plots: Vec<(String, String)>,
    pub passed: bool,
}

impl Output {
    pub fn table<T: Serialize>(name: &str, rows: &[T], format: Format) -> Result<Output, CliError> {
        let body = match format {
            Format::Csv => csv_string(rows)?,
            Format::Json => json(rows)?,
        };
        Ok(Output { name: name.to_string(), body, plots: vec![], passed: true })
    }

    pub fn document<T: Serialize>(name: &str, value: &T) -> Result<Output, CliError> {
        Ok(Output { name: name.to_string(), body: json(value)?, plots: vec![], passed: true })
    }

    pub fn extension(&self) -> &'static str {
        if self.body.starts_with('{') || self.body.starts_with('[') {
            "json"
        } else {
            "csv"
        }
    }

    pub fn emit(&self, dir: Option<&PathBuf>, plot: bool) -> Result<(), CliError> {
        let Some(dir) = dir else {
            print!("{}", self.body);
            return Ok(());
        };
        fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("output-dir {}: {e}", dir.display())))?;
        let path = dir.join(format!("{}.{}", self.name, self.extension()));
        fs::write(&path, &self.body).map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))?;
        if plot {
            for (name, svg) in &self.plots {
                let path = dir.join(format!("{name}.svg"));
                fs::write(&path, svg).map_err(|e| CliError::Failed(format!("{}: {e}", path.display())))?;
            }
        }
        Ok(())
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Failed(format!("json output: {e}")))
}
