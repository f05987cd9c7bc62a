use std::fs;
use std::path::Path;

use maxlab::covering::{
    covering_selection, family_from_json, family_to_json, sunrise_check, unimodal_covering, verify_covering,
};
use maxlab::lab::report::{svg_plot, ReportRow};
use maxlab::lab::{
    constants, holder_experiment, lerner, reproduce_discrete, reproduce_one_atom, search_min_ratio, SearchConfig,
};
use maxlab::maximal::{evaluate_on_mesh, MaximalKind};
use maxlab::measure::json::{measure_from_json, step_from_json, step_to_json};
use maxlab::measure::rational::{format_rational, format_sig, parse_rational, to_f64, Rational};
use maxlab::measure::{Measure, StepFunction};
use maxlab::norms::{lp_norm_step, maximal_norm, ratio};
use serde::Serialize;

use super::args::{Cli, Command, Example, Format, Inputs};
use super::output::{CliError, Output};

const RESIDUAL_TOL: f64 = 1e-9;

fn read(path: &Path, field: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{field}: cannot read {}: {e}", path.display())))
}

fn load_measure(source: &str) -> Result<Measure, CliError> {
    if source.eq_ignore_ascii_case("lebesgue") {
        return Ok(Measure::lebesgue());
    }
    let text = read(Path::new(source), "measure")?;
    measure_from_json(&text).map_err(|e| CliError::Input(format!("measure: {e}")))
}

fn load_inputs(inputs: &Inputs) -> Result<(Measure, StepFunction), CliError> {
    let mu = load_measure(&inputs.measure)?;
    let text = read(&inputs.function, "function")?;
    let f = step_from_json(&text).map_err(|e| CliError::Input(format!("function: {e}")))?;
    Ok((mu, f))
}

fn mesh_points(
    mesh: &Option<String>,
    from: &Option<Rational>,
    to: &Option<Rational>,
    steps: usize,
) -> Result<Vec<Rational>, CliError> {
    if let Some(list) = mesh {
        return list
            .split(',')
            .enumerate()
            .map(|(i, s)| parse_rational(s).map_err(|m| CliError::Input(format!("mesh[{i}]: {m}"))))
            .collect();
    }
    let (Some(a), Some(b)) = (from, to) else {
        return Err(CliError::Input("eval needs --mesh or both --from and --to".into()));
    };
    if steps == 0 || a >= b {
        return Err(CliError::Input("--from must be below --to and --steps positive".into()));
    }
    let h = (b - a) / Rational::from_integer(steps.into());
    Ok((0..=steps).map(|i| a + &h * Rational::from_integer(i.into())).collect())
}

#[derive(Serialize)]
struct EvalRow {
    x: String,
    value: String,
    value_exact: String,
    witness: String,
}

#[derive(Serialize)]
struct NormRow {
    quantity: String,
    p: String,
    value: String,
    error_bound: String,
    pth_power: String,
    pth_power_error: String,
    pieces: usize,
}

#[derive(Serialize)]
struct RatioRow {
    p: String,
    ratio: String,
    error_bound: String,
    maximal_norm: String,
    function_norm: String,
    floor: String,
    margin: String,
}

#[derive(Serialize)]
struct SunriseRow {
    t: String,
    lhs: String,
    rhs: String,
    residual: String,
    lhs_exact: String,
    rhs_exact: String,
    level_set: String,
}

#[derive(Serialize)]
struct SearchDocument<'a> {
    p: f64,
    seed: u64,
    best_ratio: String,
    error_bound: String,
    floor: String,
    evaluations: usize,
    history: &'a [(usize, f64)],
    best_function: serde_json::Value,
}

fn profile_plot(f: &StepFunction, mesh: &[Rational], values: &[f64]) -> String {
    let xs: Vec<f64> = mesh.iter().map(to_f64).collect();
    let fx: Vec<(f64, f64)> = mesh.iter().zip(&xs).map(|(x, xf)| (*xf, to_f64(&f.value_at(x)))).collect();
    let mx: Vec<(f64, f64)> = xs.iter().copied().zip(values.iter().copied()).collect();
    svg_plot("maximal function and f", &[("Mf", mx), ("f", fx)])
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Eval { inputs, kind, mesh, from, to, steps } => {
            let (mu, f) = load_inputs(inputs)?;
            let points = mesh_points(mesh, from, to, *steps)?;
            let evaluated = evaluate_on_mesh(&mu, &f, &points, MaximalKind::from(*kind))?;
            let floats: Vec<f64> = evaluated.values.iter().map(|v| to_f64(&v.value)).collect();
            let rows: Vec<EvalRow> = evaluated
                .mesh
                .iter()
                .zip(&evaluated.values)
                .zip(&floats)
                .map(|((x, v), vf)| EvalRow {
                    x: format_rational(x),
                    value: format_sig(*vf),
                    value_exact: format_rational(&v.value),
                    witness: v.witness.as_ref().map_or_else(|| "supremum".to_string(), |w| w.to_string()),
                })
                .collect();
            let mut out = Output::table("eval", &rows, format)?;
            out.plots.push(("eval_profile".into(), profile_plot(&f, &evaluated.mesh, &floats)));
            Ok(out)
        }
        Command::Norm { inputs, p, tol, maximal } => {
            let (mu, f) = load_inputs(inputs)?;
            let (quantity, n) = match maximal {
                Some(k) => {
                    let kind = MaximalKind::from(*k);
                    (format!("maximal_{}", kind.name()), maximal_norm(&mu, &f, *p, kind, *tol)?)
                }
                None => ("function".to_string(), lp_norm_step(&f, &mu, *p)?),
            };
            let row = NormRow {
                quantity,
                p: format_sig(*p),
                value: format_sig(n.value),
                error_bound: format_sig(n.error_bound),
                pth_power: format_sig(n.pth_power),
                pth_power_error: format_sig(n.pth_power_error),
                pieces: n.pieces_used,
            };
            Output::table("norm", &[row], format)
        }
        Command::Ratio { inputs, p, tol } => {
            let (mu, f) = load_inputs(inputs)?;
            let r = ratio(&mu, &f, *p, *tol)?;
            let floor = lerner(*p);
            let row = RatioRow {
                p: format_sig(*p),
                ratio: format_sig(r.value),
                error_bound: format_sig(r.error_bound),
                maximal_norm: format_sig(r.maximal_norm.value),
                function_norm: format_sig(r.function_norm.value),
                floor: format_sig(floor),
                margin: format_sig(r.value - floor),
            };
            Output::table("ratio", &[row], format)
        }
        Command::SunriseCheck { inputs, t, tol } => {
            let (mu, f) = load_inputs(inputs)?;
            let report = sunrise_check(&mu, &f, t, *tol)?;
            let mut out = match format {
                Format::Json => Output::document("sunrise", &report)?,
                Format::Csv => {
                    let row = SunriseRow {
                        t: report.t.clone(),
                        lhs: format_sig(report.lhs),
                        rhs: format_sig(report.rhs),
                        residual: format_sig(report.residual),
                        lhs_exact: report.lhs_exact.clone(),
                        rhs_exact: report.rhs_exact.clone(),
                        level_set: report.level_set.join(" "),
                    };
                    Output::table("sunrise", &[row], format)?
                }
            };
            out.passed = report.residual <= RESIDUAL_TOL;
            Ok(out)
        }
        Command::Cover { inputs, t, unimodal, verify, overlap } => {
            let (mu, f) = load_inputs(inputs)?;
            let family = if *unimodal { unimodal_covering(&mu, &f, t)? } else { covering_selection(&mu, &f, t)? };
            let mut out =
                Output { name: "cover".into(), body: family_to_json(&family) + "\n", plots: vec![], passed: true };
            if *verify {
                let report = verify_covering(&family, &mu, &f, t, *overlap);
                out.passed = report.passed();
                eprintln!("{}", serde_json::to_string(&report).unwrap_or_default());
            }
            Ok(out)
        }
        Command::Verify { inputs, family, overlap } => {
            let (mu, f) = load_inputs(inputs)?;
            let family =
                family_from_json(&read(family, "family")?).map_err(|e| CliError::Input(format!("family: {e}")))?;
            let t = family.level.clone();
            let report = verify_covering(&family, &mu, &f, &t, *overlap);
            let mut out = Output::document("verify", &report)?;
            out.passed = report.passed();
            Ok(out)
        }
        Command::SearchMinRatio { measure, p, pieces, budget, restarts } => {
            let mu = load_measure(measure)?;
            let mut config = SearchConfig::new(*p, *pieces, *budget, cli.seed);
            config.restarts = *restarts;
            let result = search_min_ratio(&mu, &config)?;
            let floor = lerner(*p);
            let mut out = match format {
                Format::Csv => Output::table(
                    "search_min_ratio",
                    &[ReportRow::new("search_min_ratio", *p, cli.seed, result.best_ratio, floor)],
                    format,
                )?,
                Format::Json => {
                    let best_function = serde_json::from_str(&step_to_json(&result.best_f))
                        .map_err(|e| CliError::Failed(e.to_string()))?;
                    let doc = SearchDocument {
                        p: *p,
                        seed: cli.seed,
                        best_ratio: format_sig(result.best_ratio),
                        error_bound: format_sig(result.error_bound),
                        floor: format_sig(floor),
                        evaluations: result.evaluations,
                        history: &result.history,
                        best_function,
                    };
                    Output::document("search_min_ratio", &doc)?
                }
            };
            let history: Vec<(f64, f64)> = result.history.iter().map(|(i, v)| (*i as f64, *v)).collect();
            out.plots.push(("search_history".into(), svg_plot("best ratio by evaluation", &[("ratio", history)])));
            Ok(out)
        }
        Command::Reproduce { example } => reproduce(example, format),
        Command::Constants { p, overlap } => {
            let c = constants(*p, *overlap)?;
            let rows = [
                ReportRow::new("lerner", *p, overlap, c.lerner, c.lerner),
                ReportRow::new("besicovitch", *p, overlap, c.besicovitch, c.lerner),
            ];
            Output::table("constants", &rows, format)
        }
        Command::Holder { measure, p_list, r_list, pieces, budget } => {
            let mu = load_measure(measure)?;
            let rows = holder_experiment(&mu, p_list, r_list, *pieces, *budget, cli.seed)?;
            Output::table("holder", &rows, format)
        }
    }
}

fn reproduce(example: &Example, format: Format) -> Result<Output, CliError> {
    match example {
        Example::DiscreteAtoms { t, p, atoms } => {
            let r = reproduce_discrete(t, *p, *atoms)?;
            let row = ReportRow::new("discrete_atoms", *p, format_rational(t), r.ratio, r.closed_form.powf(1.0 / p));
            let mut out = Output::table("discrete_atoms", &[row], format)?;
            out.passed = r.margin <= 1e-9 + r.tail_bound + r.error_bound;
            Ok(out)
        }
        Example::OneAtom { t, p } => {
            let r = reproduce_one_atom(t, *p)?;
            let rows = [
                ReportRow::new("one_atom_closed_form", *p, format_rational(t), r.norm_power, r.closed_form),
                ReportRow::new("one_atom_upper_bound", *p, format_rational(t), r.norm_power, r.upper_bound),
            ];
            let mut out = Output::table("one_atom", &rows, format)?;
            out.passed = r.margin <= 1e-6 && r.norm_power <= r.upper_bound;
            Ok(out)
        }
    }
}
