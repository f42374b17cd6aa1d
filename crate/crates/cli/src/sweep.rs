use std::path::Path;

use dsaudit::sweep::{family_frame, PointOutcome, SweepPoint};
use dsaudit::{parse_rational, sweep, Family, FamilySpec, XbarSlices};
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::output::{self, Format, Table};
use crate::{Options, Outcome};

const COLUMNS: [&str; 11] =
    ["family", "x", "xbar", "y", "kappa", "element", "ds_lo", "ds_hi", "p_lo", "p_hi", "verdict"];

fn slices(family: Family, list: Option<&str>) -> Result<XbarSlices, Failure> {
    let Some(list) = list else { return Ok(XbarSlices::Default) };
    if family == Family::PartitionXY {
        return Err(Failure::input("--xbar-slices applies only to quasi-xxbar-y"));
    }
    match list.trim() {
        "all" | "grid" => Ok(XbarSlices::Full),
        items => items
            .split(',')
            .map(|s| parse_rational(s.trim()).map_err(Failure::from))
            .collect::<Result<Vec<_>, _>>()
            .map(XbarSlices::List),
    }
}

fn xbar(spec: &FamilySpec) -> String {
    spec.xbar.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn point_label(spec: &FamilySpec) -> String {
    match &spec.xbar {
        Some(xbar) => format!("({},{},{})", spec.x, xbar, spec.y),
        None => format!("({},{})", spec.x, spec.y),
    }
}

/// One row per audited element; a totally conflicting point gets one row
/// per singleton with the interval cells left empty.
fn rows(point: &SweepPoint, table: &mut Table) {
    let spec = &point.spec;
    let head = [spec.family.name().to_string(), spec.x.to_string(), xbar(spec), spec.y.to_string(), point.kappa.to_string()];
    match &point.outcome {
        PointOutcome::Audited(report) => {
            for e in &report.elements {
                let (p_lo, p_hi) = if e.prob.feasible {
                    (e.prob.lower.to_string(), e.prob.upper.to_string())
                } else {
                    (String::new(), String::new())
                };
                let tail = [
                    report.frame.render(e.subset),
                    e.ds.belief.to_string(),
                    e.ds.plausibility.to_string(),
                    p_lo,
                    p_hi,
                    e.verdict.to_string(),
                ];
                table.row(head.iter().cloned().chain(tail));
            }
        }
        PointOutcome::TotalConflict => {
            let f = family_frame();
            for s in f.singletons() {
                let tail = [f.render(s), String::new(), String::new(), String::new(), String::new(), "TotalConflict".into()];
                table.row(head.iter().cloned().chain(tail));
            }
        }
    }
}

fn point_json(point: &SweepPoint) -> Value {
    let elements = match &point.outcome {
        PointOutcome::Audited(report) => report
            .elements
            .iter()
            .map(|e| {
                json!({
                    "element": report.frame.render(e.subset),
                    "ds": [e.ds.belief.to_string(), e.ds.plausibility.to_string()],
                    "prob": if e.prob.feasible {
                        json!([e.prob.lower.to_string(), e.prob.upper.to_string()])
                    } else {
                        Value::Null
                    },
                    "verdict": e.verdict.to_string(),
                })
            })
            .collect(),
        PointOutcome::TotalConflict => Vec::new(),
    };
    json!({
        "x": point.spec.x.to_string(),
        "xbar": point.spec.xbar.as_ref().map(ToString::to_string),
        "y": point.spec.y.to_string(),
        "kappa": point.kappa.to_string(),
        "total_conflict": matches!(point.outcome, PointOutcome::TotalConflict),
        "elements": elements,
    })
}

pub fn run(opts: &Options, family: Family, output: Option<&Path>, format: Format) -> Result<Outcome, Failure> {
    let slices = slices(family, opts.xbar_slices.as_deref())?;
    let result = sweep(family, opts.grid, &slices)?;
    let consistent: Vec<String> = result.summary.iter().map(point_label).collect();
    let coordinates = if family == Family::PartitionXY { "(x,y)" } else { "(x,xbar,y)" };

    let mut table = Table::new(COLUMNS);
    for p in &result.points {
        rows(p, &mut table);
    }
    let notes = [
        ("points", result.points.len().to_string()),
        (&*format!("consistent points {coordinates}"), consistent.join(" ")),
    ];
    let text = match format {
        Format::Json => output::json(&json!({
            "family": family.name(),
            "grid": result.density,
            "points": result.points.iter().map(point_json).collect::<Vec<_>>(),
            "consistent": consistent,
        })),
        Format::Csv => table.csv() + &output::notes(format, &notes),
        Format::Table => table.text() + "\n" + &output::notes(format, &notes),
    };
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(format!("wrote {} points to {}\n", result.points.len(), path.display())))
        }
        None => Ok(Outcome::ok(text)),
    }
}
