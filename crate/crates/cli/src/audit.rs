use dsaudit::{audit, BodyOfEvidence, ElementAudit};
use serde_json::{json, Value};

use crate::combine::members;
use crate::failure::{verdict_code, Failure};
use crate::input;
use crate::output::{self, Format, Table};
use crate::{Options, Outcome};

fn prob_cells(e: &ElementAudit) -> [String; 2] {
    if e.prob.feasible {
        [e.prob.lower.to_string(), e.prob.upper.to_string()]
    } else {
        [String::new(), String::new()]
    }
}

fn element_json(frame: &dsaudit::Frame, e: &ElementAudit) -> Value {
    let prob = if e.prob.feasible {
        json!([e.prob.lower.to_string(), e.prob.upper.to_string()])
    } else {
        Value::Null
    };
    json!({
        "set": members(frame, e.subset),
        "ds": [e.ds.belief.to_string(), e.ds.plausibility.to_string()],
        "prob": prob,
        "verdict": e.verdict.to_string(),
    })
}

pub fn run(opts: &Options, names: &[String], format: Format) -> Result<Outcome, Failure> {
    let evidence = input::load(opts)?;
    let chosen = input::select(&evidence, names)?;
    let bodies: Vec<BodyOfEvidence> = chosen.iter().map(|(_, b)| b.clone()).collect();
    let report = audit(&bodies)?;
    let f = &report.frame;
    let worst = report.worst();
    let label = chosen.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ");
    let feasible = if report.feasible { "feasible" } else { "infeasible" };

    let text = match format {
        Format::Json => output::json(&json!({
            "frame": f.labels(),
            "bodies": chosen.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            "kappa": report.kappa().to_string(),
            "combined_structure": report.combined_class.tag.to_string(),
            "constraints": feasible,
            "elements": report.elements.iter().map(|e| element_json(f, e)).collect::<Vec<_>>(),
            "worst": worst.to_string(),
        })),
        Format::Csv => {
            let mut t = Table::new(["element", "ds_lo", "ds_hi", "p_lo", "p_hi", "verdict"]);
            for e in &report.elements {
                let [lo, hi] = prob_cells(e);
                t.row([
                    f.render(e.subset),
                    e.ds.belief.to_string(),
                    e.ds.plausibility.to_string(),
                    lo,
                    hi,
                    e.verdict.to_string(),
                ]);
            }
            t.csv() + &output::notes(format, &[("bodies", label), ("kappa", report.kappa().to_string())])
        }
        Format::Table => {
            let mut t = Table::new(["element", "[bel, pl]", "[P min, P max]", "verdict"]);
            for e in &report.elements {
                let prob = if e.prob.feasible {
                    format!("[{}, {}]", e.prob.lower, e.prob.upper)
                } else {
                    "none".to_string()
                };
                t.row([
                    f.render(e.subset),
                    format!("[{}, {}]", e.ds.belief, e.ds.plausibility),
                    prob,
                    e.verdict.to_string(),
                ]);
            }
            let notes = [
                ("bodies", label),
                ("kappa", report.kappa().to_string()),
                ("combined structure", report.combined_class.tag.to_string()),
                ("probability constraints", feasible.to_string()),
                ("worst verdict", worst.to_string()),
            ];
            t.text() + "\n" + &output::notes(format, &notes)
        }
    };
    Ok(Outcome { text, code: verdict_code(worst) })
}
