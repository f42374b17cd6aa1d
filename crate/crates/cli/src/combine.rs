use dsaudit::{combine_many, BodyOfEvidence, CombinationResult, FocalSet, Frame, Rational};
use serde_json::{json, Value};

use crate::failure::Failure;
use crate::input;
use crate::output::{self, Format, Table};
use crate::{Options, Outcome};

/// An empty intersection met during one fold step.
struct Conflict {
    step: usize,
    left: FocalSet,
    right: FocalSet,
    product: Rational,
}

fn conflicts(bodies: &[BodyOfEvidence], result: &CombinationResult) -> Result<Vec<Conflict>, Failure> {
    let mut out = Vec::new();
    let mut left = bodies[0].clone();
    for (k, step) in result.steps.iter().enumerate() {
        let right = &bodies[k + 1];
        for &(i, j) in &step.conflict_pairs {
            let (ls, lm) = &left.focal()[i];
            let (rs, rm) = &right.focal()[j];
            out.push(Conflict { step: k + 1, left: *ls, right: *rs, product: lm * rm });
        }
        left = combine_many(&bodies[..k + 2])?.combined;
    }
    Ok(out)
}

pub fn members(frame: &Frame, set: FocalSet) -> Value {
    json!(frame.members(set))
}

pub fn run(opts: &Options, names: &[String], format: Format) -> Result<Outcome, Failure> {
    let evidence = input::load(opts)?;
    let chosen = input::select(&evidence, names)?;
    let bodies: Vec<BodyOfEvidence> = chosen.iter().map(|(_, b)| b.clone()).collect();
    let result = combine_many(&bodies)?;
    let f = &evidence.frame;
    let conflicts = conflicts(&bodies, &result)?;
    let label = chosen.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ");

    let text = match format {
        Format::Json => output::json(&json!({
            "frame": f.labels(),
            "bodies": chosen.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            "combined": result.combined.focal().iter().map(|(s, m)| json!({
                "set": members(f, *s),
                "mass": m.to_string(),
            })).collect::<Vec<_>>(),
            "kappa": result.kappa.to_string(),
            "steps": result.steps.iter().map(|s| s.kappa.to_string()).collect::<Vec<_>>(),
            "conflicts": conflicts.iter().map(|c| json!({
                "step": c.step,
                "left": members(f, c.left),
                "right": members(f, c.right),
                "product": c.product.to_string(),
            })).collect::<Vec<_>>(),
        })),
        Format::Table | Format::Csv => {
            let mut masses = Table::new(["set", "mass"]);
            for (s, m) in result.combined.focal() {
                masses.row([f.render(*s), m.to_string()]);
            }
            let mut notes = vec![("bodies", label), ("kappa", result.kappa.to_string())];
            if format == Format::Csv {
                for c in &conflicts {
                    let v = format!("step {} {} x {} = {}", c.step, f.render(c.left), f.render(c.right), c.product);
                    notes.push(("conflict", v));
                }
                masses.csv() + &output::notes(format, &notes)
            } else {
                let mut text = masses.text() + "\n" + &output::notes(format, &notes);
                if conflicts.is_empty() {
                    text.push_str("conflicting pairs: none\n");
                } else {
                    let mut t = Table::new(["step", "left", "right", "product"]);
                    for c in &conflicts {
                        t.row([c.step.to_string(), f.render(c.left), f.render(c.right), c.product.to_string()]);
                    }
                    text.push('\n');
                    text.push_str(&t.text());
                }
                text
            }
        }
    };
    Ok(Outcome::ok(text))
}
