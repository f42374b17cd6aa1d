use std::collections::BTreeSet;

use dsaudit::measures::mass_from_plausibility;
use dsaudit::{belief, combine_many, mass_from_belief, measure_table, plausibility, BodyOfEvidence, FocalSet, MeasureKind};
use serde_json::json;

use crate::combine::members;
use crate::failure::{Failure, MISMATCH};
use crate::input;
use crate::output::{self, Format, Table};
use crate::{Options, Outcome};

fn round_trip(body: &BodyOfEvidence) -> Result<(bool, bool), Failure> {
    let bel = measure_table(body, MeasureKind::Belief)?;
    let pl = measure_table(body, MeasureKind::Plausibility)?;
    Ok((&mass_from_belief(&bel)? == body, &mass_from_plausibility(&pl)? == body))
}

pub fn run(opts: &Options, names: &[String], subsets: &[String], format: Format) -> Result<Outcome, Failure> {
    let evidence = input::load(opts)?;
    let chosen = input::select(&evidence, names)?;
    let body = combine_many(chosen.iter().map(|(_, b)| b))?.combined;
    let f = &evidence.frame;

    let sets: Vec<FocalSet> = if opts.all {
        f.enumerate_subsets().collect()
    } else if !subsets.is_empty() {
        subsets.iter().map(|s| input::parse_subset(f, s)).collect::<Result<_, _>>()?
    } else {
        let mut default: BTreeSet<FocalSet> = f.singletons().collect();
        default.extend(body.focal().iter().map(|(s, _)| *s));
        default.into_iter().collect()
    };
    let rows = sets
        .iter()
        .map(|&s| Ok((s, body.mass(s), belief(&body, s)?, plausibility(&body, s)?)))
        .collect::<Result<Vec<_>, dsaudit::Error>>()?;
    let inverted = if opts.invert { Some(round_trip(&body)?) } else { None };
    let code = match inverted {
        Some((true, true)) | None => 0,
        Some(_) => MISMATCH,
    };
    let label = chosen.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ");
    let ok = |b: bool| if b { "ok" } else { "MISMATCH" }.to_string();

    let text = match format {
        Format::Json => {
            let mut v = json!({
                "frame": f.labels(),
                "bodies": chosen.iter().map(|(n, _)| n).collect::<Vec<_>>(),
                "subsets": rows.iter().map(|(s, m, b, p)| json!({
                    "set": members(f, *s),
                    "mass": m.to_string(),
                    "belief": b.to_string(),
                    "plausibility": p.to_string(),
                })).collect::<Vec<_>>(),
            });
            if let Some((b, p)) = inverted {
                v["round_trip"] = json!({ "from_belief": b, "from_plausibility": p });
            }
            output::json(&v)
        }
        Format::Table | Format::Csv => {
            let mut t = Table::new(["set", "mass", "bel", "pl"]);
            for (s, m, b, p) in &rows {
                t.row([f.render(*s), m.to_string(), b.to_string(), p.to_string()]);
            }
            let mut notes = vec![("bodies", label)];
            if let Some((b, p)) = inverted {
                notes.push(("masses from belief", ok(b)));
                notes.push(("masses from plausibility", ok(p)));
            }
            if format == Format::Csv {
                t.csv() + &output::notes(format, &notes)
            } else {
                t.text() + "\n" + &output::notes(format, &notes)
            }
        }
    };
    Ok(Outcome { text, code })
}
