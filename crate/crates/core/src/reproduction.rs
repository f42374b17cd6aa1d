//! Built-in reference fixtures with their exact expected outcomes.
//!
//! Each [`FixtureCheck`] renders an expected and an actual value as exact
//! text; a check passes only if the two strings are identical.

use crate::consistency::{audit, ConsistencyReport};
use crate::document::{EvidenceDocument, Evidence};
use crate::frame::Frame;
use crate::sweep::{self, Family, FamilySpec, XbarSlices};
use crate::rational::ratio;

pub const PARTITION_COUNTEREXAMPLE: &str = include_str!("../fixtures/partition-counterexample.json");
pub const QUASI_PARTITION_COUNTEREXAMPLE: &str =
    include_str!("../fixtures/quasi-partition-counterexample.json");
pub const ZADEH: &str = include_str!("../fixtures/zadeh.json");

/// The embedded fixture files, by file name.
pub const FIXTURES: [(&str, &str); 3] = [
    ("partition-counterexample.json", PARTITION_COUNTEREXAMPLE),
    ("quasi-partition-counterexample.json", QUASI_PARTITION_COUNTEREXAMPLE),
    ("zadeh.json", ZADEH),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn check(name: &'static str, expected: impl Into<String>, actual: impl Into<String>) -> FixtureCheck {
    FixtureCheck { name, expected: expected.into(), actual: actual.into() }
}

fn load(text: &str) -> Evidence {
    EvidenceDocument::parse(text).expect("embedded fixture is valid")
}

fn audit_fixture(text: &str) -> Result<ConsistencyReport, String> {
    let ev = load(text);
    let bodies = ev.select(&["A", "B"]).map_err(|e| e.to_string())?;
    audit(&bodies).map_err(|e| e.to_string())
}

fn masses(report: &ConsistencyReport) -> String {
    let f: &Frame = &report.frame;
    report
        .combination
        .combined
        .canonical()
        .iter()
        .map(|(s, m)| format!("{}={}", f.render(*s), m))
        .collect::<Vec<_>>()
        .join(" ")
}

fn per_singleton(report: &ConsistencyReport, render: impl Fn(&crate::consistency::ElementAudit) -> String) -> String {
    report
        .frame
        .singletons()
        .map(|s| match report.element(s) {
            Some(e) => format!("{}:{}", report.frame.render(s), render(e)),
            None => format!("{}:missing", report.frame.render(s)),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn element(report: &ConsistencyReport, labels: &[&str], render: impl Fn(&crate::consistency::ElementAudit) -> String) -> String {
    let s = report.frame.subset(labels).expect("label in frame");
    report.element(s).map(render).unwrap_or_else(|| "missing".into())
}

/// Runs every reference fixture.
pub fn run_all() -> Vec<FixtureCheck> {
    let mut out = Vec::new();

    match audit_fixture(PARTITION_COUNTEREXAMPLE) {
        Ok(r) => {
            out.push(check("partition: combined masses", "{a}=1/7 {b}=3/7 {c}=3/7", masses(&r)));
            out.push(check("partition: kappa", "1/8", r.kappa().to_string()));
            out.push(check(
                "partition: probability points",
                "{a}:[1/4,1/4] {b}:[1/4,1/4] {c}:[1/2,1/2]",
                per_singleton(&r, |e| format!("[{},{}]", e.prob.lower, e.prob.upper)),
            ));
            out.push(check(
                "partition: verdicts",
                "{a}:Violation {b}:Violation {c}:Violation",
                per_singleton(&r, |e| e.verdict.to_string()),
            ));
        }
        Err(e) => out.push(check("partition: audit", "ok", e)),
    }

    match audit_fixture(QUASI_PARTITION_COUNTEREXAMPLE) {
        Ok(r) => {
            out.push(check(
                "quasi-partition: combined masses",
                "{a}=1/7 {b}=2/7 {a,b}=1/7 {c}=3/7",
                masses(&r),
            ));
            out.push(check(
                "quasi-partition: [bel, pl] of {b}",
                "[2/7,3/7]",
                element(&r, &["b"], |e| format!("[{},{}]", e.ds.belief, e.ds.plausibility)),
            ));
            out.push(check(
                "quasi-partition: probability interval of {b}",
                "[0,1/4]",
                element(&r, &["b"], |e| format!("[{},{}]", e.prob.lower, e.prob.upper)),
            ));
            out.push(check(
                "quasi-partition: intervals of {b} do not overlap",
                "DisjointViolation",
                element(&r, &["b"], |e| e.verdict.to_string()),
            ));
        }
        Err(e) => out.push(check("quasi-partition: audit", "ok", e)),
    }

    match audit_fixture(ZADEH) {
        Ok(r) => {
            out.push(check("zadeh: combined masses", "{c}=1", masses(&r)));
            out.push(check("zadeh: kappa", "9999/10000", r.kappa().to_string()));
            out.push(check(
                "zadeh: verdict on {c}",
                "Infeasible",
                element(&r, &["c"], |e| e.verdict.to_string()),
            ));
        }
        Err(e) => out.push(check("zadeh: audit", "ok", e)),
    }

    let quasi = sweep::symbolic_check(&FamilySpec::quasi(ratio(1, 4), ratio(1, 2), ratio(1, 2)));
    out.push(check(
        "quasi family: closed form matches combination",
        "ok",
        quasi.map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string()),
    ));

    match sweep::sweep(Family::PartitionXY, 4, &XbarSlices::Default) {
        Ok(result) => {
            let points: Vec<String> = result.summary.iter().map(|s| format!("({},{})", s.x, s.y)).collect();
            out.push(check(
                "partition family: exact matches iff x=0 or y=1 (N=4)",
                "(0,0) (0,1/4) (0,1/2) (0,3/4) (0,1) (1/4,1) (1/2,1) (3/4,1) (1,1)",
                points.join(" "),
            ));
        }
        Err(e) => out.push(check("partition family: sweep", "ok", e.to_string())),
    }

    out
}
