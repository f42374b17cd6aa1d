use dsaudit::reproduction::run_all;
use serde_json::json;

use crate::failure::MISMATCH;
use crate::output::{self, Format, Table};
use crate::Outcome;

pub fn run(format: Format) -> Outcome {
    let checks = run_all();
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let status = |passed: bool| if passed { "PASS" } else { "FAIL" };
    let text = match format {
        Format::Json => output::json(&json!({
            "checks": checks.iter().map(|c| json!({
                "name": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "passed": c.passed(),
            })).collect::<Vec<_>>(),
            "failed": failed,
        })),
        Format::Csv => {
            let mut t = Table::new(["check", "expected", "actual", "status"]);
            for c in &checks {
                t.row([c.name, &c.expected, &c.actual, status(c.passed())]);
            }
            t.csv()
        }
        Format::Table => {
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!("{} {}\n", status(c.passed()), c.name));
                text.push_str(&format!("    expected: {}\n", c.expected));
                text.push_str(&format!("    actual:   {}\n", c.actual));
            }
            text.push_str(&format!("\n{} of {} checks passed\n", checks.len() - failed, checks.len()));
            text
        }
    };
    Outcome { text, code: if failed == 0 { 0 } else { MISMATCH } }
}
