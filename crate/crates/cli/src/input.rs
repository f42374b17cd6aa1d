use std::io::Read;
use std::path::Path;

use dsaudit::{BodyOfEvidence, DocumentError, Evidence, EvidenceDocument, FocalSet, Frame};

use crate::failure::Failure;
use crate::Options;

/// Reads and validates the `--input` file.
pub fn load(opts: &Options) -> Result<Evidence, Failure> {
    let path = opts
        .input
        .as_deref()
        .ok_or_else(|| Failure::input("this command needs --input FILE"))?;
    let (name, text) = read(path)?;
    EvidenceDocument::parse(&text).map_err(|e| Failure::input(describe(&name, &e)))
}

fn read(path: &Path) -> Result<(String, String), Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::input(format!("<stdin>: {e}")))?;
        return Ok(("<stdin>".into(), text));
    }
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{name}: {e}")))?;
    Ok((name, text))
}

/// `file:line:column: message`, with as much location as is known.
fn describe(file: &str, e: &DocumentError) -> String {
    match e {
        DocumentError::Syntax { line, column, message } => format!("{file}:{line}:{column}: {message}"),
        DocumentError::Body { name, line: Some(line), source } => {
            format!("{file}:{line}: body `{name}`: {source}")
        }
        other => format!("{file}: {other}"),
    }
}

/// The named bodies in order, or every body (sorted by name) if none are named.
pub fn select(evidence: &Evidence, names: &[String]) -> Result<Vec<(String, BodyOfEvidence)>, Failure> {
    if names.is_empty() {
        return Ok(evidence.bodies.iter().map(|(n, b)| (n.clone(), b.clone())).collect());
    }
    names
        .iter()
        .map(|n| {
            evidence
                .body(n)
                .map(|b| (n.clone(), b.clone()))
                .map_err(|e| Failure::input(e.to_string()))
        })
        .collect()
}

/// Parses `a,b`, `{a,b}`, `{}`, `∅`, `omega` or `Ω`.
pub fn parse_subset(frame: &Frame, text: &str) -> Result<FocalSet, Failure> {
    let t = text.trim();
    if t == "Ω" || t.eq_ignore_ascii_case("omega") {
        return Ok(frame.omega());
    }
    if t == "∅" {
        return Ok(frame.empty());
    }
    let inner = t.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(t);
    let labels: Vec<&str> = inner.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    frame.subset(&labels).map_err(|e| Failure::input(format!("subset `{text}`: {e}")))
}
