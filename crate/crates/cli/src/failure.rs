use dsaudit::{Error, Verdict};

pub const MISMATCH: u8 = 1;
pub const INPUT: u8 = 2;
pub const TOTAL_CONFLICT: u8 = 3;
pub const INCONSISTENT: u8 = 4;
pub const INFEASIBLE: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: INPUT, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TotalConflict { .. } => TOTAL_CONFLICT,
            _ => INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Exit code for the worst verdict of an audit.
pub fn verdict_code(worst: Verdict) -> u8 {
    match worst {
        Verdict::ExactMatch | Verdict::Compatible => 0,
        Verdict::Violation | Verdict::DisjointViolation => INCONSISTENT,
        Verdict::Infeasible => INFEASIBLE,
    }
}
