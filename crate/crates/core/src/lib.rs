//! Exact Dempster-Shafer evidence combination, audited against probability.
//!
//! Bodies of evidence are combined with Dempster's rule, and the combined
//! belief/plausibility intervals are compared with the exact probability
//! intervals that the *input* bodies imply when their masses are read as
//! information about a single probability distribution. All arithmetic is on
//! exact rationals.
//!
//! ```
//! use dsaudit::{audit, ratio, BodyOfEvidence, Frame, Verdict};
//!
//! let f = Frame::new(&["a", "b", "c"])?;
//! let a = BodyOfEvidence::new(&f, [
//!     (f.subset(&["a"])?, ratio(1, 4)),
//!     (f.subset(&["b", "c"])?, ratio(3, 4)),
//! ])?;
//! let b = BodyOfEvidence::new(&f, [
//!     (f.subset(&["a", "b"])?, ratio(1, 2)),
//!     (f.subset(&["c"])?, ratio(1, 2)),
//! ])?;
//!
//! let report = audit(&[a, b])?;
//! assert_eq!(report.kappa(), &ratio(1, 8));
//! let on_a = report.element(f.subset(&["a"])?).unwrap();
//! assert_eq!(on_a.ds.belief, ratio(1, 7));
//! assert_eq!(on_a.prob.lower, ratio(1, 4));
//! assert_eq!(on_a.verdict, Verdict::Violation);
//! # Ok::<(), dsaudit::Error>(())
//! ```

pub mod combination;
pub mod consistency;
pub mod document;
mod error;
pub mod evidence;
pub mod frame;
pub mod lp;
pub mod measures;
pub mod rational;
pub mod reproduction;
pub mod sweep;

pub use combination::{combine, combine_many, conflict, CombinationResult, CombinationStep};
pub use consistency::{
    audit, build_constraints, probability_bounds, ConsistencyReport, DsInterval, ElementAudit,
    ProbabilityConstraintSystem, ProbabilityInterval, Verdict,
};
pub use document::{DocumentError, Evidence, EvidenceDocument};
pub use error::{Error, Result};
pub use evidence::{classify, BodyOfEvidence, StructureClass, StructureTag};
pub use frame::{FocalSet, Frame};
pub use measures::{belief, mass_from_belief, measure_table, plausibility, MeasureKind, MeasureTable};
pub use rational::{int, parse_rational, ratio, Rational};
pub use sweep::{sweep, symbolic_check, zadeh_fixture, Family, FamilySpec, SweepResult, XbarSlices};
