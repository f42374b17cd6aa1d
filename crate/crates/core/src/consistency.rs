//! Probability intervals implied by evidence, and audits of combined bodies
//! against them.
//!
//! Each input body is read as partial information about one unknown
//! distribution `P` over the frame: for every subset `S`,
//! `bel(S) ≤ P(S) ≤ pl(S)`. Together with `P ≥ 0` and `Σ P = 1` this carves
//! out a polytope; the exact minimum and maximum of `P(S)` over it give the
//! probability interval for `S`. An audit combines the bodies with Dempster's
//! rule and compares each combined `[bel, pl]` with that interval.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::combination::{combine_many, CombinationResult};
use crate::error::{Error, Result};
use crate::evidence::{BodyOfEvidence, StructureClass, StructureTag};
use crate::frame::{FocalSet, Frame};
use crate::lp::{feasible_region, FeasibleRegion, LpOutcome, Relation, Row};
use crate::measures::{measure_table, MeasureKind};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    Lower,
    Upper,
    Equal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConstraintSource {
    /// Non-negativity and normalization of `P`.
    Simplex,
    /// Belief/plausibility bound from the body at this input index.
    Body(usize),
    User,
}

/// `Σ_{ω ∈ subset} P(ω)  (≥ | ≤ | =)  value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityConstraint {
    pub subset: FocalSet,
    pub kind: BoundKind,
    pub value: Rational,
    pub source: ConstraintSource,
}

#[derive(Clone, Debug)]
pub struct ProbabilityConstraintSystem {
    frame: Frame,
    constraints: Vec<ProbabilityConstraint>,
}

impl ProbabilityConstraintSystem {
    /// Only the simplex constraints: `P(ω) ≥ 0` and `P(Ω) = 1`.
    pub fn new(frame: &Frame) -> Self {
        let mut constraints: Vec<ProbabilityConstraint> = frame
            .singletons()
            .map(|s| ProbabilityConstraint {
                subset: s,
                kind: BoundKind::Lower,
                value: Rational::zero(),
                source: ConstraintSource::Simplex,
            })
            .collect();
        constraints.push(ProbabilityConstraint {
            subset: frame.omega(),
            kind: BoundKind::Equal,
            value: Rational::one(),
            source: ConstraintSource::Simplex,
        });
        ProbabilityConstraintSystem { frame: frame.clone(), constraints }
    }

    pub fn push(&mut self, constraint: ProbabilityConstraint) -> Result<()> {
        self.frame.check(constraint.subset)?;
        self.constraints.push(constraint);
        Ok(())
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn constraints(&self) -> &[ProbabilityConstraint] {
        &self.constraints
    }

    /// Constraints beyond the simplex ones.
    pub fn evidence_constraints(&self) -> impl Iterator<Item = &ProbabilityConstraint> {
        self.constraints.iter().filter(|c| c.source != ConstraintSource::Simplex)
    }

    /// LP rows, one per distinct subset and bound direction, keeping only the
    /// tightest bound of each.
    fn rows(&self) -> Vec<Row> {
        let mut lower: BTreeMap<u64, Rational> = BTreeMap::new();
        let mut upper: BTreeMap<u64, Rational> = BTreeMap::new();
        for c in &self.constraints {
            let bits = c.subset.bits();
            if matches!(c.kind, BoundKind::Lower | BoundKind::Equal) {
                let e = lower.entry(bits).or_insert_with(|| c.value.clone());
                if c.value > *e {
                    *e = c.value.clone();
                }
            }
            if matches!(c.kind, BoundKind::Upper | BoundKind::Equal) {
                let e = upper.entry(bits).or_insert_with(|| c.value.clone());
                if c.value < *e {
                    *e = c.value.clone();
                }
            }
        }
        let n = self.frame.size();
        let indicator = |bits: u64| -> Vec<Rational> {
            (0..n).map(|i| Rational::from_integer(((bits >> i & 1) as i32).into())).collect()
        };
        let mut rows = Vec::new();
        let mut subsets: Vec<u64> = lower.keys().chain(upper.keys()).copied().collect();
        subsets.sort_unstable();
        subsets.dedup();
        for bits in subsets {
            match (lower.get(&bits), upper.get(&bits)) {
                (Some(lo), Some(hi)) if lo == hi => rows.push(Row {
                    coefficients: indicator(bits),
                    relation: Relation::Eq,
                    rhs: lo.clone(),
                }),
                (lo, hi) => {
                    // P ≥ 0 is implicit in the LP, so lower bounds ≤ 0 add nothing.
                    if let Some(lo) = lo.filter(|v| **v > Rational::zero() || bits == 0) {
                        rows.push(Row {
                            coefficients: indicator(bits),
                            relation: Relation::Ge,
                            rhs: lo.clone(),
                        });
                    }
                    if let Some(hi) = hi {
                        rows.push(Row {
                            coefficients: indicator(bits),
                            relation: Relation::Le,
                            rhs: hi.clone(),
                        });
                    }
                }
            }
        }
        rows
    }

    /// Prepares the system for repeated bound queries.
    pub fn solver(&self) -> ProbabilitySolver<'_> {
        let region = feasible_region(self.frame.size(), &self.rows());
        ProbabilitySolver { system: self, region }
    }
}

/// `bel(S) ≤ P(S) ≤ pl(S)` for every non-trivial subset `S` of every body.
///
/// Bounds that say nothing (`bel = 0` and `pl = 1`) are omitted; bounds with
/// `bel = pl` become equalities.
pub fn build_constraints(bodies: &[BodyOfEvidence]) -> Result<ProbabilityConstraintSystem> {
    let frame = bodies.first().ok_or(Error::NoBodies)?.frame().clone();
    if bodies.iter().any(|b| *b.frame() != frame) {
        return Err(Error::FrameMismatch);
    }
    let mut system = ProbabilityConstraintSystem::new(&frame);
    let omega = frame.omega();
    for (k, body) in bodies.iter().enumerate() {
        let bel = measure_table(body, MeasureKind::Belief)?;
        let pl = bel.dual();
        for (s, b) in bel.iter() {
            if s.is_empty() || s == omega {
                continue;
            }
            let p = pl.get(s)?;
            let source = ConstraintSource::Body(k);
            if b == p {
                system.constraints.push(ProbabilityConstraint {
                    subset: s,
                    kind: BoundKind::Equal,
                    value: b.clone(),
                    source,
                });
                continue;
            }
            if !b.is_zero() {
                system.constraints.push(ProbabilityConstraint {
                    subset: s,
                    kind: BoundKind::Lower,
                    value: b.clone(),
                    source,
                });
            }
            if !p.is_one() {
                system.constraints.push(ProbabilityConstraint {
                    subset: s,
                    kind: BoundKind::Upper,
                    value: p.clone(),
                    source,
                });
            }
        }
    }
    Ok(system)
}

/// Exact range of `P(subset)` over the distributions allowed by a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbabilityInterval {
    pub subset: FocalSet,
    pub lower: Rational,
    pub upper: Rational,
    /// False when no distribution satisfies the system; the bounds are then
    /// meaningless (both zero).
    pub feasible: bool,
    /// Distributions attaining the bounds, indexed by frame element.
    pub lower_witness: Option<Vec<Rational>>,
    pub upper_witness: Option<Vec<Rational>>,
}

impl ProbabilityInterval {
    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }
}

pub struct ProbabilitySolver<'a> {
    system: &'a ProbabilityConstraintSystem,
    region: Option<FeasibleRegion>,
}

impl ProbabilitySolver<'_> {
    pub fn is_feasible(&self) -> bool {
        self.region.is_some()
    }

    pub fn bounds(&self, target: FocalSet) -> Result<ProbabilityInterval> {
        self.system.frame.check(target)?;
        let Some(region) = &self.region else {
            return Ok(ProbabilityInterval {
                subset: target,
                lower: Rational::zero(),
                upper: Rational::zero(),
                feasible: false,
                lower_witness: None,
                upper_witness: None,
            });
        };
        let objective: Vec<Rational> = (0..self.system.frame.size())
            .map(|i| Rational::from_integer((target.contains_index(i) as i32).into()))
            .collect();
        // The region lies inside the probability simplex, so it is bounded.
        let (LpOutcome::Optimal { value: lower, point: lw }, LpOutcome::Optimal { value: upper, point: uw }) =
            (region.minimize(&objective), region.maximize(&objective))
        else {
            unreachable!("probability polytope is bounded");
        };
        Ok(ProbabilityInterval {
            subset: target,
            lower,
            upper,
            feasible: true,
            lower_witness: Some(lw),
            upper_witness: Some(uw),
        })
    }
}

pub fn probability_bounds(
    system: &ProbabilityConstraintSystem,
    target: FocalSet,
) -> Result<ProbabilityInterval> {
    system.solver().bounds(target)
}

/// The `[bel, pl]` interval of a combined body at one subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsInterval {
    pub belief: Rational,
    pub plausibility: Rational,
}

impl DsInterval {
    pub fn is_point(&self) -> bool {
        self.belief == self.plausibility
    }
}

/// Relation between a combined `[bel, pl]` and the probability interval,
/// ordered from benign to severe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    /// Both intervals are the same single point.
    ExactMatch,
    /// The intervals overlap and no point equality is demanded.
    Compatible,
    /// Point values that should coincide do not.
    Violation,
    /// The intervals do not overlap at all.
    DisjointViolation,
    /// The input bodies admit no probability distribution.
    Infeasible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::ExactMatch => "ExactMatch",
            Verdict::Compatible => "Compatible",
            Verdict::Violation => "Violation",
            Verdict::DisjointViolation => "DisjointViolation",
            Verdict::Infeasible => "Infeasible",
        };
        f.write_str(s)
    }
}

/// Assigns a verdict.
///
/// Two unequal points are a `Violation` even though, as intervals, they are
/// disjoint. When the combined body is a partition, its point-valued sets
/// (the blocks) must have mass equal to probability, so overlap short of a
/// point match is a `Violation` there as well.
pub fn verdict(ds: &DsInterval, prob: &ProbabilityInterval, combined: StructureTag) -> Verdict {
    if !prob.feasible {
        return Verdict::Infeasible;
    }
    if ds.is_point() && prob.is_point() {
        return if ds.belief == prob.lower { Verdict::ExactMatch } else { Verdict::Violation };
    }
    if ds.plausibility < prob.lower || prob.upper < ds.belief {
        return Verdict::DisjointViolation;
    }
    if combined == StructureTag::Partition && ds.is_point() {
        return Verdict::Violation;
    }
    Verdict::Compatible
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementAudit {
    pub subset: FocalSet,
    pub ds: DsInterval,
    pub prob: ProbabilityInterval,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub frame: Frame,
    pub combination: CombinationResult,
    pub combined_class: StructureClass,
    pub feasible: bool,
    /// Every singleton and every combined focal set, ascending by mask.
    pub elements: Vec<ElementAudit>,
}

impl ConsistencyReport {
    pub fn kappa(&self) -> &Rational {
        &self.combination.kappa
    }

    pub fn element(&self, subset: FocalSet) -> Option<&ElementAudit> {
        self.elements.iter().find(|e| e.subset == subset)
    }

    /// The most severe verdict in the report.
    pub fn worst(&self) -> Verdict {
        self.elements.iter().map(|e| e.verdict).max().unwrap_or(Verdict::ExactMatch)
    }

    pub fn all_exact(&self) -> bool {
        self.elements.iter().all(|e| e.verdict == Verdict::ExactMatch)
    }
}

/// Combines `bodies` and compares the result with the probability intervals
/// derived from the original bodies.
pub fn audit(bodies: &[BodyOfEvidence]) -> Result<ConsistencyReport> {
    if bodies.len() < 2 {
        return Err(Error::TooFewBodies(bodies.len()));
    }
    let combination = combine_many(bodies)?;
    let system = build_constraints(bodies)?;
    audit_with(combination, &system)
}

/// Audit of an already computed combination against a given system.
pub fn audit_with(
    combination: CombinationResult,
    system: &ProbabilityConstraintSystem,
) -> Result<ConsistencyReport> {
    let combined = &combination.combined;
    let frame = combined.frame().clone();
    if frame != system.frame {
        return Err(Error::FrameMismatch);
    }
    let combined_class = combined.classify();
    let solver = system.solver();
    let mut subsets: Vec<FocalSet> = frame.singletons().collect();
    subsets.extend(combined.focal().iter().map(|(s, _)| *s));
    subsets.sort();
    subsets.dedup();
    let elements = subsets
        .into_iter()
        .map(|s| {
            let ds = DsInterval {
                belief: crate::measures::belief(combined, s)?,
                plausibility: crate::measures::plausibility(combined, s)?,
            };
            let prob = solver.bounds(s)?;
            let verdict = verdict(&ds, &prob, combined_class.tag);
            Ok(ElementAudit { subset: s, ds, prob, verdict })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConsistencyReport {
        frame,
        combination,
        combined_class,
        feasible: solver.is_feasible(),
        elements,
    })
}
