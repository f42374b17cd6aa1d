//! Dempster's rule of combination.
//!
//! Every pair of focal sets `(Aᵢ, Bⱼ)` contributes the product `m(Aᵢ)·m(Bⱼ)`
//! to its intersection. Products landing on `∅` make up the conflict
//! coefficient κ; the rest are pooled by intersection and rescaled by
//! `1/(1 − κ)`. Each distinct non-empty intersection becomes exactly one
//! focal element of the combined body.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::evidence::BodyOfEvidence;
use crate::frame::FocalSet;
use crate::rational::Rational;

/// Bookkeeping for one pairwise combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinationStep {
    /// Conflict coefficient of this step alone.
    pub kappa: Rational,
    /// For each combined focal set, the `(i, j)` focal-index pairs of the
    /// left and right operands whose intersection produced it.
    pub provenance: BTreeMap<FocalSet, Vec<(usize, usize)>>,
    /// Pooled products before division by `1 − κ`.
    pub unnormalized: BTreeMap<FocalSet, Rational>,
    /// Index pairs with empty intersection.
    pub conflict_pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinationResult {
    /// Combined body, focal sets in ascending mask order.
    pub combined: BodyOfEvidence,
    /// Overall conflict `1 − Π(1 − κₖ)` across all steps; for a single
    /// pairwise combination this is just κ.
    pub kappa: Rational,
    /// One entry per pairwise combination, in fold order.
    pub steps: Vec<CombinationStep>,
}

impl CombinationResult {
    /// Provenance of the final step (empty when nothing was combined).
    pub fn provenance(&self) -> Option<&BTreeMap<FocalSet, Vec<(usize, usize)>>> {
        self.steps.last().map(|s| &s.provenance)
    }

    /// Conflict pairs of the final step.
    pub fn conflict_pairs(&self) -> &[(usize, usize)] {
        self.steps.last().map(|s| s.conflict_pairs.as_slice()).unwrap_or(&[])
    }
}

/// The conflict coefficient κ between two bodies.
pub fn conflict(a: &BodyOfEvidence, b: &BodyOfEvidence) -> Result<Rational> {
    if a.frame() != b.frame() {
        return Err(Error::FrameMismatch);
    }
    let mut kappa = Rational::zero();
    for (sa, ma) in a.focal() {
        for (sb, mb) in b.focal() {
            if sa.bits() & sb.bits() == 0 {
                kappa += ma * mb;
            }
        }
    }
    Ok(kappa)
}

fn combine_step(
    a: &BodyOfEvidence,
    b: &BodyOfEvidence,
    step: usize,
) -> Result<(BodyOfEvidence, CombinationStep)> {
    if a.frame() != b.frame() {
        return Err(Error::FrameMismatch);
    }
    let mut kappa = Rational::zero();
    let mut provenance: BTreeMap<FocalSet, Vec<(usize, usize)>> = BTreeMap::new();
    let mut unnormalized: BTreeMap<FocalSet, Rational> = BTreeMap::new();
    let mut conflict_pairs = Vec::new();
    for (i, (sa, ma)) in a.focal().iter().enumerate() {
        for (j, (sb, mb)) in b.focal().iter().enumerate() {
            let product = ma * mb;
            let meet = sa.intersect(*sb)?;
            if meet.is_empty() {
                kappa += product;
                conflict_pairs.push((i, j));
            } else {
                *unnormalized.entry(meet).or_insert_with(Rational::zero) += product;
                provenance.entry(meet).or_default().push((i, j));
            }
        }
    }
    if kappa.is_one() {
        return Err(Error::TotalConflict { step });
    }
    let scale = Rational::one() - &kappa;
    let focal = unnormalized.iter().map(|(s, m)| (*s, m / &scale)).collect();
    let combined = BodyOfEvidence::from_parts(a.frame(), focal);
    Ok((combined, CombinationStep { kappa, provenance, unnormalized, conflict_pairs }))
}

pub fn combine(a: &BodyOfEvidence, b: &BodyOfEvidence) -> Result<CombinationResult> {
    combine_many([a, b])
}

/// Left fold of [`combine`] over `bodies`.
///
/// A total conflict reports the 1-based index of the step that failed
/// (step `k` folds in `bodies[k]`).
pub fn combine_many<'a, I>(bodies: I) -> Result<CombinationResult>
where
    I: IntoIterator<Item = &'a BodyOfEvidence>,
{
    let mut iter = bodies.into_iter();
    let first = iter.next().ok_or(Error::NoBodies)?;
    let mut acc = first.clone();
    let mut steps = Vec::new();
    let mut retained = Rational::one();
    for (k, next) in iter.enumerate() {
        let (combined, step) = combine_step(&acc, next, k + 1)?;
        retained *= Rational::one() - &step.kappa;
        acc = combined;
        steps.push(step);
    }
    Ok(CombinationResult { combined: acc, kappa: Rational::one() - retained, steps })
}
