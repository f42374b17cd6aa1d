//! Mass assignments and bodies of evidence.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};
use crate::rational::Rational;

/// Focal sets of one frame paired with exact masses.
///
/// Construction enforces the mass-assignment axioms: no mass on `∅`, no
/// negative masses, no repeated focal set, and a total of exactly one.
/// Zero-mass entries are dropped, so every stored focal set has positive mass.
///
/// Focal sets keep the order they were supplied in; that order is what
/// provenance indices refer to. Equality ignores it.
#[derive(Clone, Debug)]
pub struct BodyOfEvidence {
    frame: Frame,
    focal: Vec<(FocalSet, Rational)>,
}

impl BodyOfEvidence {
    pub fn new<I>(frame: &Frame, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, Rational)>,
    {
        let mut focal: Vec<(FocalSet, Rational)> = Vec::new();
        let mut total = Rational::zero();
        for (set, mass) in assignments {
            frame.check(set)?;
            if mass.is_negative() {
                return Err(Error::NegativeMass { set: frame.render(set), mass });
            }
            if focal.iter().any(|(s, _)| *s == set) {
                return Err(Error::DuplicateFocalSet(frame.render(set)));
            }
            if mass.is_zero() {
                continue;
            }
            if set.is_empty() {
                return Err(Error::MassOnEmptySet(mass));
            }
            total += &mass;
            focal.push((set, mass));
        }
        if !total.is_one() {
            return Err(Error::MassSum(total));
        }
        Ok(BodyOfEvidence { frame: frame.clone(), focal })
    }

    /// Total ignorance: all mass on Ω.
    pub fn vacuous(frame: &Frame) -> Self {
        BodyOfEvidence {
            frame: frame.clone(),
            focal: vec![(frame.omega(), Rational::one())],
        }
    }

    /// Internal constructor for bodies whose axioms hold by construction.
    pub(crate) fn from_parts(frame: &Frame, focal: Vec<(FocalSet, Rational)>) -> Self {
        debug_assert!(focal.iter().all(|(s, m)| !s.is_empty() && m.is_positive()));
        debug_assert!(focal.iter().map(|(_, m)| m).sum::<Rational>().is_one());
        BodyOfEvidence { frame: frame.clone(), focal }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn focal(&self) -> &[(FocalSet, Rational)] {
        &self.focal
    }

    pub fn len(&self) -> usize {
        self.focal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.focal.is_empty()
    }

    /// `m(set)`, zero for sets that are not focal.
    pub fn mass(&self, set: FocalSet) -> Rational {
        self.focal
            .iter()
            .find(|(s, _)| *s == set)
            .map(|(_, m)| m.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// The focal sets sorted by mask, with masses.
    pub fn canonical(&self) -> BTreeMap<FocalSet, Rational> {
        self.focal.iter().cloned().collect()
    }

    /// Union of all focal sets.
    pub fn support(&self) -> FocalSet {
        let bits = self.focal.iter().fold(0, |acc, (s, _)| acc | s.bits());
        self.frame.set_unchecked(bits)
    }

    pub fn classify(&self) -> StructureClass {
        classify(self)
    }
}

impl PartialEq for BodyOfEvidence {
    fn eq(&self, other: &Self) -> bool {
        self.frame == other.frame && self.canonical() == other.canonical()
    }
}

impl Eq for BodyOfEvidence {}

impl fmt::Display for BodyOfEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .canonical()
            .iter()
            .map(|(s, m)| format!("{}↦{}", self.frame.render(*s), m))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StructureTag {
    /// Focal sets are pairwise disjoint, cover Ω, and Ω is not focal.
    Partition,
    /// As a partition, plus Ω itself focal with positive (uncertainty) mass.
    QuasiPartition,
    General,
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureTag::Partition => "partition",
            StructureTag::QuasiPartition => "quasi-partition",
            StructureTag::General => "general",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureClass {
    pub tag: StructureTag,
    /// Mass on Ω, zero when Ω is not focal.
    pub uncertainty_mass: Rational,
}

fn tiles(frame: &Frame, sets: &[FocalSet]) -> bool {
    let mut seen = 0u64;
    for s in sets {
        if seen & s.bits() != 0 {
            return false;
        }
        seen |= s.bits();
    }
    seen == frame.omega().bits()
}

pub fn classify(body: &BodyOfEvidence) -> StructureClass {
    let omega = body.frame.omega();
    let uncertainty_mass = body.mass(omega);
    let others: Vec<FocalSet> = body
        .focal
        .iter()
        .map(|(s, _)| *s)
        .filter(|s| *s != omega)
        .collect();
    // The vacuous body has no non-Ω focal sets to cover Ω, so it is General.
    let tag = if !tiles(&body.frame, &others) {
        StructureTag::General
    } else if uncertainty_mass.is_zero() {
        StructureTag::Partition
    } else {
        StructureTag::QuasiPartition
    };
    StructureClass { tag, uncertainty_mass }
}
