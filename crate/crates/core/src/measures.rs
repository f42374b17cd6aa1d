//! Belief and plausibility, and recovery of mass from belief.
//!
//! `bel(S)` sums the masses of focal sets contained in `S`; `pl(S)` sums the
//! masses of focal sets meeting `S`. They are dual, `pl(S) = 1 − bel(Ω − S)`,
//! and Möbius inversion recovers the mass assignment from the belief table.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::evidence::BodyOfEvidence;
use crate::frame::{FocalSet, Frame, DEFAULT_MAX_FRAME_SIZE};
use crate::rational::{one, Rational};

pub fn belief(body: &BodyOfEvidence, set: FocalSet) -> Result<Rational> {
    body.frame().check(set)?;
    Ok(body
        .focal()
        .iter()
        .filter(|(a, _)| a.bits() & !set.bits() == 0)
        .map(|(_, m)| m)
        .sum())
}

pub fn plausibility(body: &BodyOfEvidence, set: FocalSet) -> Result<Rational> {
    body.frame().check(set)?;
    Ok(body
        .focal()
        .iter()
        .filter(|(a, _)| a.bits() & set.bits() != 0)
        .map(|(_, m)| m)
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MeasureKind {
    Belief,
    Plausibility,
}

/// A belief or plausibility value for every subset of a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureTable {
    frame: Frame,
    kind: MeasureKind,
    // indexed by mask
    values: Vec<Rational>,
}

impl MeasureTable {
    /// Wraps raw values indexed by mask, e.g. a belief table from elsewhere
    /// that should be checked with [`mass_from_belief`].
    pub fn from_values(frame: &Frame, kind: MeasureKind, values: Vec<Rational>) -> Result<Self> {
        if values.len() != frame.power_set_len() {
            return Err(Error::MaskOutOfRange {
                bits: values.len() as u64,
                size: frame.size(),
            });
        }
        Ok(MeasureTable { frame: frame.clone(), kind, values })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn get(&self, set: FocalSet) -> Result<&Rational> {
        self.frame.check(set)?;
        Ok(&self.values[set.bits() as usize])
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (FocalSet, &Rational)> {
        self.frame.enumerate_subsets().zip(self.values.iter())
    }

    /// The dual table: belief becomes plausibility and vice versa.
    pub fn dual(&self) -> MeasureTable {
        let full = self.frame.omega().bits() as usize;
        let values = (0..self.values.len())
            .map(|mask| one() - &self.values[full & !mask])
            .collect();
        let kind = match self.kind {
            MeasureKind::Belief => MeasureKind::Plausibility,
            MeasureKind::Plausibility => MeasureKind::Belief,
        };
        MeasureTable { frame: self.frame.clone(), kind, values }
    }
}

fn check_table_size(frame: &Frame) -> Result<()> {
    if frame.size() > DEFAULT_MAX_FRAME_SIZE {
        return Err(Error::FrameTooLarge { size: frame.size(), cap: DEFAULT_MAX_FRAME_SIZE });
    }
    Ok(())
}

/// Tabulates belief or plausibility over the whole power set.
///
/// Uses the subset-sum (zeta) transform, `O(n·2^n)` additions.
pub fn measure_table(body: &BodyOfEvidence, kind: MeasureKind) -> Result<MeasureTable> {
    let frame = body.frame();
    check_table_size(frame)?;
    let mut values = vec![Rational::zero(); frame.power_set_len()];
    for (set, m) in body.focal() {
        values[set.bits() as usize] += m;
    }
    for bit in 0..frame.size() {
        let b = 1usize << bit;
        for mask in 0..values.len() {
            if mask & b != 0 {
                let lower = values[mask ^ b].clone();
                values[mask] += lower;
            }
        }
    }
    let table = MeasureTable { frame: frame.clone(), kind: MeasureKind::Belief, values };
    Ok(match kind {
        MeasureKind::Belief => table,
        MeasureKind::Plausibility => table.dual(),
    })
}

/// One Möbius term-by-term evaluation:
/// `m(A) = Σ_{B ⊆ A} (−1)^{|A − B|} bel(B)`.
pub fn mobius_at(table: &MeasureTable, target: FocalSet) -> Result<Rational> {
    if table.kind != MeasureKind::Belief {
        return Err(Error::WrongTableKind);
    }
    table.frame.check(target)?;
    let mut acc = Rational::zero();
    for sub in target.subsets() {
        let b = &table.values[sub.bits() as usize];
        if (target.cardinality() - sub.cardinality()).is_multiple_of(2) {
            acc += b;
        } else {
            acc -= b;
        }
    }
    Ok(acc)
}

/// Recovers the mass assignment from a belief table.
///
/// The result is validated as a body of evidence; a table that is not the
/// belief function of any body (a negative inverted mass, non-zero `bel(∅)`,
/// or `bel(Ω) ≠ 1`) is rejected with the offending subset.
pub fn mass_from_belief(table: &MeasureTable) -> Result<BodyOfEvidence> {
    if table.kind != MeasureKind::Belief {
        return Err(Error::WrongTableKind);
    }
    let frame = &table.frame;
    // Inverse of the zeta transform in `measure_table`.
    let mut masses = table.values.clone();
    for bit in 0..frame.size() {
        let b = 1usize << bit;
        for mask in 0..masses.len() {
            if mask & b != 0 {
                let lower = masses[mask ^ b].clone();
                masses[mask] -= lower;
            }
        }
    }
    assemble(frame, masses)
}

/// Same as [`mass_from_belief`] but inverts each subset independently with
/// [`mobius_at`]. `O(3^n)`; kept as a cross-check for the fast transform.
pub fn mass_from_belief_naive(table: &MeasureTable) -> Result<BodyOfEvidence> {
    let masses = table
        .frame
        .enumerate_subsets()
        .map(|s| mobius_at(table, s))
        .collect::<Result<Vec<_>>>()?;
    assemble(&table.frame, masses)
}

/// Plausibility inversion, via duality with belief.
pub fn mass_from_plausibility(table: &MeasureTable) -> Result<BodyOfEvidence> {
    if table.kind != MeasureKind::Plausibility {
        return Err(Error::WrongTableKind);
    }
    mass_from_belief(&table.dual())
}

fn assemble(frame: &Frame, masses: Vec<Rational>) -> Result<BodyOfEvidence> {
    for (set, m) in frame.enumerate_subsets().zip(&masses) {
        if m.is_negative() || (set.is_empty() && !m.is_zero()) {
            return Err(Error::NotABeliefFunction { set: frame.render(set), mass: m.clone() });
        }
    }
    BodyOfEvidence::new(frame, frame.enumerate_subsets().zip(masses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn abc() -> Frame {
        Frame::new(&["a", "b", "c"]).unwrap()
    }

    fn partition_body(f: &Frame) -> BodyOfEvidence {
        BodyOfEvidence::new(
            f,
            [
                (f.subset(&["a"]).unwrap(), ratio(1, 4)),
                (f.subset(&["b", "c"]).unwrap(), ratio(3, 4)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn belief_and_plausibility_of_quasi_combination() {
        // Combined body at x = 1/4, x̄ = 1/2, y = 1/2.
        let f = abc();
        let body = BodyOfEvidence::new(
            &f,
            [
                (f.subset(&["a"]).unwrap(), ratio(1, 7)),
                (f.subset(&["b"]).unwrap(), ratio(2, 7)),
                (f.subset(&["c"]).unwrap(), ratio(3, 7)),
                (f.subset(&["a", "b"]).unwrap(), ratio(1, 7)),
            ],
        )
        .unwrap();
        let b = f.subset(&["b"]).unwrap();
        assert_eq!(belief(&body, b).unwrap(), ratio(2, 7));
        assert_eq!(plausibility(&body, b).unwrap(), ratio(3, 7));
        assert_eq!(belief(&body, f.omega()).unwrap(), int(1));
        assert_eq!(belief(&body, f.empty()).unwrap(), int(0));
        assert_eq!(plausibility(&body, f.empty()).unwrap(), int(0));
    }

    #[test]
    fn vacuous_measures() {
        let f = abc();
        let v = BodyOfEvidence::vacuous(&f);
        for s in f.enumerate_subsets().filter(|s| !s.is_empty()) {
            assert_eq!(plausibility(&v, s).unwrap(), int(1));
        }
        let table = measure_table(&v, MeasureKind::Belief).unwrap();
        for (s, value) in table.iter() {
            let expected = if s == f.omega() { int(1) } else { int(0) };
            assert_eq!(value, &expected);
        }
        assert_eq!(mass_from_belief(&table).unwrap(), v);
    }

    #[test]
    fn partition_table_equals_mass() {
        let f = abc();
        let body = BodyOfEvidence::new(
            &f,
            f.singletons().zip([ratio(1, 7), ratio(3, 7), ratio(3, 7)]),
        )
        .unwrap();
        let bel = measure_table(&body, MeasureKind::Belief).unwrap();
        let pl = measure_table(&body, MeasureKind::Plausibility).unwrap();
        for s in f.singletons() {
            assert_eq!(bel.get(s).unwrap(), &body.mass(s));
            assert_eq!(pl.get(s).unwrap(), &body.mass(s));
        }
        assert_eq!(bel.get(f.empty()).unwrap(), &int(0));
        assert_eq!(pl.get(f.omega()).unwrap(), &int(1));
    }

    #[test]
    fn table_matches_pointwise_evaluation() {
        let f = abc();
        let body = partition_body(&f);
        let bel = measure_table(&body, MeasureKind::Belief).unwrap();
        let pl = measure_table(&body, MeasureKind::Plausibility).unwrap();
        for s in f.enumerate_subsets() {
            assert_eq!(bel.get(s).unwrap(), &belief(&body, s).unwrap());
            assert_eq!(pl.get(s).unwrap(), &plausibility(&body, s).unwrap());
        }
    }

    #[test]
    fn inversion_recovers_partition_body() {
        let f = abc();
        let body = partition_body(&f);
        let table = measure_table(&body, MeasureKind::Belief).unwrap();
        assert_eq!(mass_from_belief(&table).unwrap(), body);
        assert_eq!(mass_from_belief_naive(&table).unwrap(), body);
        let pl = measure_table(&body, MeasureKind::Plausibility).unwrap();
        assert_eq!(mass_from_plausibility(&pl).unwrap(), body);
        assert_eq!(mass_from_belief(&pl), Err(Error::WrongTableKind));
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let f = Frame::new(&["a", "b"]).unwrap();
        // bel({a}) = bel({b}) = 1/2 but bel(Ω) = 3/4 forces m(Ω) = -1/4.
        let t = MeasureTable::from_values(
            &f,
            MeasureKind::Belief,
            vec![int(0), ratio(1, 2), ratio(1, 2), ratio(3, 4)],
        )
        .unwrap();
        assert_eq!(
            mass_from_belief(&t).unwrap_err(),
            Error::NotABeliefFunction { set: "{a,b}".into(), mass: ratio(-1, 4) }
        );
        let t = MeasureTable::from_values(
            &f,
            MeasureKind::Belief,
            vec![int(0), ratio(1, 4), ratio(1, 4), ratio(3, 4)],
        )
        .unwrap();
        assert_eq!(mass_from_belief(&t).unwrap_err(), Error::MassSum(ratio(3, 4)));
        let t = MeasureTable::from_values(
            &f,
            MeasureKind::Belief,
            vec![ratio(1, 4), ratio(1, 4), ratio(1, 4), int(1)],
        )
        .unwrap();
        assert!(matches!(mass_from_belief(&t), Err(Error::NotABeliefFunction { .. })));
    }

    #[test]
    fn frame_mismatch() {
        let f = abc();
        let g = abc();
        let body = partition_body(&f);
        assert_eq!(belief(&body, g.omega()), Err(Error::FrameMismatch));
        assert_eq!(plausibility(&body, g.omega()), Err(Error::FrameMismatch));
    }
}
