//! Finite frames of discernment and bitmask subsets over them.
//!
//! A [`Frame`] fixes an ordering of its element labels; a [`FocalSet`] is a
//! bitmask over that ordering (bit `i` set means element `i` is a member).
//! Every binary operation checks that both operands belong to the same frame.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default upper bound on the number of frame elements.
///
/// Belief tables and constraint systems enumerate the full power set, so the
/// cap keeps those at most `2^24` entries.
pub const DEFAULT_MAX_FRAME_SIZE: usize = 24;

/// Absolute limit imposed by the 64-bit mask representation.
pub const MASK_BITS: usize = 63;

static NEXT_FRAME_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug)]
struct FrameInner {
    id: u64,
    labels: Vec<String>,
}

/// An ordered, finite, non-empty set of outcome labels.
///
/// Cloning is cheap and preserves identity: clones compare equal, while two
/// frames built separately from the same labels do not.
#[derive(Clone, Debug)]
pub struct Frame {
    inner: Arc<FrameInner>,
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.inner.id == other.inner.id
    }
}

impl Eq for Frame {}

impl Frame {
    /// Builds a frame with the default size cap.
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        Self::with_cap(labels, DEFAULT_MAX_FRAME_SIZE)
    }

    /// Builds a frame, rejecting it when it has more than `cap` elements.
    pub fn with_cap<S: AsRef<str>>(labels: &[S], cap: usize) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        let cap = cap.min(MASK_BITS);
        if labels.len() > cap {
            return Err(Error::FrameTooLarge { size: labels.len(), cap });
        }
        let mut owned: Vec<String> = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if owned.iter().any(|l| l == label) {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            owned.push(label.to_string());
        }
        Ok(Frame {
            inner: Arc::new(FrameInner {
                id: NEXT_FRAME_ID.fetch_add(1, Ordering::Relaxed),
                labels: owned,
            }),
        })
    }

    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn size(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.labels.iter().position(|l| l == label)
    }

    /// The subset containing exactly `members`.
    pub fn subset<S: AsRef<str>>(&self, members: &[S]) -> Result<FocalSet> {
        let mut bits = 0u64;
        for m in members {
            let m = m.as_ref();
            let i = self
                .index_of(m)
                .ok_or_else(|| Error::UnknownLabel(m.to_string()))?;
            bits |= 1 << i;
        }
        Ok(self.set_unchecked(bits))
    }

    /// Wraps a raw mask; fails if bits beyond the frame size are set.
    pub fn from_bits(&self, bits: u64) -> Result<FocalSet> {
        if bits & !self.full_mask() != 0 {
            return Err(Error::MaskOutOfRange { bits, size: self.size() });
        }
        Ok(self.set_unchecked(bits))
    }

    pub(crate) fn set_unchecked(&self, bits: u64) -> FocalSet {
        FocalSet { bits, frame_id: self.inner.id }
    }

    pub fn singleton(&self, index: usize) -> FocalSet {
        assert!(index < self.size(), "element index out of range");
        self.set_unchecked(1 << index)
    }

    pub fn singletons(&self) -> impl Iterator<Item = FocalSet> + '_ {
        (0..self.size()).map(move |i| self.singleton(i))
    }

    pub fn empty(&self) -> FocalSet {
        self.set_unchecked(0)
    }

    /// The whole frame, Ω.
    pub fn omega(&self) -> FocalSet {
        self.set_unchecked(self.full_mask())
    }

    pub(crate) fn full_mask(&self) -> u64 {
        (1u64 << self.size()) - 1
    }

    /// Number of subsets of the frame, `2^size`.
    pub fn power_set_len(&self) -> usize {
        1usize << self.size()
    }

    /// Every subset of the frame exactly once, in ascending mask order.
    pub fn enumerate_subsets(&self) -> impl Iterator<Item = FocalSet> + '_ {
        (0..=self.full_mask()).map(move |bits| self.set_unchecked(bits))
    }

    pub fn contains(&self, set: FocalSet) -> bool {
        set.frame_id == self.inner.id
    }

    pub(crate) fn check(&self, set: FocalSet) -> Result<()> {
        if self.contains(set) {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }

    /// Member labels of `set`, in frame order.
    pub fn members(&self, set: FocalSet) -> Vec<&str> {
        self.inner
            .labels
            .iter()
            .enumerate()
            .filter(|(i, _)| set.bits >> i & 1 == 1)
            .map(|(_, l)| l.as_str())
            .collect()
    }

    /// Renders `set` as `{a,b}`; the empty set renders as `{}`.
    pub fn render(&self, set: FocalSet) -> String {
        format!("{{{}}}", self.members(set).join(","))
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.inner.labels.join(","))
    }
}

/// A subset of a frame, stored as a bitmask over the frame's element order.
///
/// Ordering is by mask value, which gives the canonical output order used
/// throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FocalSet {
    bits: u64,
    frame_id: u64,
}

impl FocalSet {
    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn frame_id(self) -> u64 {
        self.frame_id
    }

    fn same_frame(self, other: FocalSet) -> Result<()> {
        if self.frame_id == other.frame_id {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }

    pub fn intersect(self, other: FocalSet) -> Result<FocalSet> {
        self.same_frame(other)?;
        Ok(FocalSet { bits: self.bits & other.bits, ..self })
    }

    pub fn union(self, other: FocalSet) -> Result<FocalSet> {
        self.same_frame(other)?;
        Ok(FocalSet { bits: self.bits | other.bits, ..self })
    }

    /// `Ω − self`. The frame is needed to know the width of Ω.
    pub fn complement(self, frame: &Frame) -> Result<FocalSet> {
        frame.check(self)?;
        Ok(FocalSet { bits: !self.bits & frame.full_mask(), ..self })
    }

    pub fn is_subset(self, other: FocalSet) -> Result<bool> {
        self.same_frame(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn cardinality(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn contains_index(self, index: usize) -> bool {
        index < 64 && self.bits >> index & 1 == 1
    }

    /// Every subset of `self` (including `∅` and `self`), ascending by mask.
    pub fn subsets(self) -> impl Iterator<Item = FocalSet> {
        // Enumerate submasks in descending order, then reverse.
        let mut out = Vec::with_capacity(1 << self.cardinality());
        let mut sub = self.bits;
        loop {
            out.push(FocalSet { bits: sub, ..self });
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self.bits;
        }
        out.into_iter().rev()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Frame {
        Frame::new(&["a", "b", "c"]).unwrap()
    }

    #[test]
    fn make_frame_examples() {
        assert_eq!(abc().size(), 3);
        assert_eq!(Frame::new(&["a"]).unwrap().size(), 1);
        assert_eq!(
            Frame::new(&["a", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(Frame::new::<&str>(&[]).unwrap_err(), Error::EmptyFrame);
        assert_eq!(Frame::new(&[""]).unwrap_err(), Error::EmptyLabel);
    }

    #[test]
    fn size_cap() {
        let labels: Vec<String> = (0..25).map(|i| format!("e{i}")).collect();
        assert!(matches!(
            Frame::new(&labels),
            Err(Error::FrameTooLarge { size: 25, cap: 24 })
        ));
        assert!(Frame::new(&labels[..24]).is_ok());
        assert!(matches!(
            Frame::with_cap(&labels[..5], 4),
            Err(Error::FrameTooLarge { size: 5, cap: 4 })
        ));
    }

    #[test]
    fn subset_examples() {
        let f = abc();
        assert_eq!(f.subset(&["b", "c"]).unwrap().bits(), 0b110);
        assert!(f.subset::<&str>(&[]).unwrap().is_empty());
        assert_eq!(f.subset(&["a", "b", "c"]).unwrap(), f.omega());
        assert_eq!(
            f.subset(&["d"]).unwrap_err(),
            Error::UnknownLabel("d".into())
        );
    }

    #[test]
    fn set_operations() {
        let f = abc();
        let a = f.subset(&["a"]).unwrap();
        let ab = f.subset(&["a", "b"]).unwrap();
        let b = f.subset(&["b"]).unwrap();
        let c = f.subset(&["c"]).unwrap();
        let bc = f.subset(&["b", "c"]).unwrap();
        assert_eq!(a.intersect(ab).unwrap(), a);
        assert!(a.intersect(c).unwrap().is_empty());
        assert_eq!(bc.intersect(f.omega()).unwrap(), bc);
        assert_eq!(a.complement(&f).unwrap(), bc);
        assert!(b.is_subset(bc).unwrap());
        assert!(!ab.is_subset(bc).unwrap());
        assert_eq!(ab.cardinality(), 2);
        assert_eq!(a.union(bc).unwrap(), f.omega());
    }

    #[test]
    fn frame_mismatch_is_rejected() {
        let f = abc();
        let g = abc();
        let a = f.subset(&["a"]).unwrap();
        let a2 = g.subset(&["a"]).unwrap();
        assert_eq!(a.intersect(a2), Err(Error::FrameMismatch));
        assert_eq!(a.union(a2), Err(Error::FrameMismatch));
        assert_eq!(a.is_subset(a2), Err(Error::FrameMismatch));
        assert_eq!(a.complement(&g), Err(Error::FrameMismatch));
        assert_ne!(f, g);
        assert_eq!(f, f.clone());
    }

    #[test]
    fn enumerate_power_set() {
        let f = Frame::new(&["a", "b"]).unwrap();
        let all: Vec<u64> = f.enumerate_subsets().map(|s| s.bits()).collect();
        assert_eq!(all, vec![0, 1, 2, 3]);
        assert_eq!(abc().enumerate_subsets().count(), 8);
        let one = Frame::new(&["a"]).unwrap();
        let all: Vec<_> = one.enumerate_subsets().collect();
        assert_eq!(all, vec![one.empty(), one.omega()]);
    }

    #[test]
    fn submask_enumeration() {
        let f = abc();
        let ac = f.subset(&["a", "c"]).unwrap();
        let subs: Vec<u64> = ac.subsets().map(|s| s.bits()).collect();
        assert_eq!(subs, vec![0b000, 0b001, 0b100, 0b101]);
    }

    #[test]
    fn render() {
        let f = abc();
        assert_eq!(f.render(f.subset(&["c", "a"]).unwrap()), "{a,c}");
        assert_eq!(f.render(f.empty()), "{}");
        assert_eq!(f.to_string(), "{a,b,c}");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn algebra_laws(s in 0u64..32, t in 0u64..32) {
                let f = Frame::new(&["a", "b", "c", "d", "e"]).unwrap();
                let s = f.from_bits(s).unwrap();
                let t = f.from_bits(t).unwrap();
                prop_assert_eq!(s.intersect(t).unwrap(), t.intersect(s).unwrap());
                let lhs = s.union(t).unwrap().complement(&f).unwrap();
                let rhs = s.complement(&f).unwrap().intersect(t.complement(&f).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                prop_assert_eq!(s.complement(&f).unwrap().complement(&f).unwrap(), s);
                prop_assert_eq!(s.is_subset(t).unwrap(), s.intersect(t).unwrap() == s);
            }
        }
    }
}
