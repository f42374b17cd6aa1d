//! Random frames, bodies and constraint systems.
//!
//! Masses are `wᵢ/d` with `d ≤ 64`, drawn as a random composition of `d`.

use dsaudit::consistency::{BoundKind, ConstraintSource, ProbabilityConstraint, ProbabilityConstraintSystem};
use dsaudit::{ratio, BodyOfEvidence, Frame, Rational};
use proptest::prelude::*;
use proptest::sample::subsequence;

pub const MAX_DENOMINATOR: usize = 64;

pub fn frame(n: usize) -> Frame {
    let labels: Vec<String> = (0..n).map(|i| format!("w{i}")).collect();
    Frame::new(&labels).unwrap()
}

/// `k` positive integers summing to `d`, for some `d ∈ [k, 64]`.
pub fn composition(k: usize) -> impl Strategy<Value = (Vec<i64>, i64)> {
    (k..=MAX_DENOMINATOR)
        .prop_flat_map(move |d| (Just(d), subsequence((1..d).collect::<Vec<_>>(), k - 1)))
        .prop_map(|(d, cuts)| {
            let mut parts = Vec::with_capacity(cuts.len() + 1);
            let mut prev = 0;
            for c in cuts.into_iter().chain(std::iter::once(d)) {
                parts.push((c - prev) as i64);
                prev = c;
            }
            (parts, d as i64)
        })
}

/// Random masks drawn from `pool`, with random masses.
pub fn body_over(frame: Frame, pool: Vec<u64>, max_focal: usize) -> impl Strategy<Value = BodyOfEvidence> {
    let kmax = max_focal.min(pool.len()).max(1);
    (1..=kmax)
        .prop_flat_map(move |k| (subsequence(pool.clone(), k).prop_shuffle(), composition(k)))
        .prop_map(move |(masks, (parts, d))| {
            let entries = masks
                .into_iter()
                .zip(parts)
                .map(|(m, w)| (frame.from_bits(m).unwrap(), ratio(w, d)));
            BodyOfEvidence::new(&frame, entries).unwrap()
        })
}

pub fn body_on(frame: Frame) -> impl Strategy<Value = BodyOfEvidence> {
    let pool: Vec<u64> = (1..(1u64 << frame.size())).collect();
    body_over(frame, pool, 6)
}

pub fn sized_frame() -> impl Strategy<Value = Frame> {
    (1usize..=5).prop_map(frame)
}

pub fn frame_and_body() -> impl Strategy<Value = BodyOfEvidence> {
    sized_frame().prop_flat_map(body_on)
}

pub fn body_pair() -> impl Strategy<Value = (BodyOfEvidence, BodyOfEvidence)> {
    sized_frame().prop_flat_map(|f| (body_on(f.clone()), body_on(f)))
}

pub fn body_triple() -> impl Strategy<Value = (BodyOfEvidence, BodyOfEvidence, BodyOfEvidence)> {
    sized_frame().prop_flat_map(|f| (body_on(f.clone()), body_on(f.clone()), body_on(f)))
}

/// A body whose focal sets partition the frame.
pub fn partition_body() -> impl Strategy<Value = BodyOfEvidence> {
    sized_frame().prop_flat_map(|f| {
        let n = f.size();
        proptest::collection::vec(0..n, n).prop_flat_map(move |labels| {
            let mut blocks: Vec<u64> = Vec::new();
            for b in 0..n {
                let mask = labels
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| **l == b)
                    .fold(0u64, |m, (i, _)| m | 1 << i);
                if mask != 0 {
                    blocks.push(mask);
                }
            }
            let f = f.clone();
            composition(blocks.len()).prop_map(move |(parts, d)| {
                let entries = blocks
                    .iter()
                    .zip(parts)
                    .map(|(m, w)| (f.from_bits(*m).unwrap(), ratio(w, d)));
                BodyOfEvidence::new(&f, entries).unwrap()
            })
        })
    })
}

/// Two bodies on one frame (size ≥ 2) whose supports are disjoint.
pub fn disjoint_support_pair() -> impl Strategy<Value = (BodyOfEvidence, BodyOfEvidence)> {
    (2usize..=5)
        .prop_flat_map(|n| (Just(n), 1u64..((1u64 << n) - 1)))
        .prop_flat_map(|(n, left)| {
            let f = frame(n);
            let right = !left & ((1u64 << n) - 1);
            let submasks = |m: u64| (1..=m).filter(|s| s & !m == 0).collect::<Vec<u64>>();
            (
                body_over(f.clone(), submasks(left), 4),
                body_over(f, submasks(right), 4),
            )
        })
}

/// A random constraint system on a 3-element frame.
///
/// Most constraints are drawn around a hidden distribution so that a good
/// share of systems are feasible; some values are arbitrary.
pub fn constraint_system_3() -> impl Strategy<Value = ProbabilityConstraintSystem> {
    let denom = 1i64..=12;
    (composition(3), proptest::collection::vec((1u64..8, 0u8..3, -3i64..=3, denom, any::<bool>()), 1..=7))
        .prop_map(|((hidden, d), specs)| {
            let f = frame(3);
            let mut system = ProbabilityConstraintSystem::new(&f);
            for (mask, kind, slack, den, arbitrary) in specs {
                let set = f.from_bits(mask).unwrap();
                let at_hidden: Rational =
                    (0..3).filter(|&i| set.contains_index(i)).map(|i| ratio(hidden[i], d)).sum();
                let mut value = if arbitrary {
                    ratio((slack + 3) % (den + 1), den)
                } else {
                    at_hidden + ratio(slack, den * 2)
                };
                value = value.clamp(ratio(0, 1), ratio(1, 1));
                let kind = match kind {
                    0 => BoundKind::Lower,
                    1 => BoundKind::Upper,
                    _ => BoundKind::Equal,
                };
                system
                    .push(ProbabilityConstraint { subset: set, kind, value, source: ConstraintSource::User })
                    .unwrap();
            }
            system
        })
}
