mod support;

use dsaudit::measures::mass_from_belief_naive;
use dsaudit::{
    belief, combine, combine_many, conflict, int, mass_from_belief, measure_table, plausibility,
    BodyOfEvidence, Error, MeasureKind, Rational, StructureTag,
};
use num_traits::{One, Zero};
use proptest::prelude::*;
use support::strategies::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mobius_round_trip(body in frame_and_body()) {
        let table = measure_table(&body, MeasureKind::Belief).unwrap();
        prop_assert_eq!(&mass_from_belief(&table).unwrap(), &body);
        prop_assert_eq!(&mass_from_belief_naive(&table).unwrap(), &body);
    }

    #[test]
    fn duality_and_ordering(body in frame_and_body()) {
        let f = body.frame().clone();
        let bel = measure_table(&body, MeasureKind::Belief).unwrap();
        let pl = measure_table(&body, MeasureKind::Plausibility).unwrap();
        prop_assert!(bel.get(f.empty()).unwrap().is_zero());
        prop_assert!(bel.get(f.omega()).unwrap().is_one());
        prop_assert!(pl.get(f.empty()).unwrap().is_zero());
        prop_assert!(pl.get(f.omega()).unwrap().is_one());
        for s in f.enumerate_subsets() {
            let b = belief(&body, s).unwrap();
            let p = plausibility(&body, s).unwrap();
            let c = s.complement(&f).unwrap();
            prop_assert_eq!(&p, &(int(1) - belief(&body, c).unwrap()));
            prop_assert!(b <= p);
            prop_assert_eq!(bel.get(s).unwrap(), &b);
            prop_assert_eq!(pl.get(s).unwrap(), &p);
            for t in f.enumerate_subsets() {
                if s.is_subset(t).unwrap() {
                    prop_assert!(bel.get(s).unwrap() <= bel.get(t).unwrap());
                }
            }
        }
    }

    #[test]
    fn partition_mass_equals_belief_and_plausibility(body in partition_body()) {
        // A single block is Ω itself, which is not a partition.
        if body.len() > 1 {
            prop_assert_eq!(body.classify().tag, StructureTag::Partition);
        }
        for (s, m) in body.focal() {
            prop_assert_eq!(&belief(&body, *s).unwrap(), m);
            prop_assert_eq!(&plausibility(&body, *s).unwrap(), m);
        }
    }

    #[test]
    fn combination_invariants((a, b) in body_pair()) {
        let supports_meet = a.support().bits() & b.support().bits() != 0;
        let kappa = conflict(&a, &b).unwrap();
        prop_assert_eq!(kappa.is_one(), !supports_meet);
        match (combine(&a, &b), combine(&b, &a)) {
            (Ok(ab), Ok(ba)) => {
                prop_assert_eq!(&ab.combined, &ba.combined);
                prop_assert_eq!(&ab.kappa, &kappa);
                let total: Rational = ab.combined.focal().iter().map(|(_, m)| m).sum();
                prop_assert!(total.is_one());
                let step = &ab.steps[0];
                let unnormalized: Rational = step.unnormalized.values().sum();
                prop_assert!((unnormalized + &step.kappa).is_one());
                // every non-empty pairwise intersection lands in exactly one bucket
                let mut seen = 0usize;
                for (set, pairs) in &step.provenance {
                    for &(i, j) in pairs {
                        let meet = a.focal()[i].0.intersect(b.focal()[j].0).unwrap();
                        prop_assert_eq!(meet, *set);
                        seen += 1;
                    }
                }
                prop_assert_eq!(seen + step.conflict_pairs.len(), a.len() * b.len());
                let conflict_mass: Rational = step
                    .conflict_pairs
                    .iter()
                    .map(|&(i, j)| &a.focal()[i].1 * &b.focal()[j].1)
                    .sum();
                prop_assert_eq!(&conflict_mass, &kappa);
                if kappa.is_zero() {
                    prop_assert_eq!(ab.combined.canonical(), step.unnormalized.clone());
                }
            }
            (Err(Error::TotalConflict { .. }), Err(Error::TotalConflict { .. })) => {
                prop_assert!(!supports_meet);
            }
            other => prop_assert!(false, "asymmetric outcome {:?}", other),
        }
    }

    #[test]
    fn vacuous_is_neutral(a in frame_and_body()) {
        let v = BodyOfEvidence::vacuous(a.frame());
        let r = combine(&a, &v).unwrap();
        prop_assert_eq!(&r.combined, &a);
        prop_assert!(r.kappa.is_zero());
    }

    #[test]
    fn disjoint_supports_conflict_totally((a, b) in disjoint_support_pair()) {
        prop_assert!(conflict(&a, &b).unwrap().is_one());
        prop_assert_eq!(combine(&a, &b).unwrap_err(), Error::TotalConflict { step: 1 });
    }

    #[test]
    fn fold_order_does_not_change_masses((a, b, c) in body_triple()) {
        let orders = [[&a, &b, &c], [&c, &a, &b], [&b, &c, &a], [&c, &b, &a]];
        let results: Vec<_> = orders.iter().map(|o| combine_many(o.iter().copied())).collect();
        match &results[0] {
            Ok(first) => {
                for r in &results[1..] {
                    let r = r.as_ref().unwrap();
                    prop_assert_eq!(&r.combined, &first.combined);
                    prop_assert_eq!(&r.kappa, &first.kappa);
                }
            }
            Err(_) => {
                for r in &results[1..] {
                    prop_assert!(r.is_err());
                }
            }
        }
    }
}
