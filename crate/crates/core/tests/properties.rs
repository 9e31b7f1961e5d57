//! Randomized law checks for the clopen algebra and the enclosure map.

use cantor_haar::{unit_enclosure, ClopenSet, FnProvider, RadixSystem};
use num_traits::One;
use proptest::prelude::*;

fn pool() -> Vec<RadixSystem> {
    vec![
        RadixSystem::periodic(vec![2]).unwrap(),
        RadixSystem::periodic(vec![3]).unwrap(),
        RadixSystem::periodic(vec![2, 3]).unwrap(),
        RadixSystem::new(vec![5, 2, 7], vec![2]).unwrap(),
    ]
}

/// Seeds for one clopen set: a level and raw rank ranges to canonicalize.
#[derive(Debug, Clone)]
struct SetSpec {
    level: u64,
    seeds: Vec<(u64, u64)>,
}

fn arb_spec() -> impl Strategy<Value = SetSpec> {
    (1..=5u64, prop::collection::vec((any::<u64>(), 0..12u64), 0..5))
        .prop_map(|(level, seeds)| SetSpec { level, seeds })
}

fn build(sys: &RadixSystem, spec: &SetSpec) -> ClopenSet {
    let size = u64::try_from(&sys.level_size(spec.level)).expect("small level");
    let ranges = spec
        .seeds
        .iter()
        .map(|&(seed, width)| {
            let lo = seed % size;
            let hi = (lo + width).min(size - 1);
            (lo.into(), hi.into())
        })
        .collect();
    ClopenSet::from_rank_ranges(sys.clone(), spec.level, ranges)
}

/// Pointwise membership at a common level, the semantic view of a set.
fn members(set: &ClopenSet, level: u64) -> Vec<bool> {
    set.system()
        .level_points(level)
        .map(|p| set.contains(&p).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boolean_laws_hold_on_random_sets(
        sys_idx in 0..4usize,
        sa in arb_spec(),
        sb in arb_spec(),
        sc in arb_spec(),
    ) {
        let sys = &pool()[sys_idx];
        let a = build(sys, &sa);
        let b = build(sys, &sb);
        let c = build(sys, &sc);

        // associativity and commutativity
        prop_assert_eq!(
            a.union(&b).unwrap().union(&c).unwrap(),
            a.union(&b.union(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());

        // De Morgan
        prop_assert_eq!(
            a.union(&b).unwrap().complement(),
            a.complement().intersect(&b.complement()).unwrap()
        );
        prop_assert_eq!(
            a.intersect(&b).unwrap().complement(),
            a.complement().union(&b.complement()).unwrap()
        );

        // absorption and involution
        prop_assert_eq!(a.union(&a.intersect(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.intersect(&a.union(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.complement().complement(), a.clone());

        // distributivity
        prop_assert_eq!(
            a.intersect(&b.union(&c).unwrap()).unwrap(),
            a.intersect(&b).unwrap().union(&a.intersect(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn canonicalization_is_idempotent_and_semantic(
        sys_idx in 0..4usize,
        sa in arb_spec(),
        sb in arb_spec(),
    ) {
        let sys = &pool()[sys_idx];
        let a = build(sys, &sa);
        let b = build(sys, &sb);

        // rebuilding from the canonical intervals changes nothing
        let rebuilt = ClopenSet::from_intervals(
            sys.clone(),
            a.level(),
            a.intervals().to_vec(),
        ).unwrap();
        prop_assert_eq!(rebuilt.intervals(), a.intervals());

        // equality of canonical forms is equality of point-sets
        let level = a.level().max(b.level());
        prop_assert_eq!(a == b, members(&a, level) == members(&b, level));
    }

    #[test]
    fn measures_add_over_disjoint_pieces(
        sys_idx in 0..4usize,
        sa in arb_spec(),
        sb in arb_spec(),
    ) {
        let sys = &pool()[sys_idx];
        let a = build(sys, &sa);
        let disjoint = build(sys, &sb).intersect(&a.complement()).unwrap();
        prop_assert!(a.intersect(&disjoint).unwrap().is_empty());
        prop_assert_eq!(
            a.union(&disjoint).unwrap().haar_measure(),
            a.haar_measure() + disjoint.haar_measure()
        );
        prop_assert_eq!(
            a.haar_measure() + a.complement().haar_measure(),
            num_rational::BigRational::one()
        );
    }

    #[test]
    fn enclosures_nest_with_exact_cell_widths(
        sys_idx in 0..4usize,
        prefix in prop::collection::vec(any::<u64>(), 0..10),
        deeper in 1..6u64,
    ) {
        let sys = pool()[sys_idx].clone();
        let rule = {
            let sys = sys.clone();
            move |i: u64| {
                let radix = sys.radix_at(i);
                prefix.get(i as usize - 1).map_or(0, |&s| s % radix)
            }
        };
        let stream = FnProvider::new(sys.clone(), rule);
        let k = 4u64;
        let coarse = unit_enclosure(&stream, k);
        let fine = unit_enclosure(&stream, k + deeper);
        prop_assert!(coarse.0 <= fine.0 && fine.1 <= coarse.1);
        let width = &fine.1 - &fine.0;
        prop_assert_eq!(
            width,
            num_rational::BigRational::new(
                1.into(),
                num_bigint::BigInt::from(sys.level_size(k + deeper))
            )
        );
    }

    #[test]
    fn clopen_measure_equals_image_length_on_random_sets(
        sys_idx in 0..4usize,
        sa in arb_spec(),
    ) {
        let sys = &pool()[sys_idx];
        let a = build(sys, &sa);
        let report = cantor_haar::check_set_pushforward(&a);
        prop_assert!(report.equal);
        prop_assert!(report.witness.is_none());
    }
}
