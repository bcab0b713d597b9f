mod common;

use common::{masks, set, space, SIERPINSKI, THREE_POINT};
use proptest::prelude::*;
use topocheck::space::{parse_space_json, space_to_json, SpaceFileError, ThetaReading};
use topocheck::{validate_topology, SpaceContext, SubsetMask, Topology, TopologyError};

fn m(bits: u16, n: usize) -> SubsetMask {
    SubsetMask::new(bits, n)
}

#[test]
fn sierpinski_is_valid() {
    let t = validate_topology(2, &[m(0, 2), m(0b01, 2), m(0b11, 2)]).unwrap();
    assert_eq!(t.open_count(), 3);
}

#[test]
fn three_point_example_is_valid() {
    let opens = [0b000, 0b001, 0b010, 0b011, 0b111].map(|b| m(b, 3));
    let t = validate_topology(3, &opens).unwrap();
    assert_eq!(t.open_count(), 5);
}

#[test]
fn missing_full_set() {
    let err = validate_topology(2, &[m(0, 2), m(0b01, 2), m(0b10, 2)]).unwrap_err();
    assert_eq!(err, TopologyError::MissingFullSet);
}

#[test]
fn missing_empty_set() {
    let err = validate_topology(2, &[m(0b01, 2), m(0b11, 2)]).unwrap_err();
    assert_eq!(err, TopologyError::MissingEmptySet);
}

#[test]
fn union_witness_is_reported() {
    let opens = [0b000, 0b001, 0b010, 0b111].map(|b| m(b, 3));
    let err = validate_topology(3, &opens).unwrap_err();
    assert_eq!(err, TopologyError::NotClosedUnderUnion(m(0b001, 3), m(0b010, 3)));
}

#[test]
fn intersection_witness_is_reported() {
    let opens = [0b000, 0b011, 0b110, 0b111].map(|b| m(b, 3));
    let err = validate_topology(3, &opens).unwrap_err();
    assert_eq!(err, TopologyError::NotClosedUnderIntersection(m(0b011, 3), m(0b110, 3)));
}

#[test]
fn canonicalization_sorts_and_dedups() {
    let opens = [0b111, 0b001, 0b000, 0b001].map(|b| m(b, 3));
    let t = validate_topology(3, &opens).unwrap();
    let bits: Vec<u16> = t.opens().map(|o| o.bits()).collect();
    assert_eq!(bits, vec![0, 0b001, 0b111]);
    let again = validate_topology(3, &t.opens().collect::<Vec<_>>()).unwrap();
    assert_eq!(again, t);
}

#[test]
fn closure_examples() {
    let s = space(SIERPINSKI);
    assert_eq!(s.closure(set(&s, &["a"])), s.topology().full());
    assert_eq!(s.closure(set(&s, &[])), set(&s, &[]));

    let e = space(THREE_POINT);
    assert_eq!(e.closure(set(&e, &["k"])), set(&e, &["k", "m"]));
    assert!(e.closure(set(&e, &[])).is_empty());
}

#[test]
fn interior_examples() {
    let s = space(SIERPINSKI);
    assert!(s.interior(set(&s, &["b"])).is_empty());
    assert_eq!(s.interior(s.topology().full()), s.topology().full());

    let e = space(THREE_POINT);
    assert_eq!(e.interior(set(&e, &["k", "m"])), set(&e, &["k"]));
}

#[test]
fn theta_closure_examples() {
    let s = space(SIERPINSKI);
    assert_eq!(s.theta_closure(set(&s, &["a"])), s.topology().full());
    assert!(s.theta_closure(set(&s, &[])).is_empty());

    let d = SpaceContext::new(Topology::discrete(3));
    for a in masks(3) {
        assert_eq!(d.theta_closure(a), a);
    }
}

#[test]
fn theta_readings_agree_up_to_four_points() {
    for t in common::spaces_up_to(4) {
        let veli = SpaceContext::new(t.clone());
        let alt = SpaceContext::with_theta_reading(t.clone(), ThetaReading::ClosedNeighbourhood);
        for a in masks(t.n()) {
            assert_eq!(veli.theta_closure(a), alt.theta_closure(a), "{:?} {:?}", t, a);
        }
    }
}

#[test]
fn memo_matches_fresh_context() {
    let warm = space(THREE_POINT);
    for a in masks(3) {
        warm.closure(a);
        warm.theta_closure(a);
    }
    for a in masks(3) {
        let cold = space(THREE_POINT);
        assert_eq!(warm.closure(a), cold.closure(a));
        assert_eq!(warm.interior(a), cold.interior(a));
        assert_eq!(warm.theta_closure(a), cold.theta_closure(a));
    }
}

#[test]
fn space_json_round_trip() {
    let t = parse_space_json(THREE_POINT).unwrap();
    let back = parse_space_json(&space_to_json(&t)).unwrap();
    assert_eq!(t, back);
    assert_eq!(back.point_names(), ["k", "l", "m"]);
}

#[test]
fn space_json_rejects_duplicates_and_unknown_points() {
    let dup = r#"{"points":["a","b"],"opens":[[],["a"],["a"],["a","b"]]}"#;
    assert!(parse_space_json(dup).is_err());
    let unknown = r#"{"points":["a","b"],"opens":[[],["c"],["a","b"]]}"#;
    assert!(parse_space_json(unknown).is_err());
    let bad = r#"{"points":["a","b"],"opens":[[],["a"]]}"#;
    match parse_space_json(bad) {
        Err(SpaceFileError::Invalid(_, e)) => assert_eq!(e, TopologyError::MissingFullSet),
        other => panic!("unexpected {other:?}"),
    }
}

fn topology_and_masks() -> impl Strategy<Value = (Topology, u16, u16)> {
    let all = common::spaces_up_to(4);
    (0..all.len(), any::<u16>(), any::<u16>()).prop_map(move |(i, a, b)| {
        let t = all[i].clone();
        let full = t.full().bits();
        (t, a & full, b & full)
    })
}

proptest! {
    #[test]
    fn mask_algebra(n in 1usize..=16, a in any::<u16>(), b in any::<u16>()) {
        let full = ((1u32 << n) - 1) as u16;
        let (a, b) = (m(a & full, n), m(b & full, n));
        prop_assert_eq!(a.complement().complement(), a);
        prop_assert_eq!(a.union(b).complement(), a.complement().intersection(b.complement()));
        prop_assert!(a.intersection(b).is_subset(a.union(b)));
        prop_assert_eq!(a.complement().bits() & !full, 0);
        prop_assert_eq!(a.len() + a.complement().len(), n);
    }

    #[test]
    fn kuratowski((t, a, b) in topology_and_masks()) {
        let n = t.n();
        let ctx = SpaceContext::new(t);
        let (a, b) = (m(a, n), m(b, n));
        let cl = |x| ctx.closure(x);
        prop_assert!(a.is_subset(cl(a)));
        prop_assert_eq!(cl(cl(a)), cl(a));
        prop_assert_eq!(cl(a.union(b)), cl(a).union(cl(b)));
        if a.is_subset(b) {
            prop_assert!(cl(a).is_subset(cl(b)));
        }
        prop_assert_eq!(ctx.interior(a), cl(a.complement()).complement());
        prop_assert!(ctx.interior(a).is_subset(a));
        prop_assert!(cl(a).is_subset(ctx.theta_closure(a)));
    }
}
