mod common;

use bordered_torus::algebra::{Idempotent, Side};
use bordered_torus::pairing::{
    box_d, box_dd, box_left, box_right, pair_closed, PairingConfig, DEFAULT_PATH_CAP,
};
use bordered_torus::solid_torus::{build_cfa_framed, build_cfa_infinity};
use bordered_torus::structures::{check_d, homology_rank, isomorphic, reduce};
use bordered_torus::torus_link::build_cfdd_full;
use bordered_torus::Error;

#[test]
fn infinity_surgery_is_a_cycle() {
    for n in 2..=6 {
        let d = box_right(
            &build_cfa_infinity(16),
            &build_cfdd_full(n).unwrap(),
            DEFAULT_PATH_CAP,
        )
        .unwrap();
        assert_eq!(d.len(), n);
        let r = reduce(&d);
        let expected = common::infinity_cycle(n);
        assert!(
            isomorphic(&r, &expected).is_some(),
            "n = {n}: {:?}",
            common::arrow_lines(&r)
        );
    }
}

#[test]
fn trefoil_before_and_after_cancellation() {
    let d = box_right(
        &build_cfa_framed(2).unwrap(),
        &build_cfdd_full(2).unwrap(),
        DEFAULT_PATH_CAP,
    )
    .unwrap();
    assert_eq!(d, common::trefoil_unreduced());
    let r = reduce(&d);
    assert_eq!(r.len(), 8);
    assert!(isomorphic(&r, &common::trefoil_reduced()).is_some());
}

#[test]
fn paired_structures_satisfy_the_relation() {
    for (name, d) in common::paired_fixtures() {
        assert_eq!(d.side(), Side::Left);
        let report = check_d(&d);
        assert!(report.is_ok(), "{name}:\n{report}");
    }
}

#[test]
fn closed_pairings_are_complexes() {
    for (name, c) in common::closed_fixtures() {
        assert!(homology_rank(&c).is_ok(), "{name}");
    }
}

#[test]
fn lens_space_ranks() {
    let hopf = build_cfdd_full(1).unwrap();
    for n1 in 1..=5 {
        for n2 in 1..=5 {
            if n1 * n2 == 1 {
                continue;
            }
            let c = pair_closed(
                &build_cfa_framed(n1).unwrap(),
                &build_cfa_framed(n2).unwrap(),
                &hopf,
                DEFAULT_PATH_CAP,
            )
            .unwrap();
            let rank = homology_rank(&c).unwrap();
            assert_eq!(rank as u32, n1 * n2 - 1, "({n1}, {n2})");
        }
    }
}

#[test]
fn reducing_before_pairing_agrees() {
    for n in 1..=3 {
        let s = build_cfdd_full(n).unwrap();
        for l in 1..=4 {
            for r in 1..=4 {
                let left = build_cfa_framed(l).unwrap();
                let right = build_cfa_framed(r).unwrap();
                let late = pair_closed(&left, &right, &s, DEFAULT_PATH_CAP).unwrap();
                let early = box_left(
                    &left,
                    &reduce(&box_right(&right, &s, DEFAULT_PATH_CAP).unwrap()),
                    DEFAULT_PATH_CAP,
                )
                .unwrap();
                assert_eq!(
                    homology_rank(&late).unwrap(),
                    homology_rank(&early).unwrap(),
                    "n = {n}, ({l}, {r})"
                );
            }
        }
    }
}

#[test]
fn gluing_on_the_left_mirrors_the_right() {
    let s = build_cfdd_full(2).unwrap();
    let m = build_cfa_framed(2).unwrap();
    let d = box_dd(&m, &s, &PairingConfig::new(Side::Left)).unwrap();
    assert_eq!(d.side(), Side::Right);
    assert!(check_d(&d).is_ok());
    let c = box_d(&m, &d, &PairingConfig::new(Side::Right)).unwrap();
    let other = pair_closed(&m, &m, &s, DEFAULT_PATH_CAP).unwrap();
    assert_eq!(homology_rank(&c).unwrap(), homology_rank(&other).unwrap());
}

#[test]
fn generators_match_idempotents() {
    let d = box_right(
        &build_cfa_framed(3).unwrap(),
        &build_cfdd_full(3).unwrap(),
        DEFAULT_PATH_CAP,
    )
    .unwrap();
    for (name, idem) in d.generators() {
        let (x, y) = name.split_once('|').unwrap();
        let expect_left = if y == "ab" || y.starts_with("a_") {
            Idempotent::One
        } else {
            Idempotent::Two
        };
        assert_eq!(*idem, expect_left, "{name}");
        assert!(["p1", "p2", "p3", "q"].contains(&x));
    }
}

#[test]
fn cap_errors() {
    let s = build_cfdd_full(2).unwrap();
    let tight = PairingConfig::new(Side::Right).with_cap(2);
    assert!(matches!(
        box_dd(&build_cfa_framed(2).unwrap(), &s, &tight),
        Err(Error::CapExceeded(_))
    ));
    assert!(matches!(
        box_right(
            &build_cfa_infinity(0),
            &build_cfdd_full(4).unwrap(),
            DEFAULT_PATH_CAP
        ),
        Err(Error::CapExceeded(_))
    ));
}
