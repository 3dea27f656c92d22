mod common;

use bordered_torus::algebra::{Basis, Chord, Idempotent, Side};
use bordered_torus::structures::{
    check_dd, d_of_morphism, verify_homotopy, DDLabel, DoubleSided, Kind, Morphism,
};
use bordered_torus::torus_link::{
    build_cfdd_full, build_cfdd_full_with, build_cfdd_simplified, build_equivalence, build_log,
    enumerate_generators,
};
use bordered_torus::Error;

#[test]
fn generator_census() {
    for n in 1..=8 {
        let gens = enumerate_generators(n).unwrap();
        assert_eq!(gens.len(), 2 * n * n + 2 * n, "n = {n}");
        let zero = gens.iter().filter(|(_, s)| *s == 0).count();
        assert_eq!(zero, 2 * n * n, "n = {n}");
        assert_eq!(gens.iter().filter(|(_, s)| *s == 1).count(), n);
        assert_eq!(gens.iter().filter(|(_, s)| *s == -1).count(), n);
    }
}

#[test]
fn hopf_bimodule_is_exact() {
    let hopf = build_cfdd_full(1).unwrap();
    let gens: Vec<_> = hopf.generators().keys().cloned().collect();
    assert_eq!(gens, vec!["ab", "x1y1"]);
    assert_eq!(
        common::arrow_lines(&hopf),
        vec![
            "ab r1*s3 x1y1",
            "ab r123*s123 x1y1",
            "ab r3*s1 x1y1",
            "x1y1 r2*s2 ab",
        ]
    );
}

#[test]
fn structure_equations_hold() {
    for (name, s) in common::dd_fixtures() {
        let report = check_dd(&s);
        assert!(report.is_ok(), "{name}:\n{report}");
    }
}

#[test]
fn other_summands_add_isolated_generators() {
    for n in 1..=5 {
        let plain = build_cfdd_full(n).unwrap();
        let all = build_cfdd_full_with(n, true).unwrap();
        assert_eq!(all.len(), 2 * n * n + 2 * n);
        assert_eq!(all.arrows(), plain.arrows());
        assert!(check_dd(&all).is_ok());
    }
}

#[test]
fn simplified_sizes() {
    for n in 2..=8 {
        let s = build_cfdd_simplified(n).unwrap();
        assert_eq!(s.len(), 4 * n - 2);
        assert!(!s.has_unit_arrows());
        assert!(s.generators().keys().all(|g| g.starts_with("u_")));
    }
}

#[test]
fn equivalence_verifies() {
    for n in 3..=6 {
        let e = build_equivalence(n).unwrap();
        let report = verify_homotopy(&e.f, &e.g, &e.h, &e.full, &e.simplified).unwrap();
        assert!(report.is_ok(), "n = {n}:\n{report}");
        assert!(d_of_morphism(&e.g, &e.simplified, &e.full)
            .unwrap()
            .is_zero());
    }
}

#[test]
fn dropping_a_homotopy_arrow_is_caught() {
    let e = build_equivalence(3).unwrap();
    let both23 = DDLabel::new(Basis::Chord(Chord::C23), Basis::Chord(Chord::C23));
    let mut h = e.h.clone();
    assert!(h.remove_arrow("x1y1", both23, "x2y2"));
    let report = verify_homotopy(&e.f, &e.g, &h, &e.full, &e.simplified).unwrap();
    assert!(!report.is_ok());
    assert!(report.d_f.is_zero() && report.d_g.is_zero() && report.fg_defect.is_zero());
    let mut dropped = Morphism::zero(&e.full, &e.full);
    dropped.add_arrow("x1y1", both23, "x2y2").unwrap();
    let expected = d_of_morphism(&dropped, &e.full, &e.full).unwrap();
    assert!(!expected.is_zero());
    assert_eq!(report.gf_defect.arrows(), expected.arrows());
    assert!(report.to_string().contains("G∘F + id = d(H): "));
}

#[test]
fn unit_morphism_is_not_a_chain_map() {
    let s = build_cfdd_simplified(2).unwrap();
    let full = build_cfdd_full(2).unwrap();
    let mut h = Morphism::zero(&s, &full);
    let unit = DoubleSided::unit((Idempotent::Two, Idempotent::Two));
    h.add_arrow("u_x1y1", unit, "x2y2").unwrap();
    assert!(!d_of_morphism(&h, &s, &full).unwrap().is_zero());
}

#[test]
fn build_log_lists_every_family() {
    let log = build_log(3).unwrap();
    let full = build_cfdd_full(3).unwrap();
    let header = log.lines().next().unwrap();
    assert!(header.contains(&format!("{} generators", full.len())));
    assert!(header.contains(&format!("{} arrows", full.arrows().len())));
    for i in 1..=14 {
        assert!(
            log.lines().any(|l| l.starts_with(&format!("F{i}\t"))),
            "F{i}"
        );
    }
    assert!(log.contains("derived: structure equation"));
}

#[test]
fn labels_use_both_sides() {
    let full = build_cfdd_full(2).unwrap();
    let l = Basis::parse_on("r23", Side::Left).unwrap();
    let r = Basis::parse_on("s2", Side::Right).unwrap();
    assert!(full
        .arrows()
        .iter()
        .any(|a| a.source == "x1y3" && a.label == DDLabel::new(l, r) && a.target == "x2_b"));
}

#[test]
fn bad_sizes_are_rejected() {
    assert!(matches!(
        build_cfdd_full(0),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        enumerate_generators(0),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        build_cfdd_simplified(1),
        Err(Error::InvalidParameter(_))
    ));
    assert!(matches!(
        build_equivalence(2),
        Err(Error::InvalidParameter(_))
    ));
}
