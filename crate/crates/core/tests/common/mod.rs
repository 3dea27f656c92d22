#![allow(dead_code)]

use bordered_torus::algebra::{Basis, Idempotent, Side};
use bordered_torus::pairing::{box_right, pair_closed, DEFAULT_PATH_CAP};
use bordered_torus::solid_torus::{build_cfa_framed, build_cfa_infinity, SolidTorusSlope};
use bordered_torus::structures::{
    AModule, ChainComplexF2, DDStructure, DStructure, Kind, Structure,
};
use bordered_torus::torus_link::{build_cfdd_full, build_cfdd_simplified};

pub fn slopes() -> Vec<SolidTorusSlope> {
    let mut v = vec![SolidTorusSlope::Infinity];
    v.extend((1..=5).map(SolidTorusSlope::Framed));
    v
}

pub fn dd_fixtures() -> Vec<(String, DDStructure)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("full({n})"), build_cfdd_full(n).unwrap()));
    }
    for n in 2..=8 {
        out.push((
            format!("simplified({n})"),
            build_cfdd_simplified(n).unwrap(),
        ));
    }
    out
}

pub fn module_fixtures() -> Vec<(String, AModule)> {
    let mut out = Vec::new();
    for k in 0..=8 {
        out.push((format!("inf(K={k})"), build_cfa_infinity(k)));
    }
    for m in 1..=8 {
        out.push((format!("framed({m})"), build_cfa_framed(m).unwrap()));
    }
    out
}

/// `H ⊠ full(n)` for n <= 6 and every slope in {inf, 1..5}.
pub fn paired_fixtures() -> Vec<(String, DStructure)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        let s = build_cfdd_full(n).unwrap();
        for slope in slopes() {
            let d = box_right(&slope.module().unwrap(), &s, DEFAULT_PATH_CAP).unwrap();
            out.push((format!("{slope} x full({n})"), d));
        }
    }
    out
}

/// Closed pairings `H_l ⊠ H_r ⊠ full(n)`, including the Hopf lens-space grid.
pub fn closed_fixtures() -> Vec<(String, ChainComplexF2)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let s = build_cfdd_full(n).unwrap();
        for l in 1..=5 {
            for slope in slopes() {
                let left = build_cfa_framed(l).unwrap();
                let c = pair_closed(&left, &slope.module().unwrap(), &s, DEFAULT_PATH_CAP).unwrap();
                out.push((format!("{l} | {slope} x full({n})"), c));
            }
        }
    }
    out
}

fn left(token: &str) -> Basis {
    Basis::parse_on(token, Side::Left).unwrap()
}

fn d_structure(gens: &[(&str, Idempotent)], arrows: &[(&str, &str, &str)]) -> DStructure {
    let mut d = DStructure::over(Side::Left);
    for (g, i) in gens {
        d.add_generator(*g, *i).unwrap();
    }
    for (s, l, t) in arrows {
        d.add_arrow(s, left(l), t).unwrap();
    }
    d
}

/// Arrows rendered as `source label target`, sorted.
pub fn arrow_lines<K: Kind>(s: &Structure<K>) -> Vec<String> {
    let mut v: Vec<String> = s
        .arrows()
        .iter()
        .map(|a| format!("{} {} {}", a.source, s.show_label(a.label), a.target))
        .collect();
    v.sort();
    v
}

/// The trefoil pairing `H_2 ⊠ full(2)` before cancellation: the stable part
/// plus the unstable chain through `q|x1y3`, `q|x3y1` and `q|x2y2`.
pub fn trefoil_unreduced() -> DStructure {
    use Idempotent::{One, Two};
    d_structure(
        &[
            ("p1|ab", One),
            ("p2|ab", One),
            ("q|a_y2", One),
            ("q|x1y1", Two),
            ("q|x3y3", Two),
            ("p1|x2_b", Two),
            ("p2|x2_b", Two),
            ("q|x1y3", Two),
            ("q|x3y1", Two),
            ("q|x2y2", Two),
        ],
        &[
            ("q|x3y3", "r2", "p1|ab"),
            ("q|a_y2", "r3", "q|x3y3"),
            ("q|a_y2", "r1", "q|x1y1"),
            ("p2|ab", "r123", "q|x1y1"),
            ("p1|ab", "r123", "p2|x2_b"),
            ("p2|x2_b", "r23", "q|x1y3"),
            ("p2|x2_b", "r23", "q|x3y1"),
            ("q|x1y3", "i2", "q|x2y2"),
            ("q|x3y1", "i2", "q|x2y2"),
            ("q|x1y3", "r23", "p1|x2_b"),
            ("p1|x2_b", "r2", "p2|ab"),
        ],
    )
}

/// The trefoil after cancellation: stable chain `r2, r3, r1, r123` and
/// unstable chain `r123, r23, r23, r2`.
pub fn trefoil_reduced() -> DStructure {
    use Idempotent::{One, Two};
    d_structure(
        &[
            ("p1|ab", One),
            ("p2|ab", One),
            ("q|a_y2", One),
            ("q|x1y1", Two),
            ("q|x3y3", Two),
            ("p1|x2_b", Two),
            ("p2|x2_b", Two),
            ("q|x1y3", Two),
        ],
        &[
            ("q|x3y3", "r2", "p1|ab"),
            ("q|a_y2", "r3", "q|x3y3"),
            ("q|a_y2", "r1", "q|x1y1"),
            ("p2|ab", "r123", "q|x1y1"),
            ("p1|ab", "r123", "p2|x2_b"),
            ("p2|x2_b", "r23", "q|x1y3"),
            ("q|x1y3", "r23", "p1|x2_b"),
            ("p1|x2_b", "r2", "p2|ab"),
        ],
    )
}

/// The n-cycle `ab -r123-> x2_b -r23-> ... -r23-> x_{2n-2}_b -r2-> ab`, n >= 2.
pub fn infinity_cycle(n: usize) -> DStructure {
    let mut names = vec!["w|ab".to_string()];
    names.extend((1..n).map(|k| format!("w|x{}_b", 2 * k)));
    let mut d = DStructure::over(Side::Left);
    for (i, g) in names.iter().enumerate() {
        let idem = if i == 0 {
            Idempotent::One
        } else {
            Idempotent::Two
        };
        d.add_generator(g.as_str(), idem).unwrap();
    }
    for i in 0..n {
        let label = match (i, i + 1 == n) {
            (0, _) => "r123",
            (_, true) => "r2",
            _ => "r23",
        };
        d.add_arrow(&names[i], left(label), &names[(i + 1) % n])
            .unwrap();
    }
    d
}
