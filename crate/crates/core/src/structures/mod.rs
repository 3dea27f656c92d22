//! Type-D, type-DD structures and F2 chain complexes as labeled directed graphs.
//!
//! All three share one container, [`Structure`], parameterised by a [`Kind`]
//! that fixes what decorates a generator (idempotents) and an arrow (a label).
//! Arrow labels are basis monomials; a sum is stored as parallel arrows, and
//! adding an arrow that is already present removes it (coefficients are mod 2).

mod amodule;
mod complex;
mod iso;
mod morphism;
mod reduce;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;

pub use amodule::{check_a, AModule, ARelationReport, Family, Operation, PrefixStatus};
pub use complex::homology_rank;
pub use iso::isomorphic;
pub use morphism::{compose, d_of_morphism, verify_homotopy, HomotopyReport, Morphism};
pub use reduce::{reduce, reduce_with};

use crate::algebra::{Basis, Idempotent, Side};
use crate::error::{Error, Result};

/// What decorates generators and arrows of a [`Structure`].
pub trait Kind: Clone + fmt::Debug + PartialEq + Eq {
    type Idem: Copy + Ord + Hash + fmt::Debug;
    type Label: Copy + Ord + Hash + fmt::Debug;
    /// Extra data fixed for the whole structure (the algebra side of a type-D structure).
    type Frame: Copy + PartialEq + Eq + fmt::Debug;

    fn mul(a: Self::Label, b: Self::Label) -> Option<Self::Label>;
    fn is_unit(l: Self::Label) -> bool;
    fn unit(i: Self::Idem) -> Self::Label;
    fn coherent(src: Self::Idem, l: Self::Label, tgt: Self::Idem) -> bool;
    fn show_label(frame: Self::Frame, l: Self::Label) -> String;
}

/// Label of a type-DD arrow: a left monomial tensored with a right monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DDLabel {
    pub left: Basis,
    pub right: Basis,
}

impl DDLabel {
    pub fn new(left: Basis, right: Basis) -> Self {
        Self { left, right }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleSided;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneSided;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plain;

impl Kind for DoubleSided {
    type Frame = ();
    type Idem = (Idempotent, Idempotent);
    type Label = DDLabel;

    fn mul(a: DDLabel, b: DDLabel) -> Option<DDLabel> {
        Some(DDLabel {
            left: a.left.mul(b.left)?,
            right: a.right.mul(b.right)?,
        })
    }

    fn is_unit(l: DDLabel) -> bool {
        l.left.is_idempotent() && l.right.is_idempotent()
    }

    fn unit(i: (Idempotent, Idempotent)) -> DDLabel {
        DDLabel {
            left: Basis::Idem(i.0),
            right: Basis::Idem(i.1),
        }
    }

    fn coherent(src: (Idempotent, Idempotent), l: DDLabel, tgt: (Idempotent, Idempotent)) -> bool {
        l.left.runs_between(src.0, tgt.0) && l.right.runs_between(src.1, tgt.1)
    }

    fn show_label(_: (), l: DDLabel) -> String {
        format!(
            "{}*{}",
            l.left.token(Side::Left),
            l.right.token(Side::Right)
        )
    }
}

impl Kind for OneSided {
    type Frame = Side;
    type Idem = Idempotent;
    type Label = Basis;

    fn mul(a: Basis, b: Basis) -> Option<Basis> {
        a.mul(b)
    }

    fn is_unit(l: Basis) -> bool {
        l.is_idempotent()
    }

    fn unit(i: Idempotent) -> Basis {
        Basis::Idem(i)
    }

    fn coherent(src: Idempotent, l: Basis, tgt: Idempotent) -> bool {
        l.runs_between(src, tgt)
    }

    fn show_label(side: Side, l: Basis) -> String {
        l.token(side)
    }
}

impl Kind for Plain {
    type Frame = ();
    type Idem = ();
    type Label = ();

    fn mul(_: (), _: ()) -> Option<()> {
        Some(())
    }

    fn is_unit(_: ()) -> bool {
        true
    }

    fn unit(_: ()) {}

    fn coherent(_: (), _: (), _: ()) -> bool {
        true
    }

    fn show_label(_: (), _: ()) -> String {
        "1".to_string()
    }
}

/// A labeled arrow `source --label--> target`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow<L> {
    pub source: String,
    pub target: String,
    pub label: L,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure<K: Kind> {
    frame: K::Frame,
    generators: BTreeMap<String, K::Idem>,
    arrows: BTreeSet<Arrow<K::Label>>,
}

pub type DDStructure = Structure<DoubleSided>;
pub type DStructure = Structure<OneSided>;
pub type ChainComplexF2 = Structure<Plain>;

impl DDStructure {
    pub fn empty() -> Self {
        Structure::new(())
    }
}

impl DStructure {
    pub fn over(side: Side) -> Self {
        Structure::new(side)
    }

    pub fn side(&self) -> Side {
        self.frame
    }
}

impl ChainComplexF2 {
    pub fn empty() -> Self {
        Structure::new(())
    }
}

impl<K: Kind> Structure<K> {
    pub fn new(frame: K::Frame) -> Self {
        Self {
            frame,
            generators: BTreeMap::new(),
            arrows: BTreeSet::new(),
        }
    }

    pub fn frame(&self) -> K::Frame {
        self.frame
    }

    pub fn add_generator(&mut self, name: impl Into<String>, idem: K::Idem) -> Result<()> {
        let name = name.into();
        if self.generators.contains_key(&name) {
            return Err(Error::DuplicateGenerator(name));
        }
        self.generators.insert(name, idem);
        Ok(())
    }

    /// Adds an arrow mod 2: an arrow already present is removed.
    pub fn add_arrow(&mut self, source: &str, label: K::Label, target: &str) -> Result<()> {
        let s = *self
            .generators
            .get(source)
            .ok_or_else(|| Error::UnknownGenerator(source.to_string()))?;
        let t = *self
            .generators
            .get(target)
            .ok_or_else(|| Error::UnknownGenerator(target.to_string()))?;
        if !K::coherent(s, label, t) {
            return Err(Error::Incoherent(format!(
                "{source} -{}-> {target}",
                K::show_label(self.frame, label)
            )));
        }
        let arrow = Arrow {
            source: source.to_string(),
            target: target.to_string(),
            label,
        };
        if !self.arrows.remove(&arrow) {
            self.arrows.insert(arrow);
        }
        Ok(())
    }

    pub fn generators(&self) -> &BTreeMap<String, K::Idem> {
        &self.generators
    }

    pub fn arrows(&self) -> &BTreeSet<Arrow<K::Label>> {
        &self.arrows
    }

    pub fn idem(&self, name: &str) -> Option<K::Idem> {
        self.generators.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn show_label(&self, l: K::Label) -> String {
        K::show_label(self.frame, l)
    }

    /// Outgoing arrows per generator, in arrow order.
    pub fn adjacency(&self) -> BTreeMap<&str, Vec<(K::Label, &str)>> {
        let mut out: BTreeMap<&str, Vec<(K::Label, &str)>> = self
            .generators
            .keys()
            .map(|k| (k.as_str(), Vec::new()))
            .collect();
        for a in &self.arrows {
            out.entry(a.source.as_str())
                .or_default()
                .push((a.label, a.target.as_str()));
        }
        out
    }

    pub fn has_unit_arrows(&self) -> bool {
        self.arrows.iter().any(|a| K::is_unit(a.label))
    }

    /// Sum over two-step paths of the product labels, grouped by endpoints, mod 2.
    pub fn structure_relation(&self) -> RelationReport<K> {
        let adj = self.adjacency();
        let mut survivors: BTreeMap<(String, String, K::Label), bool> = BTreeMap::new();
        for a in &self.arrows {
            for (l2, z) in &adj[a.target.as_str()] {
                if let Some(p) = K::mul(a.label, *l2) {
                    let e = survivors
                        .entry((a.source.clone(), z.to_string(), p))
                        .or_insert(false);
                    *e = !*e;
                }
            }
        }
        let violations = survivors
            .into_iter()
            .filter(|(_, odd)| *odd)
            .map(|(k, _)| k)
            .collect();
        RelationReport {
            frame: self.frame,
            violations,
        }
    }

    pub(crate) fn from_parts(
        frame: K::Frame,
        generators: BTreeMap<String, K::Idem>,
        arrows: BTreeSet<Arrow<K::Label>>,
    ) -> Self {
        Self {
            frame,
            generators,
            arrows,
        }
    }
}

/// Surviving terms of a quadratic structure relation, as `(source, target, label)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport<K: Kind> {
    frame: K::Frame,
    pub violations: Vec<(String, String, K::Label)>,
}

impl<K: Kind> RelationReport<K> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<K: Kind> fmt::Display for RelationReport<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, z, l) in &self.violations {
            writeln!(f, "{x} -> {z}: {}", K::show_label(self.frame, *l))?;
        }
        Ok(())
    }
}

/// `check_dd`: the type-DD relation (the torus algebra has no differential).
pub fn check_dd(s: &DDStructure) -> RelationReport<DoubleSided> {
    s.structure_relation()
}

/// `check_d`: the type-D relation.
pub fn check_d(s: &DStructure) -> RelationReport<OneSided> {
    s.structure_relation()
}

/// Orders strings treating digit runs as numbers, so `x2y2 < x11y1`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(cb.iter()) {
        let ord = match (da, db) {
            (true, true) => {
                let (ta, tb) = (sa.trim_start_matches('0'), sb.trim_start_matches('0'));
                ta.len()
                    .cmp(&tb.len())
                    .then_with(|| ta.cmp(tb))
                    .then_with(|| sa.len().cmp(&sb.len()))
            }
            _ => sa.cmp(sb),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Chord;

    fn ch(c: Chord) -> Basis {
        Basis::Chord(c)
    }

    fn two_gen(l1: DDLabel, l2: DDLabel) -> DDStructure {
        let mut s = DDStructure::empty();
        s.add_generator("ab", (Idempotent::One, Idempotent::One))
            .unwrap();
        s.add_generator("x1y1", (Idempotent::Two, Idempotent::Two))
            .unwrap();
        s.add_arrow("ab", l1, "x1y1").unwrap();
        s.add_arrow("x1y1", l2, "ab").unwrap();
        s
    }

    #[test]
    fn empty_structure_passes() {
        assert!(check_dd(&DDStructure::empty()).is_ok());
        assert!(check_d(&DStructure::over(Side::Left)).is_ok());
    }

    #[test]
    fn product_vanishing_on_one_side_passes() {
        let s = two_gen(
            DDLabel::new(ch(Chord::C1), ch(Chord::C3)),
            DDLabel::new(ch(Chord::C2), ch(Chord::C2)),
        );
        assert!(check_dd(&s).is_ok());
    }

    #[test]
    fn surviving_term_is_reported() {
        let s = two_gen(
            DDLabel::new(ch(Chord::C1), ch(Chord::C1)),
            DDLabel::new(ch(Chord::C2), ch(Chord::C2)),
        );
        let r = check_dd(&s);
        assert_eq!(
            r.violations,
            vec![(
                "ab".to_string(),
                "ab".to_string(),
                DDLabel::new(ch(Chord::C12), ch(Chord::C12))
            )]
        );
        assert_eq!(r.to_string(), "ab -> ab: r12*s12\n");
    }

    #[test]
    fn type_d_self_loops() {
        let mut d = DStructure::over(Side::Left);
        d.add_generator("x", Idempotent::Two).unwrap();
        d.add_arrow("x", ch(Chord::C23), "x").unwrap();
        assert!(check_d(&d).is_ok());

        let mut d = DStructure::over(Side::Left);
        d.add_generator("x", Idempotent::Two).unwrap();
        d.add_arrow("x", Basis::Idem(Idempotent::Two), "x").unwrap();
        let r = check_d(&d);
        assert_eq!(
            r.violations,
            vec![("x".into(), "x".into(), Basis::Idem(Idempotent::Two))]
        );
    }

    #[test]
    fn incoherent_arrows_are_rejected() {
        let mut s = DDStructure::empty();
        s.add_generator("ab", (Idempotent::One, Idempotent::One))
            .unwrap();
        s.add_generator("x1y1", (Idempotent::Two, Idempotent::Two))
            .unwrap();
        let err = s.add_arrow("ab", DDLabel::new(ch(Chord::C2), ch(Chord::C1)), "x1y1");
        assert!(matches!(err, Err(Error::Incoherent(_))));
        assert!(matches!(
            s.add_generator("ab", (Idempotent::One, Idempotent::One)),
            Err(Error::DuplicateGenerator(_))
        ));
    }

    #[test]
    fn arrows_cancel_mod_two() {
        let mut s = DDStructure::empty();
        s.add_generator("x1y3", (Idempotent::Two, Idempotent::Two))
            .unwrap();
        s.add_generator("x2y2", (Idempotent::Two, Idempotent::Two))
            .unwrap();
        let u = DoubleSided::unit((Idempotent::Two, Idempotent::Two));
        s.add_arrow("x1y3", u, "x2y2").unwrap();
        s.add_arrow("x1y3", u, "x2y2").unwrap();
        assert!(s.arrows().is_empty());
    }

    #[test]
    fn natural_order() {
        let mut v = vec!["x11y1", "x2y2", "x1y11", "x1y3", "ab", "a_y10", "a_y2"];
        v.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(
            v,
            vec!["a_y2", "a_y10", "ab", "x1y3", "x1y11", "x2y2", "x11y1"]
        );
    }
}
