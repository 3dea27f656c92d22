use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{Arrow, Kind, Structure};
use crate::error::{Error, Result};

/// A morphism between two structures of the same kind, stored as labeled arrows
/// from generators of the source to generators of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<K: Kind> {
    frame: K::Frame,
    source: BTreeMap<String, K::Idem>,
    target: BTreeMap<String, K::Idem>,
    arrows: BTreeSet<Arrow<K::Label>>,
}

impl<K: Kind> Morphism<K> {
    pub fn zero(from: &Structure<K>, to: &Structure<K>) -> Self {
        Self {
            frame: from.frame(),
            source: from.generators().clone(),
            target: to.generators().clone(),
            arrows: BTreeSet::new(),
        }
    }

    pub fn identity(s: &Structure<K>) -> Self {
        let mut m = Self::zero(s, s);
        for (name, idem) in s.generators() {
            m.arrows.insert(Arrow {
                source: name.clone(),
                target: name.clone(),
                label: K::unit(*idem),
            });
        }
        m
    }

    /// Adds an arrow mod 2.
    pub fn add_arrow(&mut self, source: &str, label: K::Label, target: &str) -> Result<()> {
        let s = *self
            .source
            .get(source)
            .ok_or_else(|| Error::UnknownGenerator(source.to_string()))?;
        let t = *self
            .target
            .get(target)
            .ok_or_else(|| Error::UnknownGenerator(target.to_string()))?;
        if !K::coherent(s, label, t) {
            return Err(Error::Incoherent(format!(
                "{source} -{}-> {target}",
                K::show_label(self.frame, label)
            )));
        }
        let a = Arrow {
            source: source.to_string(),
            target: target.to_string(),
            label,
        };
        if !self.arrows.remove(&a) {
            self.arrows.insert(a);
        }
        Ok(())
    }

    /// Removes an arrow if present; returns whether it was there.
    pub fn remove_arrow(&mut self, source: &str, label: K::Label, target: &str) -> bool {
        self.arrows.remove(&Arrow {
            source: source.to_string(),
            target: target.to_string(),
            label,
        })
    }

    pub fn arrows(&self) -> &BTreeSet<Arrow<K::Label>> {
        &self.arrows
    }

    pub fn is_zero(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source_generators(&self) -> &BTreeMap<String, K::Idem> {
        &self.source
    }

    pub fn target_generators(&self) -> &BTreeMap<String, K::Idem> {
        &self.target
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::StructureMismatch(
                "summands have different source or target".into(),
            ));
        }
        let mut out = self.clone();
        out.arrows = self
            .arrows
            .symmetric_difference(&other.arrows)
            .cloned()
            .collect();
        Ok(out)
    }

    fn with_arrows(
        &self,
        source: &BTreeMap<String, K::Idem>,
        target: &BTreeMap<String, K::Idem>,
    ) -> Self {
        Self {
            frame: self.frame,
            source: source.clone(),
            target: target.clone(),
            arrows: BTreeSet::new(),
        }
    }
}

impl<K: Kind> fmt::Display for Morphism<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.arrows {
            writeln!(
                f,
                "{} -> {}: {}",
                a.source,
                a.target,
                K::show_label(self.frame, a.label)
            )?;
        }
        Ok(())
    }
}

/// Sum over composable pairs `first` then `second`, labels multiplied in that order, mod 2.
pub(crate) fn path_sum<K: Kind>(
    first: &BTreeSet<Arrow<K::Label>>,
    second: &BTreeSet<Arrow<K::Label>>,
) -> BTreeSet<Arrow<K::Label>> {
    let mut by_source: BTreeMap<&str, Vec<&Arrow<K::Label>>> = BTreeMap::new();
    for a in second {
        by_source.entry(a.source.as_str()).or_default().push(a);
    }
    let mut out = BTreeSet::new();
    for a in first {
        for b in by_source.get(a.target.as_str()).into_iter().flatten() {
            if let Some(label) = K::mul(a.label, b.label) {
                let c = Arrow {
                    source: a.source.clone(),
                    target: b.target.clone(),
                    label,
                };
                if !out.remove(&c) {
                    out.insert(c);
                }
            }
        }
    }
    out
}

fn sym_diff<L: Clone + Ord>(a: BTreeSet<Arrow<L>>, b: BTreeSet<Arrow<L>>) -> BTreeSet<Arrow<L>> {
    a.symmetric_difference(&b).cloned().collect()
}

/// `g ∘ f`: apply `f` first, then `g`.
pub fn compose<K: Kind>(g: &Morphism<K>, f: &Morphism<K>) -> Result<Morphism<K>> {
    if f.target != g.source {
        return Err(Error::StructureMismatch(
            "target of the first map is not the source of the second".into(),
        ));
    }
    let mut out = f.with_arrows(&f.source, &g.target);
    out.arrows = path_sum::<K>(&f.arrows, &g.arrows);
    Ok(out)
}

/// `d(h) = h ∘ δ_M + δ_N ∘ h`; zero exactly when `h` is a chain map.
pub fn d_of_morphism<K: Kind>(
    h: &Morphism<K>,
    m: &Structure<K>,
    n: &Structure<K>,
) -> Result<Morphism<K>> {
    if &h.source != m.generators()
        || &h.target != n.generators()
        || h.frame != m.frame()
        || m.frame() != n.frame()
    {
        return Err(Error::StructureMismatch(
            "morphism does not run between the given structures".into(),
        ));
    }
    let mut out = h.with_arrows(&h.source, &h.target);
    out.arrows = sym_diff(
        path_sum::<K>(m.arrows(), &h.arrows),
        path_sum::<K>(&h.arrows, n.arrows()),
    );
    Ok(out)
}

/// Itemized outcome of checking that `F: M -> N`, `G: N -> M` and `H: M -> M`
/// form a homotopy equivalence with `F ∘ G = id_N`.
#[derive(Clone, Debug)]
pub struct HomotopyReport<K: Kind> {
    pub d_f: Morphism<K>,
    pub d_g: Morphism<K>,
    /// `F ∘ G + id_N`
    pub fg_defect: Morphism<K>,
    /// `G ∘ F + id_M + d(H)`
    pub gf_defect: Morphism<K>,
}

impl<K: Kind> HomotopyReport<K> {
    pub fn is_ok(&self) -> bool {
        self.d_f.is_zero()
            && self.d_g.is_zero()
            && self.fg_defect.is_zero()
            && self.gf_defect.is_zero()
    }
}

impl<K: Kind> fmt::Display for HomotopyReport<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = [
            ("d(F) = 0", &self.d_f),
            ("d(G) = 0", &self.d_g),
            ("F∘G = id", &self.fg_defect),
            ("G∘F + id = d(H)", &self.gf_defect),
        ];
        for (name, m) in items {
            if m.is_zero() {
                writeln!(f, "{name}: ok")?;
            } else {
                writeln!(f, "{name}: {} surviving terms", m.arrows().len())?;
                for line in m.to_string().lines() {
                    writeln!(f, "  {line}")?;
                }
            }
        }
        Ok(())
    }
}

pub fn verify_homotopy<K: Kind>(
    f: &Morphism<K>,
    g: &Morphism<K>,
    h: &Morphism<K>,
    m: &Structure<K>,
    n: &Structure<K>,
) -> Result<HomotopyReport<K>> {
    let d_f = d_of_morphism(f, m, n)?;
    let d_g = d_of_morphism(g, n, m)?;
    let fg_defect = compose(f, g)?.plus(&Morphism::identity(n))?;
    let gf_defect = compose(g, f)?
        .plus(&Morphism::identity(m))?
        .plus(&d_of_morphism(h, m, m)?)?;
    Ok(HomotopyReport {
        d_f,
        d_g,
        fg_defect,
        gf_defect,
    })
}
