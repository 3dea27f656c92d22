//! Box tensor products of an A∞ module with type-DD and type-D structures.
//!
//! An arrow out of `x ⊗ y` comes from a directed path out of `y`: either a
//! single step whose glued-side label is an idempotent, or a path whose
//! glued-side labels are all chords and spell an operation `m(x, ...) = x'`.
//! The kept-side labels along the path are multiplied.

use std::collections::BTreeMap;

use crate::algebra::{Basis, Chord, Idempotent, Side};
use crate::error::{Error, Result};
use crate::structures::{AModule, ChainComplexF2, DDStructure, DStructure, PrefixStatus};

pub const DEFAULT_PATH_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingConfig {
    /// The algebra copy the A∞ module is glued along.
    pub side: Side,
    /// Longest glued-side chord sequence a path may accumulate.
    pub path_cap: usize,
}

impl PairingConfig {
    pub fn new(side: Side) -> Self {
        Self {
            side,
            path_cap: DEFAULT_PATH_CAP,
        }
    }

    pub fn with_cap(self, path_cap: usize) -> Self {
        Self { path_cap, ..self }
    }
}

impl Default for PairingConfig {
    fn default() -> Self {
        Self::new(Side::Right)
    }
}

pub fn generator_name(x: &str, y: &str) -> String {
    format!("{x}|{y}")
}

/// Outgoing arrows split into (glued-side label, kept-side label, target).
type Split<'a, R> = BTreeMap<&'a str, Vec<(Basis, R, &'a str)>>;

struct Search<'a, R> {
    a: &'a AModule,
    out: &'a Split<'a, R>,
    mul: fn(R, R) -> Option<R>,
    cap: usize,
    found: Vec<(String, R, String)>,
}

impl<'a, R: Copy> Search<'a, R> {
    fn start(&mut self, x: &str, y: &str) -> Result<()> {
        let source = generator_name(x, y);
        for &(glued, kept, y1) in &self.out[y] {
            if glued.is_idempotent() {
                self.found
                    .push((source.clone(), kept, generator_name(x, y1)));
            }
        }
        let mut seq = Vec::new();
        self.extend(x, &source, y, None, &mut seq)
    }

    fn extend(
        &mut self,
        x: &str,
        source: &str,
        node: &str,
        kept: Option<R>,
        seq: &mut Vec<Chord>,
    ) -> Result<()> {
        if let Some(k) = kept {
            for x1 in self.a.apply(x, seq) {
                self.found
                    .push((source.to_string(), k, generator_name(&x1, node)));
            }
        }
        for &(glued, label, next) in &self.out[node] {
            let Some(c) = glued.chord() else { continue };
            seq.push(c);
            let status = self.a.prefix_status(x, seq);
            if status == PrefixStatus::BeyondCapOnly {
                return Err(Error::CapExceeded(format!(
                    "family cap reached from {source} along {} chords",
                    seq.len()
                )));
            }
            if status == PrefixStatus::WithinCap {
                if seq.len() > self.cap {
                    return Err(Error::CapExceeded(format!(
                        "path cap {} reached from {source}",
                        self.cap
                    )));
                }
                let product = match kept {
                    None => Some(label),
                    Some(k) => (self.mul)(k, label),
                };
                if let Some(p) = product {
                    self.extend(x, source, next, Some(p), seq)?;
                }
            }
            seq.pop();
        }
        Ok(())
    }
}

fn run<R: Copy>(
    a: &AModule,
    glued: &BTreeMap<&str, Idempotent>,
    out: &Split<'_, R>,
    mul: fn(R, R) -> Option<R>,
    cap: usize,
) -> Result<Vec<(String, R, String)>> {
    let mut search = Search {
        a,
        out,
        mul,
        cap,
        found: Vec::new(),
    };
    for (x, class) in a.generators() {
        for (y, _) in glued.iter().filter(|(_, g)| *g == class) {
            search.start(x, y)?;
        }
    }
    Ok(search.found)
}

/// Reorders a (left, right) pair as (glued, kept).
fn orient<T>(side: Side, (l, r): (T, T)) -> (T, T) {
    if side == Side::Right {
        (r, l)
    } else {
        (l, r)
    }
}

/// `A ⊠ S` with `A` glued along `cfg.side`; the result is a type-D structure
/// over the other side.
pub fn box_dd(a: &AModule, s: &DDStructure, cfg: &PairingConfig) -> Result<DStructure> {
    let glued: BTreeMap<&str, Idempotent> = s
        .generators()
        .iter()
        .map(|(y, i)| (y.as_str(), orient(cfg.side, *i).0))
        .collect();
    let mut out: Split<'_, Basis> = glued.keys().map(|y| (*y, Vec::new())).collect();
    for arrow in s.arrows() {
        let (g, k) = orient(cfg.side, (arrow.label.left, arrow.label.right));
        out.get_mut(arrow.source.as_str())
            .unwrap()
            .push((g, k, arrow.target.as_str()));
    }

    let mut d = DStructure::over(cfg.side.other());
    for (x, class) in a.generators() {
        for (y, i) in s.generators() {
            let (g, k) = orient(cfg.side, *i);
            if g == *class {
                d.add_generator(generator_name(x, y), k)?;
            }
        }
    }
    for (src, label, tgt) in run(a, &glued, &out, Basis::mul, cfg.path_cap)? {
        d.add_arrow(&src, label, &tgt)?;
    }
    Ok(d)
}

/// `A ⊠ S` with `A` glued on the right copy of the algebra.
pub fn box_right(a: &AModule, s: &DDStructure, path_cap: usize) -> Result<DStructure> {
    box_dd(a, s, &PairingConfig::new(Side::Right).with_cap(path_cap))
}

/// `A ⊠ D` for a type-D structure over the side `A` is glued along.
pub fn box_d(a: &AModule, d: &DStructure, cfg: &PairingConfig) -> Result<ChainComplexF2> {
    if d.side() != cfg.side {
        return Err(Error::StructureMismatch(format!(
            "type-D structure lives over the {} algebra, module is glued on the {}",
            d.side(),
            cfg.side
        )));
    }
    let glued: BTreeMap<&str, Idempotent> = d
        .generators()
        .iter()
        .map(|(y, i)| (y.as_str(), *i))
        .collect();
    let mut out: Split<'_, ()> = glued.keys().map(|y| (*y, Vec::new())).collect();
    for arrow in d.arrows() {
        out.get_mut(arrow.source.as_str())
            .unwrap()
            .push((arrow.label, (), arrow.target.as_str()));
    }
    let mut c = ChainComplexF2::empty();
    for (x, class) in a.generators() {
        for (y, i) in d.generators() {
            if i == class {
                c.add_generator(generator_name(x, y), ())?;
            }
        }
    }
    for (src, (), tgt) in run(a, &glued, &out, |_, _| Some(()), cfg.path_cap)? {
        c.add_arrow(&src, (), &tgt)?;
    }
    Ok(c)
}

/// `A ⊠ D` for a type-D structure over the left algebra.
pub fn box_left(a: &AModule, d: &DStructure, path_cap: usize) -> Result<ChainComplexF2> {
    box_d(a, d, &PairingConfig::new(Side::Left).with_cap(path_cap))
}

/// Closes both boundaries: `left ⊠ (right ⊠ S)`.
pub fn pair_closed(
    left: &AModule,
    right: &AModule,
    s: &DDStructure,
    path_cap: usize,
) -> Result<ChainComplexF2> {
    box_left(left, &box_right(right, s, path_cap)?, path_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solid_torus::{build_cfa_framed, build_cfa_infinity};
    use crate::structures::{check_d, homology_rank};
    use crate::torus_link::build_cfdd_full;

    #[test]
    fn arrowless_type_d_gives_arrowless_complex() {
        let mut d = DStructure::over(Side::Left);
        d.add_generator("y", Idempotent::Two).unwrap();
        let c = box_left(&build_cfa_framed(1).unwrap(), &d, DEFAULT_PATH_CAP).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.arrows().is_empty());
    }

    #[test]
    fn infinity_pairing_first_arrows() {
        let d = box_right(
            &build_cfa_infinity(16),
            &build_cfdd_full(3).unwrap(),
            DEFAULT_PATH_CAP,
        )
        .unwrap();
        assert_eq!(d.len(), 3);
        let shown: Vec<String> = d
            .arrows()
            .iter()
            .map(|a| format!("{} {} {}", a.source, d.show_label(a.label), a.target))
            .collect();
        assert!(shown.contains(&"w|ab r123 w|x2_b".to_string()), "{shown:?}");
        assert!(
            shown.contains(&"w|x2_b r23 w|x4_b".to_string()),
            "{shown:?}"
        );
        assert!(check_d(&d).is_ok());
    }

    #[test]
    fn side_mismatch_is_rejected() {
        let d = DStructure::over(Side::Right);
        assert!(matches!(
            box_left(&build_cfa_framed(1).unwrap(), &d, 8),
            Err(Error::StructureMismatch(_))
        ));
    }

    #[test]
    fn short_cap_is_exceeded() {
        let r = box_right(
            &build_cfa_framed(2).unwrap(),
            &build_cfdd_full(2).unwrap(),
            2,
        );
        assert!(matches!(r, Err(Error::CapExceeded(_))));
    }

    #[test]
    fn smallest_hopf_pairing() {
        let one = build_cfa_framed(1).unwrap();
        let c = pair_closed(&one, &one, &build_cfdd_full(1).unwrap(), DEFAULT_PATH_CAP).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.arrows().len(), 1);
        assert_eq!(homology_rank(&c).unwrap(), 0);
    }
}
