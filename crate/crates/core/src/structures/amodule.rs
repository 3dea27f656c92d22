use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{Chord, Idempotent};
use crate::error::{Error, Result};

/// One table entry `m(source, chords...) = target`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Operation {
    pub source: String,
    pub chords: Vec<Chord>,
    pub target: String,
}

impl Operation {
    /// The `k` of `m_k`: chord inputs plus the module input.
    pub fn arity(&self) -> usize {
        self.chords.len() + 1
    }
}

/// A parametric run of operations
/// `m(source, prefix, repeat^k, suffix) = target` for every `k >= min_repeat`.
///
/// `cap` bounds the instances that path enumeration may rely on; the
/// relation checker matches every `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family {
    pub source: String,
    pub prefix: Vec<Chord>,
    pub repeat: Vec<Chord>,
    pub suffix: Vec<Chord>,
    pub min_repeat: usize,
    pub cap: usize,
    pub target: String,
}

/// Whether a chord sequence can still grow into some operation of a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrefixStatus {
    None,
    WithinCap,
    /// Only family instances above their cap extend the sequence.
    BeyondCapOnly,
}

impl Family {
    pub fn instance(&self, k: usize) -> Vec<Chord> {
        let mut v = self.prefix.clone();
        for _ in 0..k {
            v.extend_from_slice(&self.repeat);
        }
        v.extend_from_slice(&self.suffix);
        v
    }

    /// Repetition counts worth testing against a sequence of length `len`;
    /// beyond the last one every instance agrees with it on the first `len` chords.
    fn candidate_counts(&self, len: usize) -> std::ops::RangeInclusive<usize> {
        if self.repeat.is_empty() {
            return self.min_repeat..=self.min_repeat;
        }
        let span = len
            .saturating_sub(self.prefix.len())
            .div_ceil(self.repeat.len());
        self.min_repeat..=span.max(self.min_repeat)
    }

    /// The repetition count `k` with `instance(k) == seq`, if any.
    pub fn matches(&self, seq: &[Chord]) -> Option<usize> {
        self.candidate_counts(seq.len())
            .find(|&k| self.instance(k) == seq)
    }

    pub fn prefix_status(&self, seq: &[Chord]) -> PrefixStatus {
        let least = self
            .candidate_counts(seq.len())
            .find(|&k| self.instance(k).starts_with(seq));
        match least {
            None => PrefixStatus::None,
            Some(k) if k <= self.cap => PrefixStatus::WithinCap,
            Some(_) => PrefixStatus::BeyondCapOnly,
        }
    }
}

/// A one-sided A∞ module over the torus algebra with `m_1 = 0`. Each generator
/// carries the idempotent class that chord inputs must start from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AModule {
    generators: BTreeMap<String, Idempotent>,
    operations: BTreeSet<Operation>,
    families: Vec<Family>,
}

impl AModule {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_generator(&mut self, name: impl Into<String>, class: Idempotent) -> Result<()> {
        let name = name.into();
        if self.generators.contains_key(&name) {
            return Err(Error::DuplicateGenerator(name));
        }
        self.generators.insert(name, class);
        Ok(())
    }

    fn check_sequence(&self, source: &str, chords: &[Chord], target: &str) -> Result<()> {
        let s = *self
            .generators
            .get(source)
            .ok_or_else(|| Error::UnknownGenerator(source.to_string()))?;
        let t = *self
            .generators
            .get(target)
            .ok_or_else(|| Error::UnknownGenerator(target.to_string()))?;
        let shown = || format!("m({source}, {}) = {target}", show_chords(chords));
        let (Some(first), Some(last)) = (chords.first(), chords.last()) else {
            return Err(Error::Incoherent(shown()));
        };
        let chained = chords
            .windows(2)
            .all(|w| w[0].right_idem() == w[1].left_idem());
        if first.left_idem() != s || last.right_idem() != t || !chained {
            return Err(Error::Incoherent(shown()));
        }
        Ok(())
    }

    /// Adds a table entry mod 2.
    pub fn add_operation(&mut self, source: &str, chords: &[Chord], target: &str) -> Result<()> {
        self.check_sequence(source, chords, target)?;
        let op = Operation {
            source: source.to_string(),
            chords: chords.to_vec(),
            target: target.to_string(),
        };
        if !self.operations.remove(&op) {
            self.operations.insert(op);
        }
        Ok(())
    }

    pub fn add_family(&mut self, family: Family) -> Result<()> {
        self.check_sequence(
            &family.source,
            &family.instance(family.min_repeat),
            &family.target,
        )?;
        self.check_sequence(
            &family.source,
            &family.instance(family.min_repeat + 1),
            &family.target,
        )?;
        self.families.push(family);
        self.families.sort();
        Ok(())
    }

    pub fn generators(&self) -> &BTreeMap<String, Idempotent> {
        &self.generators
    }

    pub fn class(&self, name: &str) -> Option<Idempotent> {
        self.generators.get(name).copied()
    }

    /// Explicit table entries, without family instances.
    pub fn operations(&self) -> &BTreeSet<Operation> {
        &self.operations
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    /// Table entries plus every family instance up to its cap, reduced mod 2.
    pub fn expanded_operations(&self) -> BTreeSet<Operation> {
        let mut out = self.operations.clone();
        for f in &self.families {
            for k in f.min_repeat..=f.cap.max(f.min_repeat) {
                let op = Operation {
                    source: f.source.clone(),
                    chords: f.instance(k),
                    target: f.target.clone(),
                };
                if !out.remove(&op) {
                    out.insert(op);
                }
            }
        }
        out
    }

    /// Longest chord input among the expanded operations.
    pub fn longest_sequence(&self) -> usize {
        self.expanded_operations()
            .iter()
            .map(|o| o.chords.len())
            .max()
            .unwrap_or(0)
    }

    /// Largest `k` with some `m_k` nonzero; the module element counts as an input.
    pub fn max_arity(&self) -> usize {
        self.expanded_operations()
            .iter()
            .map(Operation::arity)
            .max()
            .unwrap_or(0)
    }

    /// `m(x, seq)` as a mod-2 set of targets.
    pub fn apply<'a>(&'a self, x: &str, seq: &[Chord]) -> Vec<String> {
        let mut acc: BTreeMap<&str, bool> = BTreeMap::new();
        let mut toggle = |t: &'a str| {
            let e = acc.entry(t).or_insert(false);
            *e = !*e;
        };
        for op in self
            .operations
            .iter()
            .filter(|o| o.source == x && o.chords == seq)
        {
            toggle(&op.target);
        }
        for f in self.families.iter().filter(|f| f.source == x) {
            if f.matches(seq).is_some() {
                toggle(&f.target);
            }
        }
        acc.into_iter()
            .filter(|(_, odd)| *odd)
            .map(|(k, _)| k.to_string())
            .collect()
    }

    pub fn prefix_status(&self, x: &str, seq: &[Chord]) -> PrefixStatus {
        if self
            .operations
            .iter()
            .any(|o| o.source == x && o.chords.starts_with(seq))
        {
            return PrefixStatus::WithinCap;
        }
        let mut status = PrefixStatus::None;
        for f in self.families.iter().filter(|f| f.source == x) {
            match f.prefix_status(seq) {
                PrefixStatus::WithinCap => return PrefixStatus::WithinCap,
                PrefixStatus::BeyondCapOnly => status = PrefixStatus::BeyondCapOnly,
                PrefixStatus::None => {}
            }
        }
        status
    }
}

pub(crate) fn show_chords(chords: &[Chord]) -> String {
    chords
        .iter()
        .map(|c| c.interval())
        .collect::<Vec<_>>()
        .join(",")
}

/// Violations of the A∞ relation, as `(generator, sequence, surviving outputs)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ARelationReport {
    pub checked: usize,
    pub violations: Vec<(String, Vec<Chord>, Vec<String>)>,
}

impl ARelationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ARelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, seq, out) in &self.violations {
            writeln!(f, "{x}; ({}) -> {}", show_chords(seq), out.join(" + "))?;
        }
        Ok(())
    }
}

/// Checks the A∞ relation of a module with `m_1 = 0` over an algebra with
/// `μ_1 = 0`, on every composable chord sequence of length at most `cap`
/// (default: longest operation plus two).
///
/// A term of the relation on `(x, seq)` is nonzero only if `seq` is two
/// operations back to back, or one operation with a chord split into two
/// factors, so only those sequences are evaluated.
pub fn check_a(m: &AModule, cap: Option<usize>) -> ARelationReport {
    let cap = cap.unwrap_or_else(|| m.longest_sequence() + 2);
    let mut report = ARelationReport::default();
    for (x, seq) in candidates(m, cap) {
        report.checked += 1;
        let out = relation_terms(m, &x, &seq);
        if !out.is_empty() {
            report.violations.push((x, seq, out));
        }
    }
    report
}

/// Table entries and every family instance with at most `cap` chords.
fn operations_up_to(m: &AModule, cap: usize) -> Vec<Operation> {
    let mut ops: Vec<Operation> = m
        .operations
        .iter()
        .filter(|o| o.chords.len() <= cap)
        .cloned()
        .collect();
    for f in &m.families {
        for k in f.min_repeat.. {
            let chords = f.instance(k);
            if chords.len() > cap {
                break;
            }
            ops.push(Operation {
                source: f.source.clone(),
                chords,
                target: f.target.clone(),
            });
            if f.repeat.is_empty() {
                break;
            }
        }
    }
    ops
}

fn candidates(m: &AModule, cap: usize) -> BTreeSet<(String, Vec<Chord>)> {
    let ops = operations_up_to(m, cap);
    let mut out = BTreeSet::new();
    for first in &ops {
        for second in ops.iter().filter(|o| o.source == first.target) {
            if first.chords.len() + second.chords.len() <= cap {
                let mut seq = first.chords.clone();
                seq.extend_from_slice(&second.chords);
                out.insert((first.source.clone(), seq));
            }
        }
        if first.chords.len() < cap {
            for (i, c) in first.chords.iter().enumerate() {
                for (a, b) in factorizations(*c) {
                    let mut seq = first.chords[..i].to_vec();
                    seq.push(a);
                    seq.push(b);
                    seq.extend_from_slice(&first.chords[i + 1..]);
                    out.insert((first.source.clone(), seq));
                }
            }
        }
    }
    out
}

fn factorizations(c: Chord) -> impl Iterator<Item = (Chord, Chord)> {
    Chord::ALL
        .into_iter()
        .flat_map(|a| Chord::ALL.into_iter().map(move |b| (a, b)))
        .filter(move |(a, b)| a.concat(*b) == Some(c))
}

fn relation_terms(m: &AModule, x: &str, seq: &[Chord]) -> Vec<String> {
    let mut acc: BTreeMap<String, bool> = BTreeMap::new();
    let mut add = |ys: Vec<String>| {
        for y in ys {
            let e = acc.entry(y).or_insert(false);
            *e = !*e;
        }
    };
    for i in 1..seq.len() {
        for y in m.apply(x, &seq[..i]) {
            add(m.apply(&y, &seq[i..]));
        }
    }
    for i in 0..seq.len().saturating_sub(1) {
        if let Some(p) = seq[i].concat(seq[i + 1]) {
            let mut merged = seq[..i].to_vec();
            merged.push(p);
            merged.extend_from_slice(&seq[i + 2..]);
            add(m.apply(x, &merged));
        }
    }
    acc.into_iter()
        .filter(|(_, odd)| *odd)
        .map(|(k, _)| k)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Chord::*;

    fn loop_family(cap: usize) -> AModule {
        let mut m = AModule::new();
        m.add_generator("w", Idempotent::One).unwrap();
        m.add_family(Family {
            source: "w".into(),
            prefix: vec![C3],
            repeat: vec![C23],
            suffix: vec![C2],
            min_repeat: 0,
            cap,
            target: "w".into(),
        })
        .unwrap();
        m
    }

    #[test]
    fn family_matching_and_prefixes() {
        let m = loop_family(2);
        let f = &m.families()[0];
        assert_eq!(f.matches(&[C3, C2]), Some(0));
        assert_eq!(f.matches(&[C3, C23, C23, C23, C2]), Some(3));
        assert_eq!(f.matches(&[C3, C23]), None);
        assert_eq!(f.prefix_status(&[C3, C23, C23]), PrefixStatus::WithinCap);
        assert_eq!(
            f.prefix_status(&[C3, C23, C23, C23]),
            PrefixStatus::BeyondCapOnly
        );
        assert_eq!(f.prefix_status(&[C2]), PrefixStatus::None);
        assert_eq!(m.expanded_operations().len(), 3);
        assert_eq!(m.longest_sequence(), 4);
        assert_eq!(m.max_arity(), 5);
    }

    #[test]
    fn hand_built_violation() {
        let mut m = AModule::new();
        m.add_generator("x", Idempotent::One).unwrap();
        m.add_generator("y", Idempotent::Two).unwrap();
        m.add_generator("z", Idempotent::One).unwrap();
        m.add_operation("x", &[C1], "y").unwrap();
        m.add_operation("x", &[C12], "z").unwrap();
        let r = check_a(&m, Some(3));
        assert!(!r.is_ok());
        assert!(r
            .violations
            .contains(&("x".into(), vec![C1, C2], vec!["z".into()])));
    }

    #[test]
    fn incoherent_operations_are_rejected() {
        let mut m = AModule::new();
        m.add_generator("x", Idempotent::One).unwrap();
        assert!(matches!(
            m.add_operation("x", &[C2], "x"),
            Err(Error::Incoherent(_))
        ));
        assert!(matches!(
            m.add_operation("x", &[C1, C3], "x"),
            Err(Error::Incoherent(_))
        ));
        assert!(matches!(
            m.add_operation("x", &[], "x"),
            Err(Error::Incoherent(_))
        ));
    }

    #[test]
    fn empty_module_passes() {
        assert!(check_a(&AModule::new(), None).is_ok());
    }

    fn exhaustive(m: &AModule, cap: usize) -> Vec<(String, Vec<Chord>, Vec<String>)> {
        fn walk(
            m: &AModule,
            x: &str,
            at: Idempotent,
            cap: usize,
            seq: &mut Vec<Chord>,
            out: &mut Vec<(String, Vec<Chord>, Vec<String>)>,
        ) {
            if seq.len() == cap {
                return;
            }
            for c in Chord::ALL.into_iter().filter(|c| c.left_idem() == at) {
                seq.push(c);
                let terms = relation_terms(m, x, seq);
                if !terms.is_empty() {
                    out.push((x.to_string(), seq.clone(), terms));
                }
                walk(m, x, c.right_idem(), cap, seq, out);
                seq.pop();
            }
        }
        let mut out = Vec::new();
        for (x, class) in m.generators() {
            walk(m, x, *class, cap, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }

    #[test]
    fn pruned_search_agrees_with_exhaustive_search() {
        use crate::solid_torus::{build_cfa_framed, build_cfa_infinity};
        let mut modules: Vec<AModule> = (0..=3).map(build_cfa_infinity).collect();
        modules.extend((1..=4).map(|m| build_cfa_framed(m).unwrap()));
        modules.push(loop_family(1));
        for m in modules {
            let cap = m.longest_sequence() + 2;
            let mut fast = check_a(&m, Some(cap)).violations;
            fast.sort();
            assert_eq!(fast, exhaustive(&m, cap));
        }
    }
}
