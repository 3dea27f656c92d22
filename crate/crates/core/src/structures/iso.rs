use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{natural_cmp, Kind, Structure};

type Signature<K> = (
    <K as Kind>::Idem,
    Vec<<K as Kind>::Label>,
    Vec<<K as Kind>::Label>,
);

fn signatures<K: Kind>(s: &Structure<K>) -> BTreeMap<&str, Signature<K>> {
    let mut sig: BTreeMap<&str, Signature<K>> = s
        .generators()
        .iter()
        .map(|(n, i)| (n.as_str(), (*i, Vec::new(), Vec::new())))
        .collect();
    for a in s.arrows() {
        sig.get_mut(a.source.as_str()).unwrap().1.push(a.label);
        sig.get_mut(a.target.as_str()).unwrap().2.push(a.label);
    }
    for v in sig.values_mut() {
        v.1.sort();
        v.2.sort();
    }
    sig
}

/// Visit order for backtracking: breadth-first over the underlying undirected
/// graph, so each new generator is adjacent to already-placed ones when possible.
fn visit_order<K: Kind>(s: &Structure<K>) -> Vec<&str> {
    let mut nbrs: BTreeMap<&str, BTreeSet<&str>> = s
        .generators()
        .keys()
        .map(|k| (k.as_str(), BTreeSet::new()))
        .collect();
    for a in s.arrows() {
        nbrs.get_mut(a.source.as_str())
            .unwrap()
            .insert(a.target.as_str());
        nbrs.get_mut(a.target.as_str())
            .unwrap()
            .insert(a.source.as_str());
    }
    let mut roots: Vec<&str> = nbrs.keys().copied().collect();
    roots.sort_by(|a, b| natural_cmp(a, b));
    let mut seen = BTreeSet::new();
    let mut order = Vec::new();
    for r in roots {
        if !seen.insert(r) {
            continue;
        }
        let mut q = VecDeque::from([r]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for &w in &nbrs[v] {
                if seen.insert(w) {
                    q.push_back(w);
                }
            }
        }
    }
    order
}

/// Arrows touching each generator, as `(source, label, target)`.
type Incident<'a, L> = BTreeMap<&'a str, Vec<(&'a str, L, &'a str)>>;

/// Finds a bijection of generators preserving idempotents and carrying the
/// arrow set of `a` exactly onto that of `b`.
pub fn isomorphic<K: Kind>(a: &Structure<K>, b: &Structure<K>) -> Option<BTreeMap<String, String>> {
    if a.frame() != b.frame() || a.len() != b.len() || a.arrows().len() != b.arrows().len() {
        return None;
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut ms: Vec<&Signature<K>> = sa.values().collect();
    let mut ns: Vec<&Signature<K>> = sb.values().collect();
    ms.sort();
    ns.sort();
    if ms != ns {
        return None;
    }
    let b_arrows: BTreeSet<(&str, K::Label, &str)> = b
        .arrows()
        .iter()
        .map(|x| (x.source.as_str(), x.label, x.target.as_str()))
        .collect();
    let a_adj: Incident<'_, K::Label> = {
        let mut m: BTreeMap<&str, Vec<_>> = BTreeMap::new();
        for x in a.arrows() {
            let e = (x.source.as_str(), x.label, x.target.as_str());
            m.entry(e.0).or_default().push(e);
            if e.0 != e.2 {
                m.entry(e.2).or_default().push(e);
            }
        }
        m
    };
    let mut candidates: Vec<&str> = b.generators().keys().map(|k| k.as_str()).collect();
    candidates.sort_by(|x, y| natural_cmp(x, y));

    let order = visit_order(a);
    let mut map: BTreeMap<&str, &str> = BTreeMap::new();
    let mut used: BTreeSet<&str> = BTreeSet::new();

    #[allow(clippy::too_many_arguments)]
    fn go<'a, K: Kind>(
        i: usize,
        order: &[&'a str],
        candidates: &[&'a str],
        sa: &BTreeMap<&'a str, Signature<K>>,
        sb: &BTreeMap<&'a str, Signature<K>>,
        a_adj: &Incident<'a, K::Label>,
        b_arrows: &BTreeSet<(&'a str, K::Label, &'a str)>,
        map: &mut BTreeMap<&'a str, &'a str>,
        used: &mut BTreeSet<&'a str>,
    ) -> bool {
        let Some(&x) = order.get(i) else { return true };
        for &y in candidates {
            if used.contains(y) || sa[x] != sb[y] {
                continue;
            }
            map.insert(x, y);
            let consistent = a_adj.get(x).into_iter().flatten().all(|&(s, l, t)| {
                match (map.get(s), map.get(t)) {
                    (Some(&ms), Some(&mt)) => b_arrows.contains(&(ms, l, mt)),
                    _ => true,
                }
            });
            if consistent {
                used.insert(y);
                if go::<K>(i + 1, order, candidates, sa, sb, a_adj, b_arrows, map, used) {
                    return true;
                }
                used.remove(y);
            }
            map.remove(x);
        }
        false
    }

    if go::<K>(
        0,
        &order,
        &candidates,
        &sa,
        &sb,
        &a_adj,
        &b_arrows,
        &mut map,
        &mut used,
    ) {
        Some(
            map.into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        )
    } else {
        None
    }
}
