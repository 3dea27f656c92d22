use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use super::{natural_cmp, Arrow, Kind, Structure};

/// Cancels unit arrows until none remain, always picking the greatest
/// `(source, target)` pair under [`natural_cmp`].
pub fn reduce<K: Kind>(s: &Structure<K>) -> Structure<K> {
    reduce_with(s, |units| {
        let mut best = 0;
        for (i, u) in units.iter().enumerate() {
            if cmp_pair(u, &units[best]) == Ordering::Greater {
                best = i;
            }
        }
        best
    })
}

fn cmp_pair(a: &(String, String), b: &(String, String)) -> Ordering {
    natural_cmp(&a.0, &b.0).then_with(|| natural_cmp(&a.1, &b.1))
}

/// Cancellation with a caller-chosen order: `pick` receives the current unit
/// arrows as `(source, target)` pairs in sorted order and returns an index.
pub fn reduce_with<K: Kind>(
    s: &Structure<K>,
    mut pick: impl FnMut(&[(String, String)]) -> usize,
) -> Structure<K> {
    let mut gens = s.generators().clone();
    let mut arrows = s.arrows().clone();
    loop {
        let units: Vec<(String, String)> = arrows
            .iter()
            .filter(|a| K::is_unit(a.label) && a.source != a.target)
            .map(|a| (a.source.clone(), a.target.clone()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if units.is_empty() {
            break;
        }
        let (x, y) = units[pick(&units).min(units.len() - 1)].clone();
        arrows = cancel::<K>(&arrows, &x, &y);
        gens.remove(&x);
        gens.remove(&y);
    }
    Structure::from_parts(s.frame(), gens, arrows)
}

/// One cancellation step on the unit arrow `x -> y`: every zigzag
/// `w -> y <- x -> z` becomes `w -> z`.
fn cancel<K: Kind>(
    arrows: &BTreeSet<Arrow<K::Label>>,
    x: &str,
    y: &str,
) -> BTreeSet<Arrow<K::Label>> {
    let gone = |g: &str| g == x || g == y;
    let into_y: Vec<&Arrow<K::Label>> = arrows
        .iter()
        .filter(|a| a.target == y && !gone(&a.source))
        .collect();
    let out_of_x: Vec<&Arrow<K::Label>> = arrows
        .iter()
        .filter(|a| a.source == x && !gone(&a.target))
        .collect();
    let mut out: BTreeMap<Arrow<K::Label>, bool> = arrows
        .iter()
        .filter(|a| !gone(&a.source) && !gone(&a.target))
        .map(|a| (a.clone(), true))
        .collect();
    for w in &into_y {
        for z in &out_of_x {
            if let Some(label) = K::mul(w.label, z.label) {
                let e = out
                    .entry(Arrow {
                        source: w.source.clone(),
                        target: z.target.clone(),
                        label,
                    })
                    .or_insert(false);
                *e = !*e;
            }
        }
    }
    out.into_iter()
        .filter(|(_, keep)| *keep)
        .map(|(a, _)| a)
        .collect()
}
