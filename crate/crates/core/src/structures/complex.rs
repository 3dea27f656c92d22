use std::collections::BTreeMap;

use super::ChainComplexF2;
use crate::error::{Error, Result};

/// Rank of the F2 homology, `dim - 2 rank(∂)`. Fails if `∂² ≠ 0`.
pub fn homology_rank(c: &ChainComplexF2) -> Result<usize> {
    let rel = c.structure_relation();
    if !rel.is_ok() {
        return Err(Error::NotAComplex(rel.violations.len()));
    }
    let index: BTreeMap<&str, usize> = c
        .generators()
        .keys()
        .enumerate()
        .map(|(i, k)| (k.as_str(), i))
        .collect();
    let n = index.len();
    let words = n.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = vec![vec![0; words]; n];
    for a in c.arrows() {
        let (s, t) = (index[a.source.as_str()], index[a.target.as_str()]);
        rows[s][t / 64] ^= 1 << (t % 64);
    }
    Ok(n - 2 * rank_f2(rows, n))
}

fn rank_f2(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}
