//! Exhaustive subset scans used as independent oracles for the enumerator
//! and the minimum-FVS solver. Deliberately share no code with them beyond
//! the tournament's adjacency.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

pub const MAX_ORACLE_N: usize = 20;

fn out_masks(t: &Tournament) -> Result<Vec<u32>> {
    if t.n() > MAX_ORACLE_N {
        return Err(Error::TooLarge { what: "brute-force oracle", n: t.n(), max: MAX_ORACLE_N });
    }
    Ok((0..t.n())
        .map(|u| (0..t.n()).filter(|&v| t.beats(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect())
}

/// Acyclicity of every subset as a bit table, by looking for a 3-cycle
/// (a tournament has a cycle iff it has a cyclic triangle).
fn acyclic_table(n: usize, out: &[u32]) -> Vec<bool> {
    let mut cyclic_triangles = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a < b && a < c && out[a] >> b & 1 == 1 && out[b] >> c & 1 == 1 && out[c] >> a & 1 == 1 {
                    cyclic_triangles.push(1u32 << a | 1 << b | 1 << c);
                }
            }
        }
    }
    (0..1u32 << n)
        .map(|s| cyclic_triangles.iter().all(|&tri| s & tri != tri))
        .collect()
}

/// All maximal acyclic vertex sets, by scanning all `2^n` subsets.
pub fn brute_force_maximal_acyclic(t: &Tournament) -> Result<BTreeSet<VertexSet>> {
    let out = out_masks(t)?;
    let n = t.n();
    let acyclic = acyclic_table(n, &out);
    let mut result = BTreeSet::new();
    for s in 0..1u32 << n {
        if acyclic[s as usize] && (0..n).all(|v| s >> v & 1 == 1 || !acyclic[(s | 1 << v) as usize]) {
            result.insert(VertexSet::from_indices(n, (0..n).filter(|&v| s >> v & 1 == 1)));
        }
    }
    Ok(result)
}

/// Size of a minimum feedback vertex set, trying FVS sizes in increasing order.
pub fn brute_force_min_fvs_size(t: &Tournament) -> Result<usize> {
    let out = out_masks(t)?;
    let n = t.n();
    let acyclic = acyclic_table(n, &out);
    let full = (1u32 << n) - 1;
    for size in 0..=n {
        if (0..1u32 << n).any(|f| f.count_ones() as usize == size && acyclic[(full & !f) as usize]) {
            return Ok(size);
        }
    }
    unreachable!("removing every vertex leaves an acyclic tournament")
}
