//! Canonical forms and enumeration of small graphs up to isomorphism.
//!
//! The canonical form of a graph is the relabeling whose upper-triangle
//! adjacency bit string (row-major) is lexicographically minimal over all
//! vertex permutations. Brute force over all `n!` permutations, so both
//! operations are capped at small `n`.

use super::{Graph, GraphError};
use itertools::Itertools;
use std::collections::HashSet;

/// Largest order accepted by [`canonical_form`] / [`canonical_key`].
pub const CANONICAL_CAP: usize = 10;

/// Largest order accepted by [`enumerate_graphs`].
const ENUMERATE_CAP: usize = 7;

/// The upper-triangle bit string of `G` under a given relabeling, packed so
/// that earlier pairs occupy higher bits; integer comparison of keys is then
/// lexicographic comparison of bit strings. `perm[i]` is the old vertex
/// placed at position `i + 1`.
fn relabeled_key(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    debug_assert!(n * (n - 1) / 2 <= 64);
    let mut key = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            key <<= 1;
            if g.has_edge(perm[i], perm[j]) {
                key |= 1;
            }
        }
    }
    key
}

/// Canonical key of `G`: minimal relabeled bit string over all permutations.
pub fn canonical_key(g: &Graph) -> Result<u64, GraphError> {
    let n = g.n();
    if n > CANONICAL_CAP {
        return Err(GraphError::CapExceeded { n, cap: CANONICAL_CAP });
    }
    if n <= 1 {
        return Ok(0);
    }
    let mut best = u64::MAX;
    for perm in (1..=n).permutations(n) {
        let key = relabeled_key(g, &perm);
        if key < best {
            best = key;
        }
    }
    Ok(best)
}

/// Canonically relabeled copy of `G`.
pub fn canonical_form(g: &Graph) -> Result<Graph, GraphError> {
    let key = canonical_key(g)?;
    Ok(graph_from_key(g.n(), key))
}

fn graph_from_key(n: usize, key: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = n * (n - 1) / 2;
    for i in 1..=n {
        for j in (i + 1)..=n {
            bit -= 1;
            if key >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// All graphs on `n >= 1` vertices up to isomorphism, as canonical
/// representatives sorted by canonical key. With `connected_only`, only the
/// connected ones.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if n > ENUMERATE_CAP {
        return Err(GraphError::CapExceeded { n, cap: ENUMERATE_CAP });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // Every graph on k vertices is a graph on k-1 vertices plus one vertex
    // with an arbitrary neighborhood, so extending class representatives
    // level by level reaches every isomorphism class.
    let mut level: Vec<u64> = vec![0];
    for k in 2..=n {
        let mut next: HashSet<u64> = HashSet::new();
        for &key in &level {
            let base = graph_from_key(k - 1, key);
            let mut extended = Graph::empty(k);
            for (u, v) in base.edges() {
                extended.add_edge(u, v);
            }
            for mask in 0u64..(1 << (k - 1)) {
                let mut g = extended.clone();
                for v in 1..k {
                    if mask >> (v - 1) & 1 == 1 {
                        g.add_edge(v, k);
                    }
                }
                next.insert(canonical_key(&g)?);
            }
        }
        let mut keys: Vec<u64> = next.into_iter().collect();
        keys.sort_unstable();
        level = keys;
    }
    let mut out: Vec<Graph> = level.into_iter().map(|key| graph_from_key(n, key)).collect();
    if connected_only {
        out.retain(|g| g.is_connected());
    }
    Ok(out)
}
