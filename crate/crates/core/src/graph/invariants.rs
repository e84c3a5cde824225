//! Search-based graph invariants: maximal cliques, connected dominating
//! sets, and weakly closed / closed vertex labelings.

use super::{Graph, GraphError, VertexSet};
use serde::Serialize;

/// All maximal cliques, via Bron-Kerbosch with pivoting, sorted by
/// (size, vertex list).
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() == 0 {
        return out;
    }
    bron_kerbosch(g, VertexSet::EMPTY, g.vertex_set(), VertexSet::EMPTY, &mut out);
    out.sort_by_key(|c| (c.len(), c.bits()));
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(p).len())
        .unwrap();
    let candidates = p.difference(g.neighbors(pivot));
    for v in candidates.iter() {
        let nv = g.neighbors(v);
        bron_kerbosch(
            g,
            r.union(VertexSet::singleton(v)),
            p.intersection(nv),
            x.intersection(nv),
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// A minimum connected dominating set of a connected graph, choosing the
/// lexicographically smallest among sets of minimum size.
pub fn min_connected_dominating_set(g: &Graph) -> Result<VertexSet, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(VertexSet::EMPTY);
    }
    let all = g.vertex_set();
    for size in 1..=n {
        let mut current: Vec<usize> = Vec::with_capacity(size);
        if let Some(found) = search_cds(g, all, size, 1, &mut current) {
            return Ok(found);
        }
    }
    unreachable!("the full vertex set dominates and is connected");
}

fn search_cds(
    g: &Graph,
    all: VertexSet,
    size: usize,
    from: usize,
    current: &mut Vec<usize>,
) -> Option<VertexSet> {
    if current.len() == size {
        let set: VertexSet = current.iter().copied().collect();
        let dominated = set
            .iter()
            .fold(set, |acc, v| acc.union(g.neighbors(v)));
        if dominated == all && g.components_within(set, false).len() == 1 {
            return Some(set);
        }
        return None;
    }
    for v in from..=g.n() {
        if g.n() - v + 1 < size - current.len() {
            break;
        }
        current.push(v);
        if let Some(found) = search_cds(g, all, size, v + 1, current) {
            return Some(found);
        }
        current.pop();
    }
    None
}

/// Default order cap for the weakly-closed labeling search.
pub const WEAKLY_CLOSED_CAP: usize = 10;

/// Outcome of the weakly-closed labeling search.
#[derive(Clone, Debug, Serialize)]
pub struct WeaklyClosedReport {
    pub weakly_closed: bool,
    /// A labeling witnessing weak closure: `witness[p]` is the vertex given
    /// label `p + 1`.
    pub witness: Option<Vec<usize>>,
    /// Whether some labeling satisfies the stronger closed condition.
    pub closed: bool,
}

/// Condition placed on a labeling at positions `i < k < j` with the edge
/// `{i, j}` present.
#[derive(Clone, Copy, PartialEq)]
enum LabelCondition {
    /// `{i,k}` or `{k,j}` must be an edge.
    WeaklyClosed,
    /// `{i,k}` and `{k,j}` must both be edges.
    Closed,
}

/// Decides whether some labeling of `G` is (weakly) closed, searching all
/// labelings with prefix pruning.
pub fn is_weakly_closed(g: &Graph) -> Result<WeaklyClosedReport, GraphError> {
    is_weakly_closed_with_cap(g, WEAKLY_CLOSED_CAP)
}

pub fn is_weakly_closed_with_cap(g: &Graph, cap: usize) -> Result<WeaklyClosedReport, GraphError> {
    if g.n() > cap {
        return Err(GraphError::CapExceeded { n: g.n(), cap });
    }
    let witness = find_labeling(g, LabelCondition::WeaklyClosed);
    let closed = find_labeling(g, LabelCondition::Closed).is_some();
    Ok(WeaklyClosedReport {
        weakly_closed: witness.is_some(),
        witness,
        closed,
    })
}

/// Checks one labeling against the weakly-closed condition. `labeling[p]` is
/// the vertex at label `p + 1`.
pub fn weakly_closed_labeling_valid(g: &Graph, labeling: &[usize]) -> bool {
    labeling.len() == g.n()
        && (1..=labeling.len()).all(|j| prefix_ok(g, labeling, j, LabelCondition::WeaklyClosed))
}

/// A violation within positions `1..=j` (with `j` involved) stays a violation
/// in every extension, so checking each new position suffices.
fn prefix_ok(g: &Graph, labeling: &[usize], j: usize, cond: LabelCondition) -> bool {
    for i in 1..j.saturating_sub(1) {
        if !g.has_edge(labeling[i - 1], labeling[j - 1]) {
            continue;
        }
        for k in (i + 1)..j {
            let left = g.has_edge(labeling[i - 1], labeling[k - 1]);
            let right = g.has_edge(labeling[k - 1], labeling[j - 1]);
            let ok = match cond {
                LabelCondition::WeaklyClosed => left || right,
                LabelCondition::Closed => left && right,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn find_labeling(g: &Graph, cond: LabelCondition) -> Option<Vec<usize>> {
    let n = g.n();
    let mut labeling: Vec<usize> = Vec::with_capacity(n);
    let mut used = VertexSet::EMPTY;
    fn rec(
        g: &Graph,
        cond: LabelCondition,
        labeling: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> bool {
        if labeling.len() == g.n() {
            return true;
        }
        for v in g.vertices() {
            if used.contains(v) {
                continue;
            }
            labeling.push(v);
            used.insert(v);
            if prefix_ok(g, labeling, labeling.len(), cond)
                && rec(g, cond, labeling, used)
            {
                return true;
            }
            labeling.pop();
            used.remove(v);
        }
        false
    }
    if rec(g, cond, &mut labeling, &mut used) {
        Some(labeling)
    } else {
        None
    }
}
