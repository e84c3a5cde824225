//! Minimal primes of a binomial edge ideal: the cut-point-property sets
//! C(G), the primes P_T(G) they index, combinatorial containment between
//! those primes, and the product formula for C(G₁*G₂).

use crate::graph::{compose, Composition, Graph, VertexSet};
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest vertex count accepted by the 2^n cut-set scans.
pub const CUTSET_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PrimesError {
    #[error("graph has {n} vertices, above the cut-set scan cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("partition does not match the components of the graph minus T")]
    InconsistentPartition,
    #[error("input graph {which} must be disconnected")]
    NotDisconnected { which: usize },
}

/// A vertex set T together with the component partition of G minus T.
/// Each part spans a complete graph inside the prime P_T(G).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSet {
    pub t: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
}

impl CutSet {
    /// Builds the cut set for any T; the cut point property is not required.
    pub fn new(g: &Graph, t: VertexSet) -> Self {
        let rest = g.vertex_set().difference(t);
        let parts = g
            .components_within(rest, false)
            .into_iter()
            .map(|c| c.to_vec())
            .collect();
        CutSet {
            t: t.to_vec(),
            parts,
        }
    }

    pub fn t_set(&self) -> VertexSet {
        self.t.iter().copied().collect()
    }
}

/// True iff every vertex of `t` is a cut point of the graph induced on the
/// complement of `t` plus that vertex.  Vacuously true for the empty set.
pub fn has_cut_point_property(g: &Graph, t: VertexSet) -> bool {
    let rest = g.vertex_set().difference(t);
    let base_components = g.components_within(rest, false).len();
    t.iter().all(|i| {
        let with_i = rest.union(VertexSet::singleton(i));
        g.components_within(with_i, false).len() < base_components
    })
}

/// The collection C(G): the empty set plus every T with the cut point
/// property, each with its partition, ordered by size then lexicographically.
pub fn cut_point_sets(g: &Graph) -> Result<Vec<CutSet>, PrimesError> {
    cut_point_sets_with_cap(g, CUTSET_CAP)
}

pub fn cut_point_sets_with_cap(g: &Graph, cap: usize) -> Result<Vec<CutSet>, PrimesError> {
    let n = g.n();
    if n > cap {
        return Err(PrimesError::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let t: VertexSet = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        if t.is_empty() || has_cut_point_property(g, t) {
            out.push(CutSet::new(g, t));
        }
    }
    out.sort_by(|a, b| (a.t.len(), &a.t).cmp(&(b.t.len(), &b.t)));
    Ok(out)
}

/// Generators of the prime P_T(G): the variables x_i, y_i for i in T, plus
/// all 2-minors supported on each completed part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeDescription {
    /// Vertices contributing both their variables.
    pub variables: Vec<usize>,
    /// Vertex sets of the completed components; singletons contribute no
    /// binomial generators but keep the partition explicit.
    pub cliques: Vec<Vec<usize>>,
}

/// Describes P_T(G) for the given cut set; the partition must be the one
/// G minus T actually has.
pub fn prime_of_cutset(g: &Graph, cutset: &CutSet) -> Result<PrimeDescription, PrimesError> {
    let expected = CutSet::new(g, cutset.t_set());
    let normalize = |parts: &[Vec<usize>]| -> BTreeSet<Vec<usize>> {
        parts
            .iter()
            .map(|p| {
                let mut p = p.clone();
                p.sort_unstable();
                p
            })
            .collect()
    };
    if normalize(&cutset.parts) != normalize(&expected.parts) {
        return Err(PrimesError::InconsistentPartition);
    }
    Ok(PrimeDescription {
        variables: expected.t,
        cliques: expected.parts,
    })
}

/// Decides P_{T1}(G) ⊆ P_{T2}(G) combinatorially: T1 must lie inside T2,
/// and every pair from one part of T1's partition must lie in one part of
/// T2's partition or meet T2 (then its 2-minor falls in the variable part).
pub fn prime_containment(t1: &CutSet, t2: &CutSet) -> bool {
    let (s1, s2) = (t1.t_set(), t2.t_set());
    if !s1.is_subset_of(s2) {
        return false;
    }
    let part_of = |v: usize| t2.parts.iter().position(|p| p.contains(&v));
    t1.parts.iter().all(|part| {
        part.iter().enumerate().all(|(a, &u)| {
            part[a + 1..].iter().all(|&v| {
                if s2.contains(u) || s2.contains(v) {
                    return true;
                }
                part_of(u) == part_of(v)
            })
        })
    })
}

/// Outcome of checking the product formula for C(G₁*G₂).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinCutsetReport {
    pub equal: bool,
    /// Cut sets found by direct enumeration but absent from the formula.
    pub missing_from_formula: Vec<Vec<usize>>,
    /// Sets the formula produces that direct enumeration rejects.
    pub extra_in_formula: Vec<Vec<usize>>,
}

/// Checks, for disconnected G₁ and G₂, that C(G₁*G₂) equals
/// {∅} ∪ (⊗ᵢC(G_{1i}) ∘ V₂) ∪ (⊗ᵢC(G_{2i}) ∘ V₁), where ⊗ unions one
/// choice of cut set per component and ∘ appends the opposite vertex set.
pub fn verify_join_cutsets(g1: &Graph, g2: &Graph) -> Result<JoinCutsetReport, PrimesError> {
    if g1.components(false).len() < 2 {
        return Err(PrimesError::NotDisconnected { which: 1 });
    }
    if g2.components(false).len() < 2 {
        return Err(PrimesError::NotDisconnected { which: 2 });
    }
    let joined = compose(g1, g2, Composition::Join).expect("cap checked below");
    let n = joined.n();
    if n > CUTSET_CAP {
        return Err(PrimesError::CapExceeded { n, cap: CUTSET_CAP });
    }

    let direct: BTreeSet<Vec<usize>> = cut_point_sets(&joined)?
        .into_iter()
        .map(|c| c.t)
        .collect();

    let mut formula: BTreeSet<Vec<usize>> = BTreeSet::new();
    formula.insert(Vec::new());
    let side = |g: &Graph, offset: usize, other: VertexSet| -> Vec<Vec<usize>> {
        let mut choices: Vec<VertexSet> = vec![VertexSet::EMPTY];
        for comp in g.components(false) {
            let verts = comp.to_vec();
            let sub = g.induced_subgraph(comp);
            let comp_sets = cut_point_sets(&sub).expect("component within cap");
            let mut next = Vec::new();
            for chosen in &choices {
                for cs in &comp_sets {
                    // Map the component's labels back into the join.
                    let mapped: VertexSet =
                        cs.t.iter().map(|&v| verts[v - 1] + offset).collect();
                    next.push(chosen.union(mapped));
                }
            }
            choices = next;
        }
        choices
            .into_iter()
            .map(|c| c.union(other).to_vec())
            .collect()
    };
    let v1: VertexSet = (1..=g1.n()).collect();
    let v2: VertexSet = (g1.n() + 1..=n).collect();
    formula.extend(side(g1, 0, v2));
    formula.extend(side(g2, g1.n(), v1));

    let missing_from_formula: Vec<Vec<usize>> =
        direct.difference(&formula).cloned().collect();
    let extra_in_formula: Vec<Vec<usize>> = formula.difference(&direct).cloned().collect();
    Ok(JoinCutsetReport {
        equal: missing_from_formula.is_empty() && extra_in_formula.is_empty(),
        missing_from_formula,
        extra_in_formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    fn sets_of(g: &Graph) -> Vec<Vec<usize>> {
        cut_point_sets(g).unwrap().into_iter().map(|c| c.t).collect()
    }

    #[test]
    fn complete_graphs_have_only_the_empty_set() {
        for n in 1..=6 {
            assert_eq!(sets_of(&Graph::complete(n)), vec![Vec::<usize>::new()]);
        }
    }

    #[test]
    fn path3_cut_sets() {
        assert_eq!(sets_of(&Graph::path(3)), vec![vec![], vec![2]]);
    }

    #[test]
    fn two_disjoint_edges_have_only_the_empty_set() {
        let g = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(sets_of(&g), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn four_cycle_cut_sets() {
        assert_eq!(
            sets_of(&Graph::cycle(4)),
            vec![vec![], vec![1, 3], vec![2, 4]]
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(13);
        assert_eq!(
            cut_point_sets(&g),
            Err(PrimesError::CapExceeded { n: 13, cap: 12 })
        );
    }

    #[test]
    fn prime_descriptions() {
        let p3 = Graph::path(3);
        let cs = CutSet::new(&p3, VertexSet::singleton(2));
        let p = prime_of_cutset(&p3, &cs).unwrap();
        assert_eq!(p.variables, vec![2]);
        assert_eq!(p.cliques, vec![vec![1], vec![3]]);

        // T = ∅: the components themselves, completed.
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (4, 5)]).unwrap();
        let p = prime_of_cutset(&g, &CutSet::new(&g, VertexSet::EMPTY)).unwrap();
        assert_eq!(p.variables, Vec::<usize>::new());
        assert_eq!(p.cliques, vec![vec![4, 5], vec![1, 2, 3]]);

        let c4 = Graph::cycle(4);
        let cs = CutSet::new(&c4, [1, 3].into_iter().collect());
        let p = prime_of_cutset(&c4, &cs).unwrap();
        assert_eq!(p.variables, vec![1, 3]);
        assert_eq!(p.cliques, vec![vec![2], vec![4]]);

        let bad = CutSet {
            t: vec![2],
            parts: vec![vec![1, 3]],
        };
        assert_eq!(
            prime_of_cutset(&p3, &bad),
            Err(PrimesError::InconsistentPartition)
        );
    }

    #[test]
    fn containment_basics() {
        let p3 = Graph::path(3);
        let empty = CutSet::new(&p3, VertexSet::EMPTY);
        let middle = CutSet::new(&p3, VertexSet::singleton(2));
        assert!(prime_containment(&empty, &empty));
        assert!(prime_containment(&middle, &middle));
        // f₁₃ lies in P_∅ (completion) but not in (x₂,y₂); x₂ not in P_∅.
        assert!(!prime_containment(&empty, &middle));
        assert!(!prime_containment(&middle, &empty));

        // K₃ − 1 keeps the edge {2,3} as one part, so P_∅ = J_{K₃} lands
        // inside (x₁,y₁,f₂₃): the non-cut-point T = {1} is not minimal.
        let k3 = Graph::complete(3);
        let e = CutSet::new(&k3, VertexSet::EMPTY);
        let one = CutSet::new(&k3, VertexSet::singleton(1));
        assert!(prime_containment(&e, &one));
        assert!(!prime_containment(&one, &e));

        // Star with center 1: removing 1 shatters into singletons, f₂₃
        // from the completed P_∅ escapes (x₁,y₁), so neither contains.
        let star = Graph::from_edges(3, &[(1, 2), (1, 3)]).unwrap();
        let e = CutSet::new(&star, VertexSet::EMPTY);
        let one = CutSet::new(&star, VertexSet::singleton(1));
        assert!(!prime_containment(&e, &one));
        assert!(!prime_containment(&one, &e));
    }

    #[test]
    fn cut_sets_are_exactly_the_minimal_primes_up_to_n5() {
        for n in 2..=5usize {
            for g in enumerate_graphs(n, false).unwrap() {
                let in_c: BTreeSet<Vec<usize>> = sets_of(&g).into_iter().collect();
                let all: Vec<CutSet> = (0u64..(1 << n))
                    .map(|mask| {
                        let t: VertexSet =
                            (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
                        CutSet::new(&g, t)
                    })
                    .collect();
                for t in &all {
                    let minimal = all
                        .iter()
                        .filter(|o| o.t != t.t)
                        .all(|o| !prime_containment(o, t));
                    assert_eq!(
                        in_c.contains(&t.t),
                        minimal,
                        "{g:?} T={:?}",
                        t.t
                    );
                }
            }
        }
    }

    #[test]
    fn connected_non_complete_graphs_have_extra_cut_sets() {
        for n in 2..=6usize {
            for g in enumerate_graphs(n, true).unwrap() {
                if !g.is_complete() {
                    assert!(sets_of(&g).len() >= 2, "{g:?}");
                }
            }
        }
    }

    #[test]
    fn join_formula_examples() {
        let two_k1 = Graph::empty(2);
        let k2_k1 = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let two_k2 = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        for (a, b) in [
            (&two_k1, &two_k1),
            (&k2_k1, &two_k1),
            (&two_k2, &two_k2),
        ] {
            let report = verify_join_cutsets(a, b).unwrap();
            assert!(report.equal, "{report:?}");
        }
    }

    #[test]
    fn join_formula_requires_disconnected_inputs() {
        let p3 = Graph::path(3);
        let two_k1 = Graph::empty(2);
        assert_eq!(
            verify_join_cutsets(&p3, &two_k1),
            Err(PrimesError::NotDisconnected { which: 1 })
        );
        assert_eq!(
            verify_join_cutsets(&two_k1, &p3),
            Err(PrimesError::NotDisconnected { which: 2 })
        );
    }

    #[test]
    fn four_cycle_via_join_formula() {
        // 2K₁ * 2K₁ with this labeling: cut sets {∅, {1,2}, {3,4}}.
        let joined = compose(&Graph::empty(2), &Graph::empty(2), Composition::Join).unwrap();
        assert_eq!(sets_of(&joined), vec![vec![], vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn serialization_shape() {
        let p3 = Graph::path(3);
        let p = prime_of_cutset(&p3, &CutSet::new(&p3, VertexSet::singleton(2))).unwrap();
        let json = serde_json::to_value(&p).unwrap();
        assert_eq!(json["variables"][0], 2);
        assert_eq!(json["cliques"][0][0], 1);
    }
}
