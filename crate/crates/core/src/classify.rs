//! Combinatorial regularity classification: join decomposition certificates,
//! the regularity-3 characterization, structural exact values, CM and
//! extremal Gorenstein patterns, threshold graphs, and a family whose
//! regularity outruns its longest induced path.
//!
//! Throughout, `reg` means the Castelnuovo-Mumford regularity of the
//! binomial edge ideal itself; an edgeless graph has the zero ideal and is
//! reported through a sentinel rather than a number.

use crate::graph::{
    canonical_key, compose, is_path_graph, Composition, Graph, GraphError, VertexSet,
};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("creation word must be nonempty")]
    EmptyWord,
    #[error("graph has isolated vertices {0:?}")]
    IsolatedVertices(Vec<usize>),
    #[error("need at least 2 path blocks, got {0}")]
    TooFewBlocks(usize),
    #[error("path blocks need at least 3 vertices, got {0}")]
    BlockTooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One node of a join decomposition certificate.  Vertex labels are those
/// of the original graph, so the certificate rebuilds it exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertNode {
    /// A disjoint union of at most two nontrivial cliques plus isolated
    /// vertices.  Complete graphs and edgeless graphs are the special
    /// cases with one clique and with none.
    Block {
        cliques: Vec<Vec<usize>>,
        isolated: Vec<usize>,
    },
    /// Connected with connected complement and not complete; the
    /// decomposition keeps it whole.
    Irreducible {
        vertices: Vec<usize>,
        edges: Vec<(usize, usize)>,
    },
    /// A join of exactly two parts: every cross edge is present.
    Join { children: Vec<CertNode> },
    /// Disjoint union of two or more components.
    Union { children: Vec<CertNode> },
}

impl CertNode {
    pub fn vertex_set(&self) -> VertexSet {
        match self {
            CertNode::Block { cliques, isolated } => cliques
                .iter()
                .flatten()
                .chain(isolated)
                .copied()
                .collect(),
            CertNode::Irreducible { vertices, .. } => vertices.iter().copied().collect(),
            CertNode::Join { children } | CertNode::Union { children } => children
                .iter()
                .fold(VertexSet::EMPTY, |acc, c| acc.union(c.vertex_set())),
        }
    }

    /// True iff the node describes a complete graph (including a single
    /// vertex).
    pub fn is_complete_graph(&self) -> bool {
        match self {
            CertNode::Block { cliques, isolated } => {
                (cliques.len() == 1 && isolated.is_empty())
                    || (cliques.is_empty() && isolated.len() == 1)
            }
            _ => false,
        }
    }

    /// True iff some leaf of the tree is an irreducible-general block.
    pub fn has_irreducible_leaf(&self) -> bool {
        match self {
            CertNode::Block { .. } => false,
            CertNode::Irreducible { .. } => true,
            CertNode::Join { children } | CertNode::Union { children } => {
                children.iter().any(CertNode::has_irreducible_leaf)
            }
        }
    }

    fn collect_edges(&self, out: &mut Vec<(usize, usize)>) {
        match self {
            CertNode::Block { cliques, .. } => {
                for clique in cliques {
                    for (a, &u) in clique.iter().enumerate() {
                        for &v in &clique[a + 1..] {
                            out.push((u, v));
                        }
                    }
                }
            }
            CertNode::Irreducible { edges, .. } => out.extend_from_slice(edges),
            CertNode::Union { children } => {
                for c in children {
                    c.collect_edges(out);
                }
            }
            CertNode::Join { children } => {
                for c in children {
                    c.collect_edges(out);
                }
                let (a, b) = (children[0].vertex_set(), children[1].vertex_set());
                for u in a.iter() {
                    for v in b.iter() {
                        out.push((u.min(v), u.max(v)));
                    }
                }
            }
        }
    }
}

/// Rebuilds the graph a certificate describes, on `n` vertices.
pub fn reconstruct(root: &CertNode, n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    root.collect_edges(&mut edges);
    Graph::from_edges(n, &edges)
}

/// A regularity value produced by purely structural reasoning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegPrediction {
    /// The graph has no edges, so the ideal is zero.
    NoEdges,
    Exact(u32),
    /// The decomposition bottoms out in a leaf with no known formula.
    Unknown,
}

impl Serialize for RegPrediction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            RegPrediction::NoEdges => serializer.serialize_str("no_edges"),
            RegPrediction::Exact(v) => serializer.serialize_u32(*v),
            RegPrediction::Unknown => serializer.serialize_str("unknown"),
        }
    }
}

impl RegPrediction {
    /// True for values known to be at most 3 (an edgeless part counts).
    pub fn at_most_three(self) -> bool {
        match self {
            RegPrediction::NoEdges => true,
            RegPrediction::Exact(v) => v <= 3,
            RegPrediction::Unknown => false,
        }
    }
}

/// A join decomposition together with the regularity it implies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinCertificate {
    pub predicted_reg: RegPrediction,
    pub root: CertNode,
}

/// Maximal recursive decomposition of a graph: blocks of the form
/// K_r ⊔ K_s ⊔ K_t^c are kept as leaves, other disconnected graphs split
/// into components, and a connected graph whose complement is disconnected
/// splits as a join across the complement parts.  Children are ordered by
/// (size, canonical form).
pub fn join_decompose(g: &Graph) -> JoinCertificate {
    let root = decompose(g, g.vertex_set());
    let predicted_reg = predict(g, &root);
    JoinCertificate {
        predicted_reg,
        root,
    }
}

/// Exact regularity when the decomposition reduces the graph to complete,
/// path, and edgeless leaves via the join formula and disjoint-union
/// additivity; `Unknown` otherwise.
pub fn structural_regularity(g: &Graph) -> RegPrediction {
    join_decompose(g).predicted_reg
}

fn sort_key(g: &Graph, within: VertexSet) -> (usize, u64, usize) {
    let canon = canonical_key(&g.induced_subgraph(within)).unwrap_or(u64::MAX);
    (within.len(), canon, within.min_vertex().unwrap_or(0))
}

fn is_clique(g: &Graph, vs: VertexSet) -> bool {
    vs.iter().all(|u| {
        vs.iter()
            .all(|v| v == u || g.has_edge(u, v))
    })
}

fn decompose(g: &Graph, within: VertexSet) -> CertNode {
    let comps = g.components_within(within, false);
    if comps.iter().all(|&c| is_clique(g, c))
        && comps.iter().filter(|c| c.len() >= 2).count() <= 2
    {
        let cliques = comps
            .iter()
            .filter(|c| c.len() >= 2)
            .map(|c| c.to_vec())
            .collect();
        let isolated = comps
            .iter()
            .filter(|c| c.len() == 1)
            .flat_map(|c| c.iter())
            .collect();
        return CertNode::Block { cliques, isolated };
    }
    if comps.len() >= 2 {
        let mut ordered = comps;
        ordered.sort_by_key(|&c| sort_key(g, c));
        return CertNode::Union {
            children: ordered.into_iter().map(|c| decompose(g, c)).collect(),
        };
    }
    let mut parts = g.components_within(within, true);
    if parts.len() >= 2 {
        parts.sort_by_key(|&c| sort_key(g, c));
        let first = parts[0];
        let rest = within.difference(first);
        return CertNode::Join {
            children: vec![decompose(g, first), decompose(g, rest)],
        };
    }
    let vertices = within.to_vec();
    let edges = vertices
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .filter(move |&&v| g.has_edge(u, v))
                .map(move |&v| (u, v))
        })
        .collect();
    CertNode::Irreducible { vertices, edges }
}

fn predict(g: &Graph, node: &CertNode) -> RegPrediction {
    use RegPrediction::*;
    match node {
        CertNode::Block { cliques, .. } => match cliques.len() {
            0 => NoEdges,
            1 => Exact(2),
            // K_r ⊔ K_s with r,s >= 2: additivity gives 2 + 2 - 2 + 1.
            _ => Exact(3),
        },
        CertNode::Irreducible { vertices, .. } => {
            let sub = g.induced_subgraph(vertices.iter().copied().collect());
            if is_path_graph(&sub) {
                Exact(vertices.len() as u32)
            } else {
                Unknown
            }
        }
        CertNode::Join { children } => {
            if children.iter().all(CertNode::is_complete_graph) {
                return Exact(2);
            }
            let mut finite = 3u32;
            for c in children {
                match predict(g, c) {
                    NoEdges => {}
                    Exact(v) => finite = finite.max(v),
                    Unknown => return Unknown,
                }
            }
            Exact(finite)
        }
        CertNode::Union { children } => {
            // Additivity over components that have edges; edgeless
            // components do not move the regularity.
            let mut sum = 0u32;
            let mut edged = 0u32;
            for c in children {
                match predict(g, c) {
                    NoEdges => {}
                    Exact(v) => {
                        sum += v;
                        edged += 1;
                    }
                    Unknown => return Unknown,
                }
            }
            if edged == 0 {
                NoEdges
            } else {
                Exact(sum - edged + 1)
            }
        }
    }
}

/// Exact classification of reg(J_G) into the bands the regularity-3
/// characterization resolves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegClass {
    /// No edges: the ideal is zero.
    NoEdges,
    Two,
    Three,
    AtLeastFour,
}

/// Classifies reg(J_G): 2 exactly for complete graphs, 3 exactly when the
/// graph (after dropping isolated vertices) is K_r ⊔ K_s with r,s >= 2 or
/// a join of two parts each of class at most 3, and at least 4 otherwise.
pub fn regularity_class(g: &Graph) -> RegClass {
    class_within(g, g.vertex_set())
}

fn class_within(g: &Graph, within: VertexSet) -> RegClass {
    let active: VertexSet = within
        .iter()
        .filter(|&v| !g.neighbors(v).intersection(within).is_empty())
        .collect();
    if active.is_empty() {
        return RegClass::NoEdges;
    }
    let comps = g.components_within(active, false);
    if comps.len() >= 2 {
        // Additivity: t components with edges give reg >= t + 1, with
        // equality at 3 exactly for two complete components.
        if comps.len() == 2 && comps.iter().all(|&c| is_clique(g, c)) {
            return RegClass::Three;
        }
        return RegClass::AtLeastFour;
    }
    if is_clique(g, active) {
        return RegClass::Two;
    }
    let mut parts = g.components_within(active, true);
    if parts.len() < 2 {
        // Connected, not complete, and not a join: regularity 3 is
        // impossible.
        return RegClass::AtLeastFour;
    }
    parts.sort_by_key(|&c| sort_key(g, c));
    let first = parts[0];
    let rest = active.difference(first);
    if class_within(g, first) <= RegClass::Three && class_within(g, rest) <= RegClass::Three {
        RegClass::Three
    } else {
        RegClass::AtLeastFour
    }
}

/// One step in a threshold graph's creation word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdStep {
    Isolated,
    Dominating,
}

/// Builds the threshold graph of a creation word: vertex k is added at
/// step k, either isolated or adjacent to everything before it.
pub fn build_threshold(word: &[ThresholdStep]) -> Result<Graph, ClassifyError> {
    if word.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    let mut edges = Vec::new();
    for (k, step) in word.iter().enumerate() {
        if *step == ThresholdStep::Dominating {
            for j in 1..=k {
                edges.push((j, k + 1));
            }
        }
    }
    Ok(Graph::from_edges(word.len(), &edges)?)
}

/// The shape that makes a graph Cohen-Macaulay of regularity 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum CmPattern {
    /// K_r ⊔ K_s with r,s >= 2.
    TwoCliques { r: usize, s: usize },
    /// K_1 * (K_r ⊔ K_s) with r,s >= 1.
    ApexTwoCliques { r: usize, s: usize },
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CmGorenstein {
    /// Cohen-Macaulay with regularity exactly 3.
    pub cm_reg3: bool,
    /// The resolution is as short and as tight as regularity 3 allows.
    pub extremal_gorenstein: bool,
    pub pattern: CmPattern,
}

/// Matches the two shapes that are Cohen-Macaulay with regularity 3 and
/// the two extremal Gorenstein graphs (2K₂ and P₃).  The input must have
/// no isolated vertices, mirroring the hypotheses of those results.
pub fn classify_cm_gorenstein(g: &Graph) -> Result<CmGorenstein, ClassifyError> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        return Err(ClassifyError::IsolatedVertices(isolated.to_vec()));
    }
    let pattern = cm_pattern(g);
    let cm_reg3 = pattern != CmPattern::None;
    let extremal_gorenstein = matches!(
        pattern,
        CmPattern::TwoCliques { r: 2, s: 2 } | CmPattern::ApexTwoCliques { r: 1, s: 1 }
    );
    Ok(CmGorenstein {
        cm_reg3,
        extremal_gorenstein,
        pattern,
    })
}

fn cm_pattern(g: &Graph) -> CmPattern {
    let comps = g.components(false);
    if comps.len() == 2 && comps.iter().all(|&c| is_clique(g, c)) {
        let (r, s) = (comps[0].len(), comps[1].len());
        // Isolated vertices were rejected, so r,s >= 2.
        return CmPattern::TwoCliques {
            r: r.min(s),
            s: r.max(s),
        };
    }
    if comps.len() == 1 {
        for v in g.vertices() {
            if g.degree(v) != g.n() - 1 {
                continue;
            }
            let rest = g.vertex_set().difference(VertexSet::singleton(v));
            let parts = g.components_within(rest, false);
            if parts.len() == 2 && parts.iter().all(|&c| is_clique(g, c)) {
                let (r, s) = (parts[0].len(), parts[1].len());
                return CmPattern::ApexTwoCliques {
                    r: r.min(s),
                    s: r.max(s),
                };
            }
        }
    }
    CmPattern::None
}

/// A cone over disjoint paths, with the regularity the additivity and join
/// formulas force and the longest-induced-path bound it beats.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub graph: Graph,
    /// Sum of the path sizes minus the number of paths, plus one.
    pub predicted_reg: u32,
    /// One more than the longest induced path length (edge count).
    pub ell_plus_1: u32,
}

/// Builds K₁ * (P_{t₁} ⊔ .. ⊔ P_{t_q}) for q >= 2 paths of size >= 3 each.
/// Its regularity Σtᵢ - q + 1 always exceeds ℓ(G) + 1 = max tᵢ, so the
/// family separates regularity from the induced-path bound at every scale.
pub fn build_counterexample(path_sizes: &[usize]) -> Result<Counterexample, ClassifyError> {
    if path_sizes.len() < 2 {
        return Err(ClassifyError::TooFewBlocks(path_sizes.len()));
    }
    if let Some(&bad) = path_sizes.iter().find(|&&t| t < 3) {
        return Err(ClassifyError::BlockTooSmall(bad));
    }
    let mut paths = Graph::empty(0);
    for &t in path_sizes {
        paths = compose(&paths, &Graph::path(t), Composition::DisjointUnion)?;
    }
    let graph = compose(&paths, &Graph::complete(1), Composition::Join)?;
    let q = path_sizes.len() as u32;
    let sum: u32 = path_sizes.iter().map(|&t| t as u32).sum();
    let predicted_reg = sum - q + 1;
    let ell_plus_1 = *path_sizes.iter().max().unwrap() as u32;
    assert!(predicted_reg > ell_plus_1);
    Ok(Counterexample {
        graph,
        predicted_reg,
        ell_plus_1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, is_weakly_closed, weakly_closed_labeling_valid};

    fn block(cliques: &[&[usize]], isolated: &[usize]) -> CertNode {
        CertNode::Block {
            cliques: cliques.iter().map(|c| c.to_vec()).collect(),
            isolated: isolated.to_vec(),
        }
    }

    #[test]
    fn four_cycle_splits_into_edgeless_halves() {
        let cert = join_decompose(&Graph::cycle(4));
        assert_eq!(
            cert.root,
            CertNode::Join {
                children: vec![block(&[], &[1, 3]), block(&[], &[2, 4])]
            }
        );
        assert_eq!(cert.predicted_reg, RegPrediction::Exact(3));
    }

    #[test]
    fn star_splits_off_its_center() {
        let cert = join_decompose(&Graph::star(4));
        assert_eq!(
            cert.root,
            CertNode::Join {
                children: vec![block(&[], &[1]), block(&[], &[2, 3, 4])]
            }
        );
        assert_eq!(cert.predicted_reg, RegPrediction::Exact(3));
    }

    #[test]
    fn path4_is_irreducible() {
        let cert = join_decompose(&Graph::path(4));
        assert_eq!(
            cert.root,
            CertNode::Irreducible {
                vertices: vec![1, 2, 3, 4],
                edges: vec![(1, 2), (2, 3), (3, 4)]
            }
        );
        assert_eq!(cert.predicted_reg, RegPrediction::Exact(4));
    }

    #[test]
    fn block_leaves() {
        let g = compose(&Graph::complete(2), &Graph::complete(3), Composition::DisjointUnion)
            .unwrap();
        let cert = join_decompose(&g);
        assert_eq!(cert.root, block(&[&[1, 2], &[3, 4, 5]], &[]));
        assert_eq!(cert.predicted_reg, RegPrediction::Exact(3));
        assert_eq!(
            join_decompose(&Graph::complete(4)).predicted_reg,
            RegPrediction::Exact(2)
        );
        assert_eq!(
            join_decompose(&Graph::empty(3)).predicted_reg,
            RegPrediction::NoEdges
        );
    }

    #[test]
    fn reconstruction_is_exact_up_to_n6() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let cert = join_decompose(&g);
                assert_eq!(reconstruct(&cert.root, n).unwrap(), g, "{g:?}");
            }
        }
    }

    #[test]
    fn classes_on_named_graphs() {
        assert_eq!(regularity_class(&Graph::path(3)), RegClass::Three);
        assert_eq!(regularity_class(&Graph::path(4)), RegClass::AtLeastFour);
        assert_eq!(regularity_class(&Graph::complete(4)), RegClass::Two);
        assert_eq!(regularity_class(&Graph::empty(5)), RegClass::NoEdges);
        let two_k2 = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(regularity_class(&two_k2), RegClass::Three);
        // Isolated vertices never change the class.
        let padded = compose(&two_k2, &Graph::empty(2), Composition::DisjointUnion).unwrap();
        assert_eq!(regularity_class(&padded), RegClass::Three);
    }

    #[test]
    fn four_vertex_census_has_six_class_three_graphs() {
        let mut counts = std::collections::BTreeMap::new();
        for g in enumerate_graphs(4, false).unwrap() {
            *counts.entry(regularity_class(&g)).or_insert(0usize) += 1;
        }
        assert_eq!(counts[&RegClass::NoEdges], 1);
        assert_eq!(counts[&RegClass::Two], 3);
        assert_eq!(counts[&RegClass::Three], 6);
        assert_eq!(counts[&RegClass::AtLeastFour], 1);
    }

    #[test]
    fn class_three_agrees_with_structural_three_up_to_n6() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let class = regularity_class(&g);
                let structural = structural_regularity(&g);
                assert_eq!(
                    class == RegClass::Three,
                    structural == RegPrediction::Exact(3),
                    "{g:?}: class {class:?}, structural {structural:?}"
                );
            }
        }
    }

    #[test]
    fn class_three_certificates_avoid_irreducible_leaves() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                if regularity_class(&g) == RegClass::Three {
                    assert!(!join_decompose(&g).root.has_irreducible_leaf(), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn structural_values_on_named_graphs() {
        for n in 2..=7 {
            assert_eq!(
                structural_regularity(&Graph::path(n)),
                RegPrediction::Exact(n as u32)
            );
        }
        // Cone over two triangles-as-paths: additivity then the join formula.
        let paths = compose(&Graph::path(3), &Graph::path(3), Composition::DisjointUnion).unwrap();
        let cone = compose(&paths, &Graph::complete(1), Composition::Join).unwrap();
        assert_eq!(structural_regularity(&cone), RegPrediction::Exact(5));
        assert_eq!(structural_regularity(&Graph::cycle(5)), RegPrediction::Unknown);
    }

    #[test]
    fn existence_sweep_paths_joined_with_edgeless() {
        for n in 3..=7usize {
            for t in 3..=n {
                let g = compose(&Graph::path(t), &Graph::empty(n - t), Composition::Join).unwrap();
                assert_eq!(
                    structural_regularity(&g),
                    RegPrediction::Exact(t as u32),
                    "t={t} n={n}"
                );
            }
        }
    }

    #[test]
    fn induced_class_monotonicity_up_to_n6() {
        for n in 2..=6usize {
            for g in enumerate_graphs(n, false).unwrap() {
                let class = regularity_class(&g);
                if class == RegClass::AtLeastFour {
                    continue;
                }
                // No induced subgraph may exceed the class of the host.
                for m in 0..(1u64 << n) {
                    let vs: VertexSet = (1..=n).filter(|&v| m >> (v - 1) & 1 == 1).collect();
                    assert_ne!(
                        regularity_class(&g.induced_subgraph(vs)),
                        RegClass::AtLeastFour,
                        "{g:?} restricted to {vs:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn threshold_words() {
        use ThresholdStep::{Dominating as D, Isolated as I};
        assert_eq!(build_threshold(&[I, D]).unwrap(), Graph::complete(2));
        // The dominating vertex arrives last, so the star is centered at 3.
        assert_eq!(
            build_threshold(&[I, I, D]).unwrap(),
            Graph::from_edges(3, &[(1, 3), (2, 3)]).unwrap()
        );
        assert_eq!(build_threshold(&[]), Err(ClassifyError::EmptyWord));
        // Every threshold graph with an edge stays in the regularity <= 3 range.
        for len in 1..=6usize {
            for bits in 0..(1u32 << len) {
                let word: Vec<ThresholdStep> =
                    (0..len).map(|k| if bits >> k & 1 == 1 { D } else { I }).collect();
                let g = build_threshold(&word).unwrap();
                let class = regularity_class(&g);
                if g.has_any_edge() {
                    assert!(
                        class == RegClass::Two || class == RegClass::Three,
                        "{word:?} -> {class:?}"
                    );
                } else {
                    assert_eq!(class, RegClass::NoEdges);
                }
            }
        }
    }

    #[test]
    fn cm_gorenstein_patterns() {
        let cone = {
            let base =
                compose(&Graph::complete(2), &Graph::complete(3), Composition::DisjointUnion)
                    .unwrap();
            compose(&base, &Graph::complete(1), Composition::Join).unwrap()
        };
        let r = classify_cm_gorenstein(&cone).unwrap();
        assert!(r.cm_reg3 && !r.extremal_gorenstein);
        assert_eq!(r.pattern, CmPattern::ApexTwoCliques { r: 2, s: 3 });

        let two_k2 = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        let r = classify_cm_gorenstein(&two_k2).unwrap();
        assert!(r.cm_reg3 && r.extremal_gorenstein);
        assert_eq!(r.pattern, CmPattern::TwoCliques { r: 2, s: 2 });

        let r = classify_cm_gorenstein(&Graph::path(3)).unwrap();
        assert!(r.cm_reg3 && r.extremal_gorenstein);
        assert_eq!(r.pattern, CmPattern::ApexTwoCliques { r: 1, s: 1 });

        let r = classify_cm_gorenstein(&Graph::cycle(4)).unwrap();
        assert!(!r.cm_reg3 && !r.extremal_gorenstein);
        assert_eq!(r.pattern, CmPattern::None);

        assert!(!classify_cm_gorenstein(&Graph::complete(4)).unwrap().cm_reg3);

        let padded = compose(&two_k2, &Graph::empty(1), Composition::DisjointUnion).unwrap();
        assert_eq!(
            classify_cm_gorenstein(&padded),
            Err(ClassifyError::IsolatedVertices(vec![5]))
        );
    }

    #[test]
    fn counterexample_family() {
        let c = build_counterexample(&[3, 3]).unwrap();
        assert_eq!(c.graph.n(), 7);
        assert_eq!((c.predicted_reg, c.ell_plus_1), (5, 3));
        assert!(c.graph.is_connected());
        assert!(is_weakly_closed(&c.graph).unwrap().weakly_closed);
        assert_eq!(structural_regularity(&c.graph), RegPrediction::Exact(5));

        let c = build_counterexample(&[3, 4]).unwrap();
        assert_eq!((c.predicted_reg, c.ell_plus_1), (6, 4));

        let c = build_counterexample(&[9, 9, 9]).unwrap();
        assert_eq!(c.graph.n(), 28);
        assert_eq!((c.predicted_reg, c.ell_plus_1), (25, 9));
        assert!(c.graph.is_connected());
        // The creation order itself witnesses weak closure: path vertices
        // are consecutive and the apex dominates everything.
        let labels: Vec<usize> = (1..=28).collect();
        assert!(weakly_closed_labeling_valid(&c.graph, &labels));

        assert!(matches!(
            build_counterexample(&[5]),
            Err(ClassifyError::TooFewBlocks(1))
        ));
        assert!(matches!(
            build_counterexample(&[3, 2]),
            Err(ClassifyError::BlockTooSmall(2))
        ));
    }

    #[test]
    fn ell_matches_longest_induced_path() {
        for sizes in [[3usize, 3], [3, 4], [4, 4]] {
            let c = build_counterexample(&sizes).unwrap();
            assert_eq!(c.graph.longest_induced_path_length() as u32 + 1, c.ell_plus_1);
        }
    }

    #[test]
    fn certificate_serialization() {
        let cert = join_decompose(&Graph::cycle(4));
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["predicted_reg"], 3);
        assert_eq!(json["root"]["kind"], "join");
        assert_eq!(json["root"]["children"][0]["kind"], "block");
        assert_eq!(
            serde_json::to_value(RegPrediction::NoEdges).unwrap(),
            serde_json::json!("no_edges")
        );
    }
}
