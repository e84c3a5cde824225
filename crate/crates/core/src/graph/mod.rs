//! Finite simple graphs on vertex set `{1, ..., n}`.
//!
//! Adjacency is stored as one bitmask per vertex, which bounds `n` by 62 and
//! keeps neighborhood queries, complement and induced-subgraph operations
//! cheap. All public APIs speak 1-based vertex labels.

mod enumerate;
mod graph6;
mod invariants;

pub use enumerate::{canonical_form, canonical_key, enumerate_graphs, CANONICAL_CAP};
pub use graph6::{parse_edge_list, parse_graph6};
pub use invariants::{
    is_weakly_closed, is_weakly_closed_with_cap, maximal_cliques, min_connected_dominating_set,
    weakly_closed_labeling_valid, WeaklyClosedReport, WEAKLY_CLOSED_CAP,
};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

/// Largest vertex count representable by the bitmask adjacency encoding.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("graph6 parse error at byte {offset}: {kind}")]
    Graph6 { offset: usize, kind: Graph6ErrorKind },
    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("graph order {n} exceeds the cap {cap} for this operation")]
    CapExceeded { n: usize, cap: usize },
}

#[derive(Debug, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    MalformedHeader,
    UnsupportedLongForm,
    TruncatedBitVector,
    TrailingGarbage,
    ByteOutOfRange(u8),
    NonzeroPadding,
}

impl fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6ErrorKind::MalformedHeader => write!(f, "malformed header"),
            Graph6ErrorKind::UnsupportedLongForm => {
                write!(f, "multi-byte order encoding is not supported (n > 62)")
            }
            Graph6ErrorKind::TruncatedBitVector => write!(f, "truncated bit vector"),
            Graph6ErrorKind::TrailingGarbage => write!(f, "trailing garbage"),
            Graph6ErrorKind::ByteOutOfRange(b) => write!(f, "byte {b:#x} outside graph6 range"),
            Graph6ErrorKind::NonzeroPadding => write!(f, "nonzero padding bits"),
        }
    }
}

/// A set of vertices out of `{1, ..., 62}`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in 1..=n {
            s.insert(v);
        }
        s
    }

    pub(crate) fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// A finite simple graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph order {n} exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![0; n + 1],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..=n {
            for v in (u + 1)..=n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The path `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge(u, u + 1);
        }
        g
    }

    /// The cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(1, n);
        g
    }

    /// The star `K_{1,n-1}` with center `1`.
    pub fn star(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 2..=n {
            g.add_edge(1, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u == 0 || u > n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n);
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u64 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            let mut higher = self.adj[u] >> (u + 1);
            while higher != 0 {
                let off = higher.trailing_zeros() as usize;
                out.push((u, u + 1 + off));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj[1..].iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_any_edge(&self) -> bool {
        self.adj[1..].iter().any(|&m| m != 0)
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).0;
        let mut g = Graph::empty(self.n);
        for v in 1..=self.n {
            g.adj[v] = all & !self.adj[v] & !(1u64 << v);
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.vertices().all(|v| self.degree(v) == self.n - 1)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.adj[v] == 0).collect()
    }

    /// Connected components, sorted by (size, smallest vertex).
    ///
    /// With `of_complement` the components of the complement graph are
    /// returned instead; the complement is never materialized.
    pub fn components(&self, of_complement: bool) -> Vec<VertexSet> {
        self.components_within(self.vertex_set(), of_complement)
    }

    /// Connected components of the subgraph induced on `within`.
    pub fn components_within(&self, within: VertexSet, of_complement: bool) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut comps = Vec::new();
        while let Some(start) = remaining.min_vertex() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    let nbrs = if of_complement {
                        VertexSet(!self.adj[v]).intersection(within).difference(VertexSet::singleton(v))
                    } else {
                        VertexSet(self.adj[v]).intersection(within)
                    };
                    next = next.union(nbrs.difference(comp));
                }
                comp = comp.union(next);
                frontier = next;
            }
            remaining = remaining.difference(comp);
            comps.push(comp);
        }
        comps.sort_by_key(|c| (c.len(), c.min_vertex().unwrap_or(0)));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components(false).len() == 1
    }

    /// Subgraph induced on `vs`, relabeled onto `1..=|vs|` preserving label order.
    pub fn induced_subgraph(&self, vs: VertexSet) -> Graph {
        let verts = vs.to_vec();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i + 1, j + 1);
                }
            }
        }
        g
    }

    /// Length (edge count) of a longest induced path, by exhaustive search.
    ///
    /// Exponential in general; intended for the small-graph range (n up to
    /// roughly 12).
    pub fn longest_induced_path_length(&self) -> usize {
        let mut best = 0usize;
        // Extend simple paths whose internal adjacencies are exactly the
        // consecutive ones; starting from the smaller endpoint halves the work.
        for start in 1..=self.n {
            self.extend_induced_path(start, VertexSet::singleton(start), start, 0, &mut best);
        }
        best
    }

    fn extend_induced_path(
        &self,
        last: usize,
        used: VertexSet,
        start: usize,
        len: usize,
        best: &mut usize,
    ) {
        if len > *best {
            *best = len;
        }
        let forbidden: u64 = used
            .iter()
            .filter(|&v| v != last)
            .fold(0u64, |acc, v| acc | self.adj[v]);
        let mut cand = self.adj[last] & !used.bits() & !forbidden;
        if len == 0 {
            // For the second vertex only, break the path-reversal symmetry.
            cand &= !((1u64 << start) - 1);
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let mut used2 = used;
            used2.insert(v);
            self.extend_induced_path(v, used2, start, len + 1, best);
        }
    }

    /// Number of maximal cliques `c(G)`.
    pub fn maximal_clique_count(&self) -> usize {
        maximal_cliques(self).len()
    }

    pub fn to_graph6(&self) -> String {
        graph6::emit_graph6(self)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// How to combine two graphs in [`compose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Composition {
    /// Disjoint union `G1 ⊔ G2`.
    DisjointUnion,
    /// Join `G1 * G2`: disjoint union plus all edges between the two sides.
    Join,
}

/// Builds `G1 ⊔ G2` or `G1 * G2`, relabeling `G1` onto `1..=n1` and `G2` onto
/// `n1+1..=n1+n2`.
pub fn compose(g1: &Graph, g2: &Graph, how: Composition) -> Result<Graph, GraphError> {
    let n = g1.n + g2.n;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut g = Graph::empty(n);
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(u + g1.n, v + g1.n);
    }
    if how == Composition::Join {
        for u in 1..=g1.n {
            for v in (g1.n + 1)..=n {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Stock shapes a graph can be recognized as, up to equality of labeled graphs
/// being irrelevant: recognition is performed on the structure only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum GraphClass {
    Complete { r: usize },
    Edgeless { t: usize },
    Path { k: usize },
    Cycle { k: usize },
    Star { leaves: usize },
    General,
}

/// Recognizes `G` as one of the stock shapes, preferring the more specific
/// tag when several apply (`K_1`, `K_2`, `P_3` and friends are reported as
/// complete/edgeless before path/star).
pub fn classify_shape(g: &Graph) -> GraphClass {
    let n = g.n();
    if n == 0 {
        return GraphClass::Edgeless { t: 0 };
    }
    if !g.has_any_edge() {
        return GraphClass::Edgeless { t: n };
    }
    if g.is_complete() {
        return GraphClass::Complete { r: n };
    }
    let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let connected = g.is_connected();
    if connected && g.edge_count() == n - 1 && degrees.iter().all(|&d| d <= 2) {
        return GraphClass::Path { k: n };
    }
    if connected && g.edge_count() == n && degrees.iter().all(|&d| d == 2) {
        return GraphClass::Cycle { k: n };
    }
    if connected
        && g.edge_count() == n - 1
        && degrees.iter().filter(|&&d| d == n - 1).count() == 1
        && degrees.iter().filter(|&&d| d == 1).count() == n - 1
    {
        return GraphClass::Star { leaves: n - 1 };
    }
    GraphClass::General
}

/// True iff `G` is a path graph `P_k` for some `k >= 1`.
pub fn is_path_graph(g: &Graph) -> bool {
    match classify_shape(g) {
        GraphClass::Path { .. } => true,
        GraphClass::Complete { r } => r == 2,
        GraphClass::Edgeless { t } => t == 1,
        _ => false,
    }
}
