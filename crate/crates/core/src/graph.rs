//! Simple undirected graphs over stable integer labels, with the contraction
//! and bookkeeping primitives the rest of the crate is built on.
//!
//! Graphs are immutable values: every operation that changes structure
//! returns a new graph. Adjacency is kept in per-vertex sorted sets so that
//! every iteration order is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Vertex label. Labels are stable: queries never renumber, and contractions
/// always mint fresh labels instead of reusing old ones.
pub type Vertex = u32;

/// Exact rational weight.
pub type Weight = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("{0} and {1} are not joined by an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(Vertex),
    #[error("weight of vertex {0} is negative")]
    NegativeWeight(Vertex),
    #[error("weight map does not cover vertex {0}")]
    MissingWeight(Vertex),
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph {
            adj: BTreeMap::new(),
        }
    }

    /// Graph on the labels `0..n` with no edges.
    pub fn edgeless(n: u32) -> Self {
        let mut g = Graph::new();
        for v in 0..n {
            g.adj.insert(v, BTreeSet::new());
        }
        g
    }

    /// Graph on the labels `0..n` with the given edges.
    pub fn from_edges(n: u32, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph on `0..n`.
    pub fn complete(n: u32) -> Self {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.insert_edge(u, v).expect("fresh labels");
            }
        }
        g
    }

    /// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
    pub fn cycle(n: u32) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::edgeless(n);
        for v in 0..n {
            g.insert_edge(v, (v + 1) % n).expect("fresh labels");
        }
        g
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: u32) -> Self {
        let mut g = Graph::edgeless(n);
        for v in 1..n {
            g.insert_edge(v - 1, v).expect("fresh labels");
        }
        g
    }

    pub(crate) fn insert_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.insert_vertex(u);
        self.insert_vertex(v);
        self.adj.get_mut(&u).expect("just inserted").insert(v);
        self.adj.get_mut(&v).expect("just inserted").insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Vertices in increasing label order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (&u, nbrs) in &self.adj {
            for &v in nbrs.range((u + 1)..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn neighbours_of(&self, v: Vertex) -> Result<&BTreeSet<Vertex>, GraphError> {
        self.adj.get(&v).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        Ok(self.neighbours_of(v)?.len())
    }

    /// The open neighbourhood of a set: all vertices outside `set` adjacent
    /// to some member of it.
    pub fn neighbourhood(&self, set: &BTreeSet<Vertex>) -> Result<BTreeSet<Vertex>, GraphError> {
        let mut out = BTreeSet::new();
        for &v in set {
            out.extend(self.neighbours_of(v)?.iter().copied());
        }
        Ok(out.difference(set).copied().collect())
    }

    /// Induced subgraph on `set`, keeping the original labels.
    pub fn induced(&self, set: &BTreeSet<Vertex>) -> Result<Graph, GraphError> {
        let mut g = Graph::new();
        for &v in set {
            let nbrs = self.neighbours_of(v)?;
            g.adj.insert(v, nbrs.intersection(set).copied().collect());
        }
        Ok(g)
    }

    /// The graph with one vertex (and its incident edges) removed.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::UnknownVertex(v));
        }
        let mut set = self.vertex_set();
        set.remove(&v);
        self.induced(&set)
    }

    /// The graph with a whole set of vertices removed.
    pub fn remove_set(&self, set: &BTreeSet<Vertex>) -> Result<Graph, GraphError> {
        for &v in set {
            if !self.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        let keep: BTreeSet<Vertex> = self.vertex_set().difference(set).copied().collect();
        self.induced(&keep)
    }

    /// Connectivity by breadth-first search. Graphs on zero or one vertices
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.adj.keys().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[&u] {
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.len() == self.adj.len()
    }

    /// Whether `set` induces a connected subgraph. The empty set and
    /// singletons count as connected.
    pub fn is_connected_set(&self, set: &BTreeSet<Vertex>) -> Result<bool, GraphError> {
        Ok(self.induced(set)?.is_connected())
    }

    /// Whether every vertex outside `dom` has a neighbour inside it.
    pub fn is_dominating(&self, dom: &BTreeSet<Vertex>) -> Result<bool, GraphError> {
        for &v in dom {
            if !self.has_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        for (&v, nbrs) in &self.adj {
            if !dom.contains(&v) && nbrs.intersection(dom).next().is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `set` meets every edge.
    pub fn is_vertex_cover(&self, set: &BTreeSet<Vertex>) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| set.contains(&u) || set.contains(&v))
    }

    pub fn is_clique(&self, set: &BTreeSet<Vertex>) -> bool {
        let vs: Vec<Vertex> = set.iter().copied().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_independent(&self, set: &BTreeSet<Vertex>) -> bool {
        let vs: Vec<Vertex> = set.iter().copied().collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex sets, ordered by least member.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.adj.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[&u] {
                    if comp.insert(v) {
                        queue.push_back(v);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    /// A shortest path between two vertices, as the vertex sequence from
    /// `from` to `to`, or None if they are in different components. BFS
    /// explores neighbours in label order, so the result is deterministic.
    pub fn shortest_path(
        &self,
        from: Vertex,
        to: Vertex,
    ) -> Result<Option<Vec<Vertex>>, GraphError> {
        if !self.has_vertex(from) {
            return Err(GraphError::UnknownVertex(from));
        }
        if !self.has_vertex(to) {
            return Err(GraphError::UnknownVertex(to));
        }
        if from == to {
            return Ok(Some(vec![from]));
        }
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &v in &self.adj[&u] {
                if v != from && !parent.contains_key(&v) {
                    parent.insert(v, u);
                    if v == to {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if !parent.contains_key(&to) {
            return Ok(None);
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[&cur];
            path.push(cur);
        }
        path.reverse();
        Ok(Some(path))
    }

    /// Largest label present, if any.
    pub fn max_label(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }
}

impl Default for Graph {
    fn default() -> Self {
        Graph::new()
    }
}

/// Records, across a sequence of contractions and deletions, which original
/// vertices every live vertex stands for. Lifting a set of live vertices
/// back to original labels is the union of their represented sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionTrace {
    classes: BTreeMap<Vertex, BTreeSet<Vertex>>,
    merges: Vec<MergeEvent>,
    next_label: Vertex,
}

/// One merge step: `left` and `right` were replaced by `into`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeEvent {
    pub left: Vertex,
    pub right: Vertex,
    pub into: Vertex,
}

impl ContractionTrace {
    /// Identity trace over the graph's current vertices.
    pub fn identity(g: &Graph) -> Self {
        let classes: BTreeMap<Vertex, BTreeSet<Vertex>> =
            g.vertices().map(|v| (v, BTreeSet::from([v]))).collect();
        let next_label = g.max_label().map_or(0, |m| m + 1);
        ContractionTrace {
            classes,
            merges: Vec::new(),
            next_label,
        }
    }

    /// Original vertices represented by a live vertex.
    pub fn class_of(&self, live: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.classes.get(&live)
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.classes.keys().copied()
    }

    pub fn merge_count(&self) -> usize {
        self.merges.len()
    }

    pub fn merges(&self) -> &[MergeEvent] {
        &self.merges
    }

    /// Union of represented sets of the given live vertices.
    pub fn lift(&self, live: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        for v in live {
            if let Some(class) = self.classes.get(v) {
                out.extend(class.iter().copied());
            }
        }
        out
    }

    fn fresh_label(&mut self) -> Vertex {
        let label = self.next_label;
        self.next_label += 1;
        label
    }

    fn merge(&mut self, u: Vertex, v: Vertex) -> Vertex {
        let into = self.fresh_label();
        let mut class = self.classes.remove(&u).expect("live vertex");
        class.extend(self.classes.remove(&v).expect("live vertex"));
        self.classes.insert(into, class);
        self.merges.push(MergeEvent {
            left: u,
            right: v,
            into,
        });
        into
    }

    /// Forget a live vertex entirely; its represented originals are returned
    /// so the caller can account for them as deleted.
    pub(crate) fn drop_live(&mut self, v: Vertex) -> BTreeSet<Vertex> {
        self.classes.remove(&v).expect("live vertex")
    }
}

/// Contracts the edge `uv`: both endpoints are replaced by a single fresh
/// vertex adjacent to exactly the union of their neighbourhoods. Returns the
/// new graph, the updated trace, and the fresh label.
pub fn contract_edge(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    trace: &ContractionTrace,
) -> Result<(Graph, ContractionTrace, Vertex), GraphError> {
    if !g.has_vertex(u) {
        return Err(GraphError::UnknownVertex(u));
    }
    if !g.has_vertex(v) {
        return Err(GraphError::UnknownVertex(v));
    }
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    let mut trace = trace.clone();
    let merged = trace.merge(u, v);
    let mut joint: BTreeSet<Vertex> = g.adj[&u].union(&g.adj[&v]).copied().collect();
    joint.remove(&u);
    joint.remove(&v);
    let mut adj = g.adj.clone();
    adj.remove(&u);
    adj.remove(&v);
    for nbrs in adj.values_mut() {
        nbrs.remove(&u);
        nbrs.remove(&v);
    }
    for &w in &joint {
        adj.get_mut(&w).expect("neighbour is live").insert(merged);
    }
    adj.insert(merged, joint);
    Ok((Graph { adj }, trace, merged))
}

/// Association from original vertex labels to non-negative rational weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap {
    weights: BTreeMap<Vertex, Weight>,
}

impl WeightMap {
    /// Builds a weight map, rejecting negative entries.
    pub fn new(weights: BTreeMap<Vertex, Weight>) -> Result<Self, GraphError> {
        for (&v, w) in &weights {
            if w.is_negative() {
                return Err(GraphError::NegativeWeight(v));
            }
        }
        Ok(WeightMap { weights })
    }

    /// Weight 1 on every vertex of the graph.
    pub fn ones(g: &Graph) -> Self {
        WeightMap {
            weights: g.vertices().map(|v| (v, Weight::one())).collect(),
        }
    }

    /// Checks the map covers every vertex of `g`.
    pub fn covers(&self, g: &Graph) -> Result<(), GraphError> {
        for v in g.vertices() {
            if !self.weights.contains_key(&v) {
                return Err(GraphError::MissingWeight(v));
            }
        }
        Ok(())
    }

    pub fn get(&self, v: Vertex) -> Result<&Weight, GraphError> {
        self.weights.get(&v).ok_or(GraphError::MissingWeight(v))
    }

    pub fn set(&mut self, v: Vertex, w: Weight) -> Result<(), GraphError> {
        if w.is_negative() {
            return Err(GraphError::NegativeWeight(v));
        }
        self.weights.insert(v, w);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &Weight)> {
        self.weights.iter().map(|(&v, w)| (v, w))
    }

    /// Total weight of a vertex set.
    pub fn total(&self, set: &BTreeSet<Vertex>) -> Result<Weight, GraphError> {
        let mut sum = Weight::zero();
        for &v in set {
            sum += self.get(v)?;
        }
        Ok(sum)
    }
}

/// Convenience for exact integral weights.
pub fn weight_from_int(n: i64) -> Weight {
    Weight::from_integer(BigInt::from(n))
}

/// Exact rational weight p/q.
pub fn weight_from_ratio(p: i64, q: i64) -> Weight {
    Weight::new(BigInt::from(p), BigInt::from(q))
}
