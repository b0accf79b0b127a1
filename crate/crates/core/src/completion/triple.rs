//! The cover-complete triple (G, J, y): J independent, y adjacent to every
//! vertex outside J, and every other J-vertex's neighbourhood independent.
//! Triples carry a contraction trace back to the graph they were validated
//! on, so solutions can always be expressed in original labels.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use thiserror::Error;

use crate::graph::{
    contract_edge, ContractionTrace, Graph, GraphError, Vertex, Weight, WeightMap,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleProperty {
    /// (A): J must be an independent set.
    Independence,
    /// (B): y must be adjacent to every vertex outside J.
    Universality,
    /// (C): the neighbours of each vertex of J minus y must be independent.
    NeighbourhoodIndependence,
    /// The graph must be connected.
    Connectivity,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompletionError {
    #[error("y = {0} is not a member of J")]
    YNotInJ(Vertex),
    #[error("the triple is not cover-complete; failed properties: {0:?}")]
    NotCoverComplete(Vec<TripleProperty>),
    #[error("set-contraction target {0} lies inside J")]
    ContractInsideJ(Vertex),
    #[error("greedy clique construction got stuck at {0}; the triple violates its preconditions")]
    GreedyStuck(Vertex),
    #[error("no candidate cover was produced; the instance violates the solver's preconditions")]
    NoCandidates,
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A validated cover-complete triple, plus the bookkeeping needed to lift
/// solutions of contracted descendants back to the original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCompleteTriple {
    graph: Graph,
    j: BTreeSet<Vertex>,
    y: Vertex,
    trace: ContractionTrace,
    /// Original labels removed outright by reduction rules.
    deleted: BTreeSet<Vertex>,
    /// Weights on live vertices; contracted weights are summed.
    weights: Option<WeightMap>,
    /// The graph the root triple was validated on; lifted covers are checked
    /// against it.
    base: Graph,
}

/// Checks properties (A), (B), (C) and connectivity for (g, j, y) and wraps
/// the result as a triple with an identity trace.
pub fn validate_triple(
    g: &Graph,
    j: &BTreeSet<Vertex>,
    y: Vertex,
    weights: Option<&WeightMap>,
) -> Result<CoverCompleteTriple, CompletionError> {
    if !j.contains(&y) {
        return Err(CompletionError::YNotInJ(y));
    }
    for &x in j {
        if !g.has_vertex(x) {
            return Err(CompletionError::Graph(GraphError::UnknownVertex(x)));
        }
    }
    if let Some(w) = weights {
        w.covers(g)?;
    }
    let failed = failed_properties(g, j, y)?;
    if !failed.is_empty() {
        return Err(CompletionError::NotCoverComplete(failed));
    }
    Ok(CoverCompleteTriple {
        graph: g.clone(),
        j: j.clone(),
        y,
        trace: ContractionTrace::identity(g),
        deleted: BTreeSet::new(),
        weights: weights.cloned(),
        base: g.clone(),
    })
}

fn failed_properties(
    g: &Graph,
    j: &BTreeSet<Vertex>,
    y: Vertex,
) -> Result<Vec<TripleProperty>, GraphError> {
    let mut failed = Vec::new();
    if !g.is_independent(j) {
        failed.push(TripleProperty::Independence);
    }
    let y_nbrs = g.neighbours_of(y)?;
    if g.vertices().any(|v| !j.contains(&v) && !y_nbrs.contains(&v)) {
        failed.push(TripleProperty::Universality);
    }
    for &x in j {
        if x == y {
            continue;
        }
        let outside: BTreeSet<Vertex> = g
            .neighbours_of(x)?
            .iter()
            .copied()
            .filter(|v| !j.contains(v))
            .collect();
        if !g.is_independent(&outside) {
            failed.push(TripleProperty::NeighbourhoodIndependence);
            break;
        }
    }
    if !g.is_connected() {
        failed.push(TripleProperty::Connectivity);
    }
    Ok(failed)
}

/// Two non-adjacent L-vertices whose private J-neighbours witness an induced
/// P5 through y.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PseudoPair {
    pub w1: Vertex,
    pub w2: Vertex,
    pub x1: Vertex,
    pub x2: Vertex,
}

/// Three L-vertices (w1 non-adjacent to both, w2 adjacent to w3) with
/// witnesses x1, x2 forcing an induced P5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PseudoTriple {
    pub w1: Vertex,
    pub w2: Vertex,
    pub w3: Vertex,
    pub x1: Vertex,
    pub x2: Vertex,
}

impl CoverCompleteTriple {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn j_set(&self) -> &BTreeSet<Vertex> {
        &self.j
    }

    pub fn y(&self) -> Vertex {
        self.y
    }

    pub fn trace(&self) -> &ContractionTrace {
        &self.trace
    }

    pub fn deleted(&self) -> &BTreeSet<Vertex> {
        &self.deleted
    }

    pub fn weights(&self) -> Option<&WeightMap> {
        self.weights.as_ref()
    }

    pub fn base_graph(&self) -> &Graph {
        &self.base
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// L = N(J minus y): the outside vertices with a neighbour in J other
    /// than y.
    pub fn l_set(&self) -> BTreeSet<Vertex> {
        let mut rest = self.j.clone();
        rest.remove(&self.y);
        self.graph
            .neighbourhood(&rest)
            .expect("J lives in the graph")
            .difference(&self.j)
            .copied()
            .collect()
    }

    /// The J of this triple expressed in original labels.
    pub fn lifted_j(&self) -> BTreeSet<Vertex> {
        self.trace.lift(&self.j)
    }

    /// Weight of a live vertex: the stored merged weight, or 1 per
    /// represented original when unweighted.
    pub fn live_weight(&self, v: Vertex) -> Weight {
        match &self.weights {
            Some(w) => w.get(v).expect("weights cover live vertices").clone(),
            None => crate::graph::weight_from_int(
                self.trace.class_of(v).map_or(0, |c| c.len()) as i64
            ),
        }
    }

    /// Total weight of a set of live vertices.
    pub fn live_weight_of(&self, set: &BTreeSet<Vertex>) -> Weight {
        let mut sum = Weight::zero();
        for &v in set {
            sum += self.live_weight(v);
        }
        sum
    }

    /// Set-contracts via `w`: merges J_w = N(w) ∩ J together with w into a
    /// single fresh vertex, which becomes the new y. Weights of the merged
    /// vertices are summed.
    ///
    /// Any vertex outside J is a valid target: by (B) it is adjacent to y,
    /// so J_w is never empty. (Targets outside L simply have J_w = {y}.)
    pub fn set_contract(&self, w: Vertex) -> Result<CoverCompleteTriple, CompletionError> {
        if self.j.contains(&w) {
            return Err(CompletionError::ContractInsideJ(w));
        }
        let w_nbrs = self.graph.neighbours_of(w)?;
        let j_w: BTreeSet<Vertex> = w_nbrs.intersection(&self.j).copied().collect();
        if !j_w.contains(&self.y) {
            return Err(CompletionError::Internal(format!(
                "property (B) is broken: {w} is not adjacent to y = {}",
                self.y
            )));
        }
        let merged_weight = self.weights.as_ref().map(|wm| {
            let mut sum = wm.get(w).expect("weights cover live vertices").clone();
            for &x in &j_w {
                sum += wm.get(x).expect("weights cover live vertices");
            }
            sum
        });

        let mut graph = self.graph.clone();
        let mut trace = self.trace.clone();
        let mut merged = w;
        for &x in &j_w {
            let (g2, t2, m) = contract_edge(&graph, x, merged, &trace)?;
            graph = g2;
            trace = t2;
            merged = m;
        }
        let y_w = merged;

        let mut j: BTreeSet<Vertex> = self.j.difference(&j_w).copied().collect();
        j.insert(y_w);

        let weights = match (&self.weights, merged_weight) {
            (Some(wm), Some(sum)) => {
                let mut map: BTreeMap<Vertex, Weight> = wm
                    .iter()
                    .filter(|(v, _)| graph.has_vertex(*v))
                    .map(|(v, wt)| (v, wt.clone()))
                    .collect();
                map.insert(y_w, sum);
                Some(WeightMap::new(map)?)
            }
            _ => None,
        };

        let next = CoverCompleteTriple {
            graph,
            j,
            y: y_w,
            trace,
            deleted: self.deleted.clone(),
            weights,
            base: self.base.clone(),
        };
        next.recheck()?;
        Ok(next)
    }

    /// Removes a live vertex outside J, marking its represented originals as
    /// deleted. The caller is responsible for the resulting triple still
    /// being connected; this only re-checks.
    pub(crate) fn delete_outside_vertex(
        &self,
        v: Vertex,
    ) -> Result<CoverCompleteTriple, CompletionError> {
        if self.j.contains(&v) {
            return Err(CompletionError::ContractInsideJ(v));
        }
        let graph = self.graph.remove_vertex(v)?;
        let mut trace = self.trace.clone();
        let class = trace.drop_live(v);
        let mut deleted = self.deleted.clone();
        deleted.extend(class);
        let weights = match &self.weights {
            Some(wm) => {
                let map: BTreeMap<Vertex, Weight> = wm
                    .iter()
                    .filter(|(u, _)| *u != v)
                    .map(|(u, wt)| (u, wt.clone()))
                    .collect();
                Some(WeightMap::new(map)?)
            }
            None => None,
        };
        Ok(CoverCompleteTriple {
            graph,
            j: self.j.clone(),
            y: self.y,
            trace,
            deleted,
            weights,
            base: self.base.clone(),
        })
    }

    /// Re-checks (A), (B), (C) and connectivity; set-contraction must
    /// preserve all four.
    pub(crate) fn recheck(&self) -> Result<(), CompletionError> {
        let failed = failed_properties(&self.graph, &self.j, self.y)?;
        if failed.is_empty() {
            Ok(())
        } else {
            Err(CompletionError::Internal(format!(
                "derived triple lost cover-completeness: {failed:?}"
            )))
        }
    }

    /// Whether the graph (without this triple's deleted vertices) is still
    /// connected after removing `v`.
    pub(crate) fn stays_connected_without(&self, v: Vertex) -> Result<bool, GraphError> {
        Ok(self.graph.remove_vertex(v)?.is_connected())
    }

    /// All pseudo-dominating pairs, as unordered pairs w1 < w2 with the
    /// least-label witnesses, in lexicographic order.
    pub fn find_pseudo_pairs(&self) -> Vec<PseudoPair> {
        let l: Vec<Vertex> = self.l_set().into_iter().collect();
        let mut out = Vec::new();
        for (i, &w1) in l.iter().enumerate() {
            for &w2 in &l[i + 1..] {
                if self.graph.has_edge(w1, w2) {
                    continue;
                }
                let x1 = self.private_j_neighbour(w1, &[w2]);
                let x2 = self.private_j_neighbour(w2, &[w1]);
                if let (Some(x1), Some(x2)) = (x1, x2) {
                    let pair = PseudoPair { w1, w2, x1, x2 };
                    debug_assert!(self.verify_pair(&pair));
                    out.push(pair);
                }
            }
        }
        out
    }

    /// All pseudo-dominating triples (w1, w2, w3) with least-label
    /// witnesses, in lexicographic order of the ordered tuple.
    pub fn find_pseudo_triples(&self) -> Vec<PseudoTriple> {
        let l: Vec<Vertex> = self.l_set().into_iter().collect();
        let mut out = Vec::new();
        for &w1 in &l {
            for &w2 in &l {
                if w2 == w1 || self.graph.has_edge(w1, w2) {
                    continue;
                }
                for &w3 in &l {
                    if w3 == w1 || w3 == w2 {
                        continue;
                    }
                    if self.graph.has_edge(w1, w3) || !self.graph.has_edge(w2, w3) {
                        continue;
                    }
                    let x1 = self.private_j_neighbour(w1, &[w2, w3]);
                    let x2 = self
                        .j
                        .iter()
                        .copied()
                        .find(|&x| {
                            self.graph.has_edge(x, w1)
                                && self.graph.has_edge(x, w2)
                                && !self.graph.has_edge(x, w3)
                        });
                    if let (Some(x1), Some(x2)) = (x1, x2) {
                        let triple = PseudoTriple { w1, w2, w3, x1, x2 };
                        debug_assert!(self.verify_triple_structure(&triple));
                        out.push(triple);
                    }
                }
            }
        }
        out
    }

    /// Least J-neighbour of `w` that is adjacent to none of `avoid`.
    fn private_j_neighbour(&self, w: Vertex, avoid: &[Vertex]) -> Option<Vertex> {
        self.j.iter().copied().find(|&x| {
            self.graph.has_edge(x, w) && avoid.iter().all(|&a| !self.graph.has_edge(x, a))
        })
    }

    fn verify_pair(&self, p: &PseudoPair) -> bool {
        let l = self.l_set();
        l.contains(&p.w1)
            && l.contains(&p.w2)
            && !self.graph.has_edge(p.w1, p.w2)
            && self.j.contains(&p.x1)
            && self.j.contains(&p.x2)
            && self.graph.has_edge(p.x1, p.w1)
            && !self.graph.has_edge(p.x1, p.w2)
            && self.graph.has_edge(p.x2, p.w2)
            && !self.graph.has_edge(p.x2, p.w1)
    }

    fn verify_triple_structure(&self, t: &PseudoTriple) -> bool {
        let l = self.l_set();
        l.contains(&t.w1)
            && l.contains(&t.w2)
            && l.contains(&t.w3)
            && !self.graph.has_edge(t.w1, t.w2)
            && !self.graph.has_edge(t.w1, t.w3)
            && self.graph.has_edge(t.w2, t.w3)
            && t.x1 != t.x2
            && self.graph.has_edge(t.x1, t.w1)
            && !self.graph.has_edge(t.x1, t.w2)
            && !self.graph.has_edge(t.x1, t.w3)
            && self.graph.has_edge(t.x2, t.w1)
            && self.graph.has_edge(t.x2, t.w2)
            && !self.graph.has_edge(t.x2, t.w3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::weight_from_int;

    #[test]
    fn star_with_centre_y_is_valid() {
        // K_{1,3} with y the centre: (A) and (C) are vacuous, (B) holds by
        // construction.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0]), 0, None).unwrap();
        assert_eq!(t.j_set(), &BTreeSet::from([0]));
        assert!(t.l_set().is_empty());
    }

    #[test]
    fn two_triangle_vertices_fail_independence() {
        let g = Graph::complete(3);
        let err = validate_triple(&g, &BTreeSet::from([0, 1]), 0, None).unwrap_err();
        match err {
            CompletionError::NotCoverComplete(failed) => {
                assert!(failed.contains(&TripleProperty::Independence));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    /// A layered instance in the shape of the worked set-contraction figure:
    /// J independent, y universal to the outside, the other J-vertices with
    /// independent neighbourhoods.
    fn layered() -> (Graph, BTreeSet<Vertex>, Vertex) {
        // J = {0 (=y), 1, 2}; outside = {3, 4, 5, 6}.
        let g = Graph::from_edges(
            7,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 3),
                (1, 5),
                (2, 4),
                (3, 4), // an edge inside the outside part
            ],
        )
        .unwrap();
        (g, BTreeSet::from([0, 1, 2]), 0)
    }

    #[test]
    fn layered_instance_is_valid() {
        let (g, j, y) = layered();
        let t = validate_triple(&g, &j, y, None).unwrap();
        assert_eq!(t.l_set(), BTreeSet::from([3, 4, 5]));
    }

    #[test]
    fn c_violation_is_reported() {
        // x = 1 sees the adjacent pair 3, 4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (3, 4)]).unwrap();
        let err = validate_triple(&g, &BTreeSet::from([0, 1]), 0, None).unwrap_err();
        match err {
            CompletionError::NotCoverComplete(failed) => {
                assert_eq!(failed, vec![TripleProperty::NeighbourhoodIndependence]);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn set_contract_with_singleton_j_contracts_one_edge() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0]), 0, None).unwrap();
        let t2 = t.set_contract(1).unwrap();
        assert_eq!(t2.graph().vertex_count(), 2);
        assert_eq!(t2.lifted_j(), BTreeSet::from([0, 1]));
    }

    #[test]
    fn set_contract_merges_j_w_and_sums_weights() {
        // y=0, x1=1 in J; w=2 adjacent to both; a=3 adjacent to y only.
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2)]).unwrap();
        let mut wm = BTreeMap::new();
        for v in 0..4 {
            wm.insert(v, weight_from_int(v as i64 + 1));
        }
        let w = WeightMap::new(wm).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0, 1]), 0, Some(&w)).unwrap();
        let t2 = t.set_contract(2).unwrap();
        // {0, 1, 2} merged into the new y; only vertex 3 remains beside it.
        assert_eq!(t2.graph().vertex_count(), 2);
        assert_eq!(t2.j_set().len(), 1);
        let y2 = t2.y();
        assert_eq!(t2.trace().class_of(y2).unwrap(), &BTreeSet::from([0, 1, 2]));
        assert_eq!(t2.live_weight(y2), weight_from_int(1 + 2 + 3));
        assert!(t2.graph().has_edge(y2, 3));
    }

    #[test]
    fn set_contract_shrinks_by_j_w_size() {
        let (g, j, y) = layered();
        let t = validate_triple(&g, &j, y, None).unwrap();
        // Contracting via 3 merges {0, 1, 3}: two fewer vertices.
        let t2 = t.set_contract(3).unwrap();
        assert_eq!(t2.graph().vertex_count(), g.vertex_count() - 2);
        // Via a vertex with |J_w| = 1 the drop is exactly one.
        let t3 = t.set_contract(6).unwrap();
        assert_eq!(t3.graph().vertex_count(), g.vertex_count() - 1);
    }

    #[test]
    fn set_contract_rejects_j_members() {
        let (g, j, y) = layered();
        let t = validate_triple(&g, &j, y, None).unwrap();
        assert!(matches!(
            t.set_contract(1),
            Err(CompletionError::ContractInsideJ(1))
        ));
    }

    /// The pseudo-pair configuration: L = {w1, w2} non-adjacent, each with a
    /// private witness in J.
    fn pair_instance() -> CoverCompleteTriple {
        // y=0, x1=1, x2=2; w1=3, w2=4. Edges: y-w1, y-w2, x1-w1, x2-w2.
        let g = Graph::from_edges(5, &[(0, 3), (0, 4), (1, 3), (2, 4)]).unwrap();
        validate_triple(&g, &BTreeSet::from([0, 1, 2]), 0, None).unwrap()
    }

    #[test]
    fn pair_configuration_is_reported_exactly_once() {
        let t = pair_instance();
        let pairs = t.find_pseudo_pairs();
        assert_eq!(
            pairs,
            vec![PseudoPair {
                w1: 3,
                w2: 4,
                x1: 1,
                x2: 2
            }]
        );
        assert!(t.find_pseudo_triples().is_empty());
    }

    #[test]
    fn singleton_j_has_no_pseudo_structures() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0]), 0, None).unwrap();
        assert!(t.find_pseudo_pairs().is_empty());
        assert!(t.find_pseudo_triples().is_empty());
    }

    #[test]
    fn p5_free_triple_has_no_pseudo_structures() {
        // Outside part a triangle: adjacent L-vertices rule out pairs, and
        // the longest induced path has four vertices.
        let g = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (3, 4), (3, 5), (4, 5), (1, 3), (2, 4)],
        )
        .unwrap();
        assert!(crate::detection::is_free(&g, 0));
        let t = validate_triple(&g, &BTreeSet::from([0, 1, 2]), 0, None).unwrap();
        assert!(t.find_pseudo_pairs().is_empty());
        assert!(t.find_pseudo_triples().is_empty());
    }

    #[test]
    fn triple_configuration_is_found() {
        // y=0; x1=1, x2=2, x3=3 in J; w1=4, w2=5, w3=6.
        // Edges: y to all w's; x1-w1, x2-w1, x2-w2, w2-w3, x3-w3.
        let g = Graph::from_edges(
            7,
            &[
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 4),
                (2, 4),
                (2, 5),
                (5, 6),
                (3, 6),
            ],
        )
        .unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0, 1, 2, 3]), 0, None).unwrap();
        let triples = t.find_pseudo_triples();
        assert!(triples.contains(&PseudoTriple {
            w1: 4,
            w2: 5,
            w3: 6,
            x1: 1,
            x2: 2
        }));
        // A pseudo-pair also hides here: (4, 6) with witnesses 1 and 3.
        assert!(t
            .find_pseudo_pairs()
            .contains(&PseudoPair {
                w1: 4,
                w2: 6,
                x1: 1,
                x2: 3
            }));
    }

    #[test]
    fn pseudo_pair_forces_induced_p5() {
        // The defining configuration puts x1-w1-y-w2-x2 on an induced path.
        let t = pair_instance();
        assert!(!crate::detection::is_free(t.graph(), 0));
    }

    #[test]
    fn adjacent_l_vertices_share_no_witness() {
        // For every edge inside L, no vertex of J minus y sees both ends;
        // this is forced by (C) on every valid triple.
        let (g, j, y) = layered();
        let t = validate_triple(&g, &j, y, None).unwrap();
        let l: Vec<Vertex> = t.l_set().into_iter().collect();
        for (i, &w1) in l.iter().enumerate() {
            for &w2 in &l[i + 1..] {
                if !g.has_edge(w1, w2) {
                    continue;
                }
                for &x in &j {
                    if x == y {
                        continue;
                    }
                    assert!(!(g.has_edge(x, w1) && g.has_edge(x, w2)));
                }
            }
        }
    }
}
