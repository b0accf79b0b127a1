//! Induced-pattern detection: linear forests of the shape rP1 + P5, and
//! small cliques (optionally with a prescribed non-neighbour).
//!
//! Detection is plain backtracking over ordered vertex choices with adjacency
//! pruning: the five path vertices are chosen first, then the r isolated
//! vertices from outside the pattern's neighbourhood. Candidates are visited
//! in lexicographic order of the tuple (b1..b5, a1 < ... < ar), with the path
//! orientation fixed by b1 < b5, so the first hit is deterministic.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};

/// A verified induced embedding of rP1 + P5.
///
/// `path_vertices` induce the P5 in order; `p1_vertices` are pairwise
/// non-adjacent and have no edges to the path. Construction re-checks all of
/// this against the host graph, so a hit certifies itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternHit {
    p1_vertices: Vec<Vertex>,
    path_vertices: [Vertex; 5],
}

impl PatternHit {
    fn verified(g: &Graph, p1: Vec<Vertex>, path: [Vertex; 5]) -> Option<Self> {
        let hit = PatternHit {
            p1_vertices: p1,
            path_vertices: path,
        };
        hit.verify(g).then_some(hit)
    }

    /// Re-checks that the recorded vertices induce exactly rP1 + P5 in `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut all: BTreeSet<Vertex> = self.p1_vertices.iter().copied().collect();
        all.extend(self.path_vertices);
        if all.len() != self.p1_vertices.len() + 5 {
            return false;
        }
        if !all.iter().all(|&v| g.has_vertex(v)) {
            return false;
        }
        let b = &self.path_vertices;
        for i in 0..5 {
            for j in (i + 1)..5 {
                let adjacent = g.has_edge(b[i], b[j]);
                if (j == i + 1) != adjacent {
                    return false;
                }
            }
        }
        for (i, &a) in self.p1_vertices.iter().enumerate() {
            for &a2 in &self.p1_vertices[i + 1..] {
                if g.has_edge(a, a2) {
                    return false;
                }
            }
            if b.iter().any(|&p| g.has_edge(a, p)) {
                return false;
            }
        }
        true
    }

    pub fn p1_vertices(&self) -> &[Vertex] {
        &self.p1_vertices
    }

    pub fn path_vertices(&self) -> &[Vertex; 5] {
        &self.path_vertices
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        let mut set: BTreeSet<Vertex> = self.p1_vertices.iter().copied().collect();
        set.extend(self.path_vertices);
        set
    }
}

/// Finds an induced rP1 + P5 in `g`, or None when there is none.
pub fn find_induced_linear(g: &Graph, r: usize) -> Option<PatternHit> {
    let vs: Vec<Vertex> = g.vertices().collect();
    if vs.len() < r + 5 {
        return None;
    }
    for &b1 in &vs {
        for &b2 in g.neighbours_of(b1).expect("listed vertex") {
            if b2 == b1 {
                continue;
            }
            for &b3 in g.neighbours_of(b2).expect("listed vertex") {
                if b3 == b1 || b3 == b2 || g.has_edge(b3, b1) {
                    continue;
                }
                for &b4 in g.neighbours_of(b3).expect("listed vertex") {
                    if b4 == b1 || b4 == b2 || b4 == b3 {
                        continue;
                    }
                    if g.has_edge(b4, b1) || g.has_edge(b4, b2) {
                        continue;
                    }
                    for &b5 in g.neighbours_of(b4).expect("listed vertex") {
                        if b5 <= b1 || b5 == b2 || b5 == b3 || b5 == b4 {
                            continue;
                        }
                        if g.has_edge(b5, b1) || g.has_edge(b5, b2) || g.has_edge(b5, b3) {
                            continue;
                        }
                        let path = [b1, b2, b3, b4, b5];
                        if let Some(p1) = extend_with_isolated(g, &vs, &path, r) {
                            return PatternHit::verified(g, p1, path);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Picks r pairwise non-adjacent vertices outside the path and not adjacent
/// to any path vertex, in increasing label order.
fn extend_with_isolated(
    g: &Graph,
    vs: &[Vertex],
    path: &[Vertex; 5],
    r: usize,
) -> Option<Vec<Vertex>> {
    let mut chosen: Vec<Vertex> = Vec::with_capacity(r);
    fn rec(g: &Graph, vs: &[Vertex], path: &[Vertex; 5], r: usize, chosen: &mut Vec<Vertex>) -> bool {
        if chosen.len() == r {
            return true;
        }
        let min = chosen.last().map_or(0, |&a| a + 1);
        for &v in vs.iter().filter(|&&v| v >= min) {
            if path.contains(&v) {
                continue;
            }
            if path.iter().any(|&p| g.has_edge(v, p)) {
                continue;
            }
            if chosen.iter().any(|&a| g.has_edge(v, a)) {
                continue;
            }
            chosen.push(v);
            if rec(g, vs, path, r, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    rec(g, vs, path, r, &mut chosen).then_some(chosen)
}

/// Whether `g` is (sP1 + P5)-free.
pub fn is_free(g: &Graph, s: usize) -> bool {
    find_induced_linear(g, s).is_none()
}

/// The smallest s for which `g` is (sP1 + P5)-free. P5-free graphs give 0.
pub fn minimal_free_s(g: &Graph) -> usize {
    let mut s = 0;
    while !is_free(g, s) {
        s += 1;
    }
    s
}

/// Finds a clique of exactly `k` vertices, deterministic first hit in
/// lexicographic order. When `forbidden_nonneighbour` is some vertex v, the
/// clique must avoid N(v) and v itself, so a hit witnesses an induced
/// K_k + P1 with v as the isolated vertex.
pub fn find_clique(
    g: &Graph,
    k: usize,
    forbidden_nonneighbour: Option<Vertex>,
) -> Option<BTreeSet<Vertex>> {
    if k == 0 {
        return Some(BTreeSet::new());
    }
    let allowed: Vec<Vertex> = match forbidden_nonneighbour {
        Some(v) => {
            let nbrs = g.neighbours_of(v).ok()?;
            g.vertices()
                .filter(|&u| u != v && !nbrs.contains(&u))
                .collect()
        }
        None => g.vertices().collect(),
    };
    let mut chosen: Vec<Vertex> = Vec::with_capacity(k);
    fn rec(g: &Graph, allowed: &[Vertex], k: usize, start: usize, chosen: &mut Vec<Vertex>) -> bool {
        if chosen.len() == k {
            return true;
        }
        for (i, &v) in allowed.iter().enumerate().skip(start) {
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                if rec(g, allowed, k, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(g, &allowed, k, 0, &mut chosen).then(|| chosen.into_iter().collect())
}
