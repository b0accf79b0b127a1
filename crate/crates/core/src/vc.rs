//! Exact minimum (weighted) vertex cover.
//!
//! This stands in for the polynomial black box the rest of the pipeline
//! assumes: the contract is exactness and determinism, not the asymptotic
//! bound. The engine is branch and reduce — isolated-vertex removal,
//! weight-guarded degree-1 and dominance rules, maximal-matching lower
//! bounds, branching on a maximum-degree vertex — which is plenty at the
//! instance sizes the solver ever feeds it.
//!
//! `min_vertex_cover` resolves ties by smaller cardinality and then the
//! lexicographically least vertex set. The value engine alone returns some
//! deterministic optimal cover; the public entry point then rebuilds the
//! lexicographically least optimum with one feasibility probe per vertex.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::graph::{weight_from_int, Graph, GraphError, Vertex, Weight, WeightMap};

/// An exact minimum cover with its size and total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcResult {
    pub cover: BTreeSet<Vertex>,
    pub size: usize,
    pub weight: Weight,
}

/// Minimum-cardinality cover when `w` is None, minimum-weight cover
/// otherwise; ties broken by smaller cardinality, then the lexicographically
/// least vertex set.
pub fn min_vertex_cover(g: &Graph, w: Option<&WeightMap>) -> Result<VcResult, GraphError> {
    if let Some(wm) = w {
        wm.covers(g)?;
    }
    let inst = Instance::new(g, w);
    let (opt_w, opt_c, _) = inst.clone().solve(None).expect("unbounded search");

    let weight_of = |set: &BTreeSet<Vertex>| -> Result<Weight, GraphError> {
        match w {
            Some(wm) => wm.total(set),
            None => Ok(weight_from_int(set.len() as i64)),
        }
    };

    // Greedy lexicographic reconstruction: a vertex joins the cover exactly
    // when some optimum extends the decisions made so far through it.
    let mut taken: BTreeSet<Vertex> = BTreeSet::new();
    let mut excluded: BTreeSet<Vertex> = BTreeSet::new();
    for v in g.vertices() {
        taken.insert(v);
        let ok = match Instance::with_forced(g, w, &taken, &excluded) {
            Some((inst, forced)) => {
                let forced_w = weight_of(&forced)?;
                forced_w <= opt_w
                    && forced.len() <= opt_c
                    && inst
                        .solve(Some((&(&opt_w - &forced_w), &(opt_c - forced.len()))))
                        .is_some_and(|(fw, fc, _)| {
                            fw == &opt_w - &forced_w && fc == opt_c - forced.len()
                        })
            }
            None => false,
        };
        if !ok {
            taken.remove(&v);
            excluded.insert(v);
        }
    }
    Ok(VcResult {
        size: taken.len(),
        weight: match w {
            Some(wm) => wm.total(&taken)?,
            None => weight_from_int(taken.len() as i64),
        },
        cover: taken,
    })
}

/// Crate-internal fast path: exact value plus one deterministic optimal
/// witness, skipping the lexicographic refinement.
pub(crate) fn min_vertex_cover_value(
    g: &Graph,
    w: Option<&WeightMap>,
) -> Result<VcResult, GraphError> {
    if let Some(wm) = w {
        wm.covers(g)?;
    }
    let (weight, size, cover) = Instance::new(g, w).solve(None).expect("unbounded search");
    Ok(VcResult {
        cover,
        size,
        weight,
    })
}

#[derive(Clone)]
struct Instance {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    weights: BTreeMap<Vertex, Weight>,
}

impl Instance {
    fn new(g: &Graph, w: Option<&WeightMap>) -> Self {
        let adj: BTreeMap<Vertex, BTreeSet<Vertex>> = g
            .vertices()
            .map(|v| (v, g.neighbours_of(v).expect("listed vertex").clone()))
            .collect();
        let weights = g
            .vertices()
            .map(|v| {
                (
                    v,
                    w.map_or_else(|| weight_from_int(1), |wm| {
                        wm.get(v).expect("checked coverage").clone()
                    }),
                )
            })
            .collect();
        Instance { adj, weights }
    }

    /// Builds an instance with forced decisions applied: `taken` vertices go
    /// into the cover, `excluded` vertices force all their neighbours in.
    /// Returns the reduced instance together with the complete forced-in set
    /// (the caller accounts for its weight), or None when the forced choices
    /// are contradictory (an edge with both endpoints excluded).
    fn with_forced(
        g: &Graph,
        w: Option<&WeightMap>,
        taken: &BTreeSet<Vertex>,
        excluded: &BTreeSet<Vertex>,
    ) -> Option<(Self, BTreeSet<Vertex>)> {
        let mut inst = Instance::new(g, w);
        let mut force_in: BTreeSet<Vertex> = taken.clone();
        for &v in excluded {
            for &u in &inst.adj[&v] {
                if excluded.contains(&u) {
                    return None;
                }
                force_in.insert(u);
            }
        }
        for &v in &force_in {
            if inst.adj.contains_key(&v) {
                inst.take(v);
            }
        }
        for &v in excluded {
            if inst.adj.contains_key(&v) {
                inst.drop_isolated(v);
            }
        }
        Some((inst, force_in))
    }

    fn take(&mut self, v: Vertex) {
        let nbrs = self.adj.remove(&v).expect("live vertex");
        for u in nbrs {
            self.adj.get_mut(&u).expect("live vertex").remove(&v);
        }
        self.weights.remove(&v);
    }

    fn drop_isolated(&mut self, v: Vertex) {
        debug_assert!(self.adj[&v].is_empty());
        self.adj.remove(&v);
        self.weights.remove(&v);
    }

    fn max_degree_vertex(&self) -> Option<(Vertex, usize)> {
        let mut best: Option<(Vertex, usize)> = None;
        for (&v, nbrs) in &self.adj {
            let d = nbrs.len();
            if best.is_none_or(|(_, bd)| d > bd) {
                best = Some((v, d));
            }
        }
        best
    }

    /// Greedy maximal matching bound: any cover pays at least the cheaper
    /// endpoint of each matching edge, and at least one vertex per edge.
    fn lower_bound(&self) -> (Weight, usize) {
        let mut used: BTreeSet<Vertex> = BTreeSet::new();
        let mut wsum = Weight::zero();
        let mut count = 0usize;
        for (&u, nbrs) in &self.adj {
            if used.contains(&u) {
                continue;
            }
            for &v in nbrs {
                if v > u && !used.contains(&v) {
                    used.insert(u);
                    used.insert(v);
                    let wu = &self.weights[&u];
                    let wv = &self.weights[&v];
                    wsum += if wu <= wv { wu } else { wv };
                    count += 1;
                    break;
                }
            }
        }
        (wsum, count)
    }

    /// Exhausts the safe reductions, returning the forced partial cover.
    fn reduce(&mut self, cover: &mut BTreeSet<Vertex>, weight: &mut Weight) {
        let mut changed = true;
        while changed {
            changed = false;
            let vertices: Vec<Vertex> = self.adj.keys().copied().collect();
            for v in vertices {
                let Some(nbrs) = self.adj.get(&v) else { continue };
                match nbrs.len() {
                    0 => {
                        self.drop_isolated(v);
                        changed = true;
                    }
                    1 => {
                        let u = *nbrs.iter().next().expect("degree 1");
                        // Cover u instead of v whenever that cannot cost more.
                        if self.weights[&u] <= self.weights[&v] {
                            *weight += &self.weights[&u];
                            cover.insert(u);
                            self.take(u);
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if changed {
                continue;
            }
            // Dominance: with u adjacent to v and N[u] within N[v], some
            // optimum takes v, provided v is no heavier than u.
            let vertices: Vec<Vertex> = self.adj.keys().copied().collect();
            'outer: for &v in &vertices {
                let Some(vn) = self.adj.get(&v) else { continue };
                for &u in vn.clone().iter() {
                    let un = &self.adj[&u];
                    let dominated = un
                        .iter()
                        .all(|&x| x == v || self.adj[&v].contains(&x));
                    if dominated && self.weights[&v] <= self.weights[&u] {
                        *weight += &self.weights[&v];
                        cover.insert(v);
                        self.take(v);
                        changed = true;
                        continue 'outer;
                    }
                }
            }
        }
    }

    /// Smallest (weight, cardinality) with one deterministic witness. A
    /// caller-supplied `bound` prunes anything strictly worse; None comes
    /// back when nothing at least as good as the bound exists.
    fn solve(self, bound: Option<(&Weight, &usize)>) -> Option<(Weight, usize, BTreeSet<Vertex>)> {
        let mut best: Option<(Weight, usize, BTreeSet<Vertex>)> = None;
        let mut work = self;
        let mut base_cover = BTreeSet::new();
        let mut base_weight = Weight::zero();
        work.reduce(&mut base_cover, &mut base_weight);
        work.branch(base_weight, base_cover, &mut best, bound);
        best
    }

    fn branch(
        self,
        weight: Weight,
        cover: BTreeSet<Vertex>,
        best: &mut Option<(Weight, usize, BTreeSet<Vertex>)>,
        bound: Option<(&Weight, &usize)>,
    ) {
        let (lb_w, lb_c) = self.lower_bound();
        let pred_w = &weight + &lb_w;
        let pred_c = cover.len() + lb_c;
        if let Some((bw, bc, _)) = best.as_ref() {
            if pred_w > *bw || (pred_w == *bw && pred_c >= *bc) {
                return;
            }
        }
        if let Some((bw, bc)) = bound {
            // A caller-supplied bound means only completions at least as good
            // matter; anything strictly worse can be pruned outright.
            if pred_w > *bw || (pred_w == *bw && pred_c > *bc) {
                return;
            }
        }
        let Some((v, degree)) = self.max_degree_vertex() else {
            let candidate = (weight, cover.len(), cover);
            let better = match best.as_ref() {
                None => true,
                Some((bw, bc, _)) => candidate.0 < *bw || (candidate.0 == *bw && candidate.1 < *bc),
            };
            if better {
                *best = Some(candidate);
            }
            return;
        };
        debug_assert!(degree >= 2, "reductions remove low-degree vertices");

        // Branch 1: v in the cover.
        {
            let mut inst = self.clone();
            let mut w2 = weight.clone();
            let mut c2 = cover.clone();
            w2 += &inst.weights[&v];
            c2.insert(v);
            inst.take(v);
            inst.reduce(&mut c2, &mut w2);
            inst.branch(w2, c2, best, bound);
        }
        // Branch 2: v out, so all its neighbours are in.
        {
            let mut inst = self;
            let mut w2 = weight;
            let mut c2 = cover;
            for u in inst.adj[&v].clone() {
                w2 += &inst.weights[&u];
                c2.insert(u);
                inst.take(u);
            }
            inst.drop_isolated(v);
            inst.reduce(&mut c2, &mut w2);
            inst.branch(w2, c2, best, bound);
        }
    }
}
