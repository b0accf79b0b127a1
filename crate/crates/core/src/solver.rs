//! The top-level connected vertex cover solver for (sP1+P5)-free graphs.
//!
//! One solve guesses, for a clique-or-small connected dominating set D, the
//! subset D* left out of the cover. The empty guess reduces to a plain
//! vertex cover on G - D. A non-empty guess forces N(D*) into the cover:
//! after reconnecting D \ D* with short path systems where needed, all
//! forced edges are contracted, the neighbours of D* form an independent
//! set J around the contracted vertex y, removable J-vertices are pruned,
//! and the rest is a Connected Vertex Cover Completion instance. The best
//! lifted answer over all guesses is the optimum.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use thiserror::Error;

use crate::completion::{solve_completion, validate_triple, CompletionError};
use crate::detection::{find_induced_linear, PatternHit};
use crate::domination::{connected_dominating_set, CertificateKind, DominationError};
use crate::graph::{
    contract_edge, weight_from_int, ContractionTrace, Graph, GraphError, Vertex, Weight, WeightMap,
};
use crate::vc::min_vertex_cover_value;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("input graph contains an induced {s}P1+P5; freeness verification failed")]
    NotFree { s: usize, witness: Box<PatternHit> },
    #[error("no connected vertex cover exists: two components contain edges")]
    Infeasible,
    #[error("weighted mode requires a weight map")]
    MissingWeights,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

/// Verification flags re-checked against the original input graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verified {
    pub is_cover: bool,
    pub is_connected: bool,
}

/// A connected vertex cover in original labels, with size, total weight, and
/// the re-verified certificate flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    pub cover: BTreeSet<Vertex>,
    pub size: usize,
    pub weight: Weight,
    pub verified: Verified,
}

/// Solver settings. Determinism is unconditional; `s` is an input, never
/// silently auto-detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub s: usize,
    pub weighted: bool,
    pub verify_freeness: bool,
}

/// Candidate ordering: weight, then size, then the lexicographically least
/// cover. Unweighted candidates carry their size as weight, so the same key
/// serves both modes.
pub(crate) fn improves(candidate: &CoverSolution, incumbent: &CoverSolution) -> bool {
    (&candidate.weight, candidate.size, &candidate.cover)
        < (&incumbent.weight, incumbent.size, &incumbent.cover)
}

/// Removes from J every vertex other than y that has two adjacent
/// neighbours outside J; covers through J of the original graph correspond
/// to covers through the reduced J of the reduced graph.
pub fn prune_adjacent_neighbour_j(
    g: &Graph,
    j: &BTreeSet<Vertex>,
    y: Vertex,
) -> Result<(Graph, BTreeSet<Vertex>), SolveError> {
    if !j.contains(&y) {
        return Err(SolveError::Precondition(format!("y = {y} must lie in J")));
    }
    if !g.is_independent(j) {
        return Err(SolveError::Precondition("J must be independent".into()));
    }
    let y_nbrs = g.neighbours_of(y)?;
    if g.vertices().any(|v| !j.contains(&v) && !y_nbrs.contains(&v)) {
        return Err(SolveError::Precondition(
            "y must be adjacent to every vertex outside J".into(),
        ));
    }
    let mut removed = BTreeSet::new();
    for &x in j {
        if x == y {
            continue;
        }
        let nbrs: Vec<Vertex> = g.neighbours_of(x)?.iter().copied().collect();
        let has_adjacent_pair = nbrs
            .iter()
            .enumerate()
            .any(|(i, &a)| nbrs[i + 1..].iter().any(|&b| g.has_edge(a, b)));
        if has_adjacent_pair {
            removed.insert(x);
        }
    }
    Ok((g.remove_set(&removed)?, removed))
}

/// Minimum-size (or minimum-weight) connected vertex cover.
///
/// Disconnected inputs: with no edges anywhere the cover is empty; with
/// exactly one component carrying edges that component is solved; with two
/// or more edge-carrying components no connected cover exists.
pub fn solve_cvc(
    g: &Graph,
    cfg: &SolverConfig,
    w: Option<&WeightMap>,
) -> Result<CoverSolution, SolveError> {
    let weights = if cfg.weighted {
        let wm = w.ok_or(SolveError::MissingWeights)?;
        wm.covers(g)?;
        Some(wm)
    } else {
        None
    };
    if cfg.verify_freeness {
        if let Some(witness) = find_induced_linear(g, cfg.s) {
            return Err(SolveError::NotFree {
                s: cfg.s,
                witness: Box::new(witness),
            });
        }
    }

    let edgeful: Vec<BTreeSet<Vertex>> = g
        .components()
        .into_iter()
        .filter(|c| g.induced(c).expect("component").edge_count() > 0)
        .collect();
    match edgeful.len() {
        0 => {
            return Ok(CoverSolution {
                cover: BTreeSet::new(),
                size: 0,
                weight: Weight::zero(),
                verified: Verified {
                    is_cover: true,
                    is_connected: true,
                },
            })
        }
        1 => {}
        _ => return Err(SolveError::Infeasible),
    }
    let component = &edgeful[0];
    let host = g.induced(component)?;
    let host_weights = weights.map(|wm| restrict_weights(wm, component));

    let best = solve_connected(&host, cfg.s, host_weights.as_ref())?;

    // Re-verify against the original input before returning.
    let verified = Verified {
        is_cover: g.is_vertex_cover(&best.cover),
        is_connected: g.is_connected_set(&best.cover)?,
    };
    if !verified.is_cover || !verified.is_connected {
        return Err(SolveError::Internal(
            "candidate failed final re-verification".into(),
        ));
    }
    Ok(CoverSolution { verified, ..best })
}

fn restrict_weights(wm: &WeightMap, keep: &BTreeSet<Vertex>) -> WeightMap {
    let map: BTreeMap<Vertex, Weight> = wm
        .iter()
        .filter(|(v, _)| keep.contains(v))
        .map(|(v, wt)| (v, wt.clone()))
        .collect();
    WeightMap::new(map).expect("weights stay non-negative")
}

fn cover_weight(
    cover: &BTreeSet<Vertex>,
    weights: Option<&WeightMap>,
) -> Result<Weight, GraphError> {
    match weights {
        Some(wm) => wm.total(cover),
        None => Ok(weight_from_int(cover.len() as i64)),
    }
}

fn solve_connected(
    g: &Graph,
    s: usize,
    weights: Option<&WeightMap>,
) -> Result<CoverSolution, SolveError> {
    let cert = connected_dominating_set(g, s)?;
    let dom: Vec<Vertex> = cert.vertices.iter().copied().collect();

    let mut guesses: Vec<BTreeSet<Vertex>> = if cert.kind == CertificateKind::Clique {
        std::iter::once(BTreeSet::new())
            .chain(dom.iter().map(|&v| BTreeSet::from([v])))
            .collect()
    } else {
        if dom.len() > 22 {
            return Err(SolveError::Internal(format!(
                "dominating set of {} vertices is beyond the subset-guessing budget",
                dom.len()
            )));
        }
        let mut all = Vec::with_capacity(1 << dom.len());
        for mask in 0u64..(1u64 << dom.len()) {
            all.push(
                (0..dom.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| dom[i])
                    .collect(),
            );
        }
        all
    };
    guesses.sort();

    let mut best: Option<CoverSolution> = None;
    for excluded in &guesses {
        for candidate in candidates_for_guess(g, s, weights, &cert.vertices, excluded)? {
            match &best {
                Some(cur) if !improves(&candidate, cur) => {}
                _ => best = Some(candidate),
            }
        }
    }
    best.ok_or_else(|| SolveError::Internal("no guess produced a candidate".into()))
}

/// All candidate covers for one guess of the excluded subset.
fn candidates_for_guess(
    g: &Graph,
    s: usize,
    weights: Option<&WeightMap>,
    dom: &BTreeSet<Vertex>,
    excluded: &BTreeSet<Vertex>,
) -> Result<Vec<CoverSolution>, SolveError> {
    let mut out = Vec::new();

    if excluded.is_empty() {
        // Everything in D stays: a minimum cover of G - D plus D is already
        // connected because D dominates.
        let rest = g.remove_set(dom)?;
        let rest_weights = weights.map(|wm| restrict_weights(wm, &rest.vertex_set()));
        let vc = min_vertex_cover_value(&rest, rest_weights.as_ref())?;
        let mut cover = dom.clone();
        cover.extend(vc.cover);
        out.push(make_candidate(g, cover, weights)?);
        return Ok(out);
    }

    if !g.is_independent(excluded) {
        return Ok(out);
    }
    let without_excluded = g.remove_set(excluded)?;
    if !without_excluded.is_connected() {
        return Ok(out);
    }

    let keep: BTreeSet<Vertex> = dom.difference(excluded).copied().collect();
    if keep.is_empty() {
        // The cover must avoid all of D, which forces exactly the rest.
        let cover = without_excluded.vertex_set();
        out.push(make_candidate(g, cover, weights)?);
        return Ok(out);
    }

    for augmented_keep in reconnect_variants(g, s, excluded, &keep)? {
        let candidate = solve_guess_via_completion(g, s, weights, excluded, &augmented_keep)?;
        if let Some(c) = candidate {
            out.push(c);
        }
    }
    Ok(out)
}

/// All ways to extend D \ D* into a connected set using path systems of at
/// most 2s+4 vertices per stray component, avoiding D*. Deduplicated by the
/// resulting vertex set; empty when some stray cannot be reconnected (then
/// no cover for this guess exists).
fn reconnect_variants(
    g: &Graph,
    s: usize,
    excluded: &BTreeSet<Vertex>,
    keep: &BTreeSet<Vertex>,
) -> Result<Vec<BTreeSet<Vertex>>, SolveError> {
    if g.is_connected_set(keep)? {
        return Ok(vec![keep.clone()]);
    }
    let arena = g.remove_set(excluded)?;
    let comps = g.induced(keep)?.components();
    let anchor = *keep.iter().next().expect("keep is nonempty");
    let max_vertices = 2 * s + 4;

    let mut unions: BTreeSet<BTreeSet<Vertex>> = BTreeSet::from([BTreeSet::new()]);
    for comp in &comps {
        if comp.contains(&anchor) {
            continue;
        }
        let start = *comp.iter().next().expect("component is nonempty");
        let paths = bounded_simple_paths(&arena, start, anchor, max_vertices);
        if paths.is_empty() {
            return Ok(Vec::new());
        }
        let mut next: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
        for u in &unions {
            for p in &paths {
                let mut merged = u.clone();
                merged.extend(p.iter().copied());
                next.insert(merged);
            }
        }
        unions = next;
    }

    let mut variants: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
    for u in unions {
        let mut augmented = keep.clone();
        augmented.extend(u);
        debug_assert!(g.is_connected_set(&augmented)?);
        variants.insert(augmented);
    }
    Ok(variants.into_iter().collect())
}

/// Vertex sets of all simple paths from `from` to `to` on at most
/// `max_vertices` vertices.
fn bounded_simple_paths(
    g: &Graph,
    from: Vertex,
    to: Vertex,
    max_vertices: usize,
) -> Vec<BTreeSet<Vertex>> {
    let mut out: BTreeSet<BTreeSet<Vertex>> = BTreeSet::new();
    let mut stack: Vec<Vertex> = vec![from];
    let mut seen: BTreeSet<Vertex> = BTreeSet::from([from]);
    fn dfs(
        g: &Graph,
        to: Vertex,
        max_vertices: usize,
        stack: &mut Vec<Vertex>,
        seen: &mut BTreeSet<Vertex>,
        out: &mut BTreeSet<BTreeSet<Vertex>>,
    ) {
        let cur = *stack.last().expect("stack nonempty");
        if cur == to {
            out.insert(seen.clone());
            return;
        }
        if stack.len() == max_vertices {
            return;
        }
        for &nb in g.neighbours_of(cur).expect("vertex is live") {
            if seen.contains(&nb) {
                continue;
            }
            stack.push(nb);
            seen.insert(nb);
            dfs(g, to, max_vertices, stack, seen, out);
            stack.pop();
            seen.remove(&nb);
        }
    }
    if g.has_vertex(from) && g.has_vertex(to) {
        dfs(g, to, max_vertices, &mut stack, &mut seen, &mut out);
    }
    out.into_iter().collect()
}

/// Solves one guess: contract everything forced, prune, run completion, and
/// lift back. None when the guess is structurally infeasible.
fn solve_guess_via_completion(
    g: &Graph,
    s: usize,
    weights: Option<&WeightMap>,
    excluded: &BTreeSet<Vertex>,
    keep: &BTreeSet<Vertex>,
) -> Result<Option<CoverSolution>, SolveError> {
    // Contract all edges inside keep ∪ N(D*): all of these vertices are
    // forced into the cover.
    let forced: BTreeSet<Vertex> = keep
        .union(&g.neighbourhood(excluded)?)
        .copied()
        .collect();
    debug_assert!(forced.is_disjoint(excluded));

    let mut live = g.clone();
    let mut trace = ContractionTrace::identity(g);
    let mut forced_live = forced.clone();
    while let Some((u, v)) = first_internal_edge(&live, &forced_live) {
        let (next, next_trace, merged) = contract_edge(&live, u, v, &trace)?;
        live = next;
        trace = next_trace;
        forced_live.remove(&u);
        forced_live.remove(&v);
        forced_live.insert(merged);
    }

    // The kept dominating part is now a single vertex: the y of the triple.
    let y_candidates: BTreeSet<Vertex> = forced_live
        .iter()
        .copied()
        .filter(|&v| {
            trace
                .class_of(v)
                .is_some_and(|c| c.intersection(keep).next().is_some())
        })
        .collect();
    if y_candidates.len() != 1 {
        return Err(SolveError::Internal(
            "connected kept set did not contract to a single vertex".into(),
        ));
    }
    let y = *y_candidates.iter().next().expect("exactly one");

    let j_star = live.neighbourhood(excluded)?;
    if !j_star.contains(&y) {
        return Err(SolveError::Internal(
            "contracted dominator is not adjacent to the excluded set".into(),
        ));
    }
    let arena = live.remove_set(excluded)?;
    let (pruned, removed) = prune_adjacent_neighbour_j(&arena, &j_star, y)?;
    let j: BTreeSet<Vertex> = j_star.difference(&removed).copied().collect();

    let triple_weights = weights.map(|wm| {
        let map: BTreeMap<Vertex, Weight> = pruned
            .vertices()
            .map(|v| {
                let class = trace.class_of(v).expect("live vertex");
                (v, wm.total(class).expect("weights cover the graph"))
            })
            .collect();
        WeightMap::new(map).expect("sums of non-negative weights")
    });
    let triple = validate_triple(&pruned, &j, y, triple_weights.as_ref())?;
    let sol = match solve_completion(&triple, s) {
        Ok(sol) => sol,
        Err(CompletionError::NoCandidates) => return Ok(None),
        Err(e) => return Err(e.into()),
    };

    // Completion output is in `pruned` labels, which are live labels of the
    // contracted graph; add back the pruned J-vertices and lift.
    let mut live_cover = sol.cover;
    live_cover.extend(removed.iter().copied());
    let cover = trace.lift(&live_cover);
    Ok(Some(make_candidate(g, cover, weights)?))
}

/// Least edge with both endpoints in `inside`.
fn first_internal_edge(g: &Graph, inside: &BTreeSet<Vertex>) -> Option<(Vertex, Vertex)> {
    for &u in inside {
        for &v in g.neighbours_of(u).expect("live vertex").range((u + 1)..) {
            if inside.contains(&v) {
                return Some((u, v));
            }
        }
    }
    None
}

fn make_candidate(
    g: &Graph,
    cover: BTreeSet<Vertex>,
    weights: Option<&WeightMap>,
) -> Result<CoverSolution, SolveError> {
    let verified = Verified {
        is_cover: g.is_vertex_cover(&cover),
        is_connected: g.is_connected_set(&cover)?,
    };
    if !verified.is_cover || !verified.is_connected {
        return Err(SolveError::Internal(
            "guess produced a set that is not a connected cover".into(),
        ));
    }
    Ok(CoverSolution {
        size: cover.len(),
        weight: cover_weight(&cover, weights)?,
        cover,
        verified,
    })
}
