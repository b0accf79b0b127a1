//! Solving Connected Vertex Cover Completion on a cover-complete triple.
//!
//! The pipeline: reduce to a free triple with the two rules, solve the free
//! triple (type-1 search over pseudo structures plus either a bounded
//! minimal-connector sweep or the greedy clique branching), then lift back
//! through the reduction records, comparing against the smallest type-1
//! cover of each intermediate state.
//!
//! All candidate covers are expressed in the labels of the graph the root
//! triple was validated on; contraction traces make lifting a lookup, and
//! every candidate is re-verified as a connected cover of that base graph.

use std::collections::BTreeSet;

use crate::graph::{Vertex, WeightMap};
use crate::solver::{improves, CoverSolution, Verified};
use crate::vc::min_vertex_cover_value;

use super::rules::{reduce_to_free, ReductionOutcome, ReductionRecord};
use super::triple::{CompletionError, CoverCompleteTriple};

fn keep_best(best: &mut Option<CoverSolution>, candidate: CoverSolution) {
    match best {
        Some(cur) if !improves(&candidate, cur) => {}
        _ => *best = Some(candidate),
    }
}

/// Builds the base-label solution for a live cover of `t`, re-verifying the
/// lifted set against the base graph.
fn finish(t: &CoverCompleteTriple, live_cover: &BTreeSet<Vertex>) -> Result<CoverSolution, CompletionError> {
    let weight = t.live_weight_of(live_cover);
    let cover = t.trace().lift(live_cover);
    let base = t.base_graph();
    let verified = Verified {
        is_cover: base.is_vertex_cover(&cover),
        is_connected: base.is_connected_set(&cover)?,
    };
    if !verified.is_cover || !verified.is_connected {
        return Err(CompletionError::Internal(
            "lifted candidate is not a connected cover of the base graph".into(),
        ));
    }
    Ok(CoverSolution {
        size: cover.len(),
        weight,
        cover,
        verified,
    })
}

/// Smallest connected vertex cover through y when J = {y}: by (B), y
/// dominates the graph, so {y} plus a minimum cover of G - y is connected.
pub fn solve_single_j(t: &CoverCompleteTriple) -> Result<CoverSolution, CompletionError> {
    if t.j_set().len() != 1 {
        return Err(CompletionError::Internal(format!(
            "solve_single_j expects J = {{y}}, got |J| = {}",
            t.j_set().len()
        )));
    }
    let y = t.y();
    let rest = t.graph().remove_vertex(y)?;
    let weights = t.weights().map(|wm| {
        let map = wm
            .iter()
            .filter(|(v, _)| *v != y)
            .map(|(v, w)| (v, w.clone()))
            .collect();
        WeightMap::new(map).expect("weights stay non-negative")
    });
    let vc = min_vertex_cover_value(&rest, weights.as_ref())?;
    let mut live = vc.cover;
    live.insert(y);
    finish(t, &live)
}

/// Set-contracts via every vertex of `targets` in increasing label order,
/// then solves the resulting single-J instance. `targets` must make
/// J ∪ targets connected, which guarantees J collapses to one vertex.
fn contract_chain_and_solve(
    t: &CoverCompleteTriple,
    targets: &BTreeSet<Vertex>,
) -> Result<CoverSolution, CompletionError> {
    let mut cur = t.clone();
    for &w in targets {
        cur = cur.set_contract(w)?;
    }
    if cur.j_set().len() != 1 {
        return Err(CompletionError::Internal(
            "connector did not collapse J to a single vertex".into(),
        ));
    }
    solve_single_j(&cur)
}

fn is_connector(t: &CoverCompleteTriple, l_star: &BTreeSet<Vertex>) -> bool {
    let mut set = t.j_set().clone();
    set.extend(l_star.iter().copied());
    t.graph()
        .is_connected_set(&set)
        .expect("vertices live in the graph")
}

/// Minimal means no proper subset is a connector. Adding any L-vertex to a
/// connector keeps it one (every L-vertex is adjacent to y), so checking all
/// single-vertex removals suffices.
fn is_minimal_connector(t: &CoverCompleteTriple, l_star: &BTreeSet<Vertex>) -> bool {
    if !is_connector(t, l_star) {
        return false;
    }
    for &w in l_star {
        let mut smaller = l_star.clone();
        smaller.remove(&w);
        if is_connector(t, &smaller) {
            return false;
        }
    }
    true
}

/// All subsets of `pool` with size in lo..=hi, lexicographic order.
fn subsets_sized(pool: &[Vertex], lo: usize, hi: usize) -> Vec<BTreeSet<Vertex>> {
    let mut out = Vec::new();
    let mut cur: Vec<Vertex> = Vec::new();
    fn rec(
        pool: &[Vertex],
        start: usize,
        lo: usize,
        hi: usize,
        cur: &mut Vec<Vertex>,
        out: &mut Vec<BTreeSet<Vertex>>,
    ) {
        if cur.len() >= lo {
            out.push(cur.iter().copied().collect());
        }
        if cur.len() == hi {
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, i + 1, lo, hi, cur, out);
            cur.pop();
        }
    }
    rec(pool, 0, lo, hi, &mut cur, &mut out);
    out
}

/// Smallest connected vertex cover containing J plus both vertices of some
/// pseudo-dominating pair or all of some pseudo-dominating triple. For a
/// pair the connector search extends it by up to s-1 further L-vertices
/// (total size at most s+1); for a triple the budget is s+2. None when the
/// triple has no pseudo structures, or no candidate connector is connected.
pub fn smallest_type1_cover(
    t: &CoverCompleteTriple,
    s: usize,
) -> Result<Option<CoverSolution>, CompletionError> {
    let mut best: Option<CoverSolution> = None;
    if s == 0 {
        // Budgets s+1 and s+2 cannot fit the structures themselves; an
        // (0P1+P5)-free graph has none anyway.
        return Ok(None);
    }
    let l: Vec<Vertex> = t.l_set().into_iter().collect();
    let extras_max = s - 1;

    for pair in t.find_pseudo_pairs() {
        let pool: Vec<Vertex> = l
            .iter()
            .copied()
            .filter(|&w| w != pair.w1 && w != pair.w2)
            .collect();
        for extra in subsets_sized(&pool, 0, extras_max) {
            let mut l_star = extra;
            l_star.insert(pair.w1);
            l_star.insert(pair.w2);
            if !is_connector(t, &l_star) {
                continue;
            }
            keep_best(&mut best, contract_chain_and_solve(t, &l_star)?);
        }
    }
    for triple in t.find_pseudo_triples() {
        let pool: Vec<Vertex> = l
            .iter()
            .copied()
            .filter(|&w| w != triple.w1 && w != triple.w2 && w != triple.w3)
            .collect();
        for extra in subsets_sized(&pool, 0, extras_max) {
            let mut l_star = extra;
            l_star.insert(triple.w1);
            l_star.insert(triple.w2);
            l_star.insert(triple.w3);
            if !is_connector(t, &l_star) {
                continue;
            }
            keep_best(&mut best, contract_chain_and_solve(t, &l_star)?);
        }
    }
    Ok(best)
}

/// Greedy clique K in L with N(K) ∩ J = J, for a free triple without
/// pseudo-dominating pairs: repeatedly add the vertex with inclusion-maximal
/// neighbourhood among the still-uncovered part of J. A pick that touches a
/// covered J-vertex or misses an edge to K means the preconditions were
/// violated.
pub fn greedy_clique_in_l(t: &CoverCompleteTriple) -> Result<BTreeSet<Vertex>, CompletionError> {
    let l: Vec<Vertex> = t.l_set().into_iter().collect();
    let j = t.j_set();
    let g = t.graph();
    let j_nbhd = |w: Vertex, targets: &BTreeSet<Vertex>| -> BTreeSet<Vertex> {
        g.neighbours_of(w)
            .expect("L lives in the graph")
            .intersection(targets)
            .copied()
            .collect()
    };
    // Inclusion-maximal neighbourhood, least label among the maximal ones.
    let pick = |targets: &BTreeSet<Vertex>, used: &BTreeSet<Vertex>| -> Option<Vertex> {
        let cands: Vec<(Vertex, BTreeSet<Vertex>)> = l
            .iter()
            .copied()
            .filter(|w| !used.contains(w))
            .map(|w| (w, j_nbhd(w, targets)))
            .filter(|(_, nb)| !nb.is_empty())
            .collect();
        cands
            .iter()
            .find(|(_, nb)| {
                !cands
                    .iter()
                    .any(|(_, other)| nb.is_subset(other) && nb != other)
            })
            .map(|(w, _)| *w)
    };

    let mut k: BTreeSet<Vertex> = BTreeSet::new();
    let mut covered: BTreeSet<Vertex> = BTreeSet::new();
    loop {
        let targets: BTreeSet<Vertex> = j.difference(&covered).copied().collect();
        if targets.is_empty() {
            break;
        }
        let Some(w) = pick(&targets, &k) else {
            return Err(CompletionError::NoCandidates);
        };
        if !k.is_empty() {
            let touches_covered = covered
                .iter()
                .any(|&x| x != t.y() && g.has_edge(w, x));
            if touches_covered || k.iter().any(|&u| !g.has_edge(u, w)) {
                return Err(CompletionError::GreedyStuck(w));
            }
        }
        covered.extend(j.iter().copied().filter(|&x| g.has_edge(w, x)));
        k.insert(w);
    }
    debug_assert!(g.is_clique(&k));
    Ok(k)
}

/// Smallest connected vertex cover through J of a free triple.
fn solve_free(t: &CoverCompleteTriple, s: usize) -> Result<CoverSolution, CompletionError> {
    if t.j_set().len() == 1 {
        return solve_single_j(t);
    }
    let mut best: Option<CoverSolution> = None;
    if let Some(type1) = smallest_type1_cover(t, s)? {
        keep_best(&mut best, type1);
    }

    let l: Vec<Vertex> = t.l_set().into_iter().collect();
    if !t.find_pseudo_pairs().is_empty() {
        // With a pseudo-dominating pair present, every minimal connector of
        // a cover avoiding whole pseudo structures is a clique on at most
        // five vertices; sweeping all minimal connectors of that size is
        // sound either way, since each yields a genuine cover through J.
        for l_star in subsets_sized(&l, 1, 5) {
            if !is_minimal_connector(t, &l_star) {
                continue;
            }
            keep_best(&mut best, contract_chain_and_solve(t, &l_star)?);
        }
    } else {
        let k = greedy_clique_in_l(t)?;
        // Every cover keeps all of K or all but one vertex of it.
        keep_best(&mut best, contract_chain_and_solve(t, &k)?);
        for &w_i in &k {
            if !t.stays_connected_without(w_i)? {
                // No cover through J can avoid w_i.
                continue;
            }
            let deleted = t.delete_outside_vertex(w_i)?;
            let forced: Vec<Vertex> = t
                .graph()
                .neighbours_of(w_i)?
                .iter()
                .copied()
                .filter(|u| !t.j_set().contains(u))
                .collect();
            let mut cur = deleted;
            for &u in &forced {
                cur = cur.set_contract(u)?;
            }
            if cur.j_set().len() == 1 {
                keep_best(&mut best, solve_single_j(&cur)?);
                continue;
            }
            debug_assert!(cur.find_pseudo_pairs().is_empty());
            // The residual L is K4-free, so minimal connectors are cliques
            // on at most three vertices.
            let l2: Vec<Vertex> = cur.l_set().into_iter().collect();
            for l_star in subsets_sized(&l2, 1, 3) {
                if !is_minimal_connector(&cur, &l_star) {
                    continue;
                }
                debug_assert!(cur.graph().is_clique(&l_star));
                keep_best(&mut best, contract_chain_and_solve(&cur, &l_star)?);
            }
        }
    }
    best.ok_or(CompletionError::NoCandidates)
}

/// Lifts a solved reduced instance back over the recorded rule applications.
///
/// A record's forced vertices are already part of the lifted cover (the
/// trace carries them), so per record the only work is comparing against the
/// smallest type-1 cover of the pre-state; the smaller of the two is a
/// smallest cover of that state. `sol` is None past a dead end, where no
/// type-2 cover exists and the type-1 side alone decides.
pub fn lift_through_records(
    sol: Option<CoverSolution>,
    records: &[ReductionRecord],
    s: usize,
) -> Result<Option<CoverSolution>, CompletionError> {
    let mut cur = sol;
    for record in records.iter().rev() {
        let s_star = smallest_type1_cover(&record.pre, s)?;
        cur = match (cur, s_star) {
            (Some(a), Some(b)) => Some(if improves(&b, &a) { b } else { a }),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        };
    }
    Ok(cur)
}

/// Smallest (or minimum-weight) connected vertex cover of the triple's graph
/// containing J, in the labels of the graph the root triple was validated
/// on.
pub fn solve_completion(
    t: &CoverCompleteTriple,
    s: usize,
) -> Result<CoverSolution, CompletionError> {
    if t.j_set().len() == 1 {
        return solve_single_j(t);
    }
    let reduction = reduce_to_free(t)?;
    let solved = match &reduction.outcome {
        ReductionOutcome::Free(tf) => Some(solve_free(tf, s)?),
        ReductionOutcome::NoTypeTwo => None,
    };
    let lifted = lift_through_records(solved, &reduction.records, s)?;
    let sol = lifted.ok_or(CompletionError::NoCandidates)?;
    let base_j = t.lifted_j();
    if !base_j.is_subset(&sol.cover) {
        return Err(CompletionError::Internal(
            "solution does not contain J".into(),
        ));
    }
    Ok(sol)
}

/// Reference enumeration for tests: smallest connected cover of `t.graph()`
/// containing J, by brute force over live vertex subsets, lifted to base
/// labels. Kept here (not in testkit) because it needs triple lifting.
#[cfg(test)]
pub(crate) fn brute_force_completion(t: &CoverCompleteTriple) -> Option<CoverSolution> {
    let g = t.graph();
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    assert!(n <= 20, "test helper guard");
    let mut best: Option<CoverSolution> = None;
    for mask in 0u32..(1 << n) {
        let live: BTreeSet<Vertex> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| vs[i])
            .collect();
        if !t.j_set().is_subset(&live) {
            continue;
        }
        if !g.is_vertex_cover(&live) {
            continue;
        }
        if !g.is_connected_set(&live).expect("live subset") {
            continue;
        }
        let cand = finish(t, &live).expect("feasible live cover lifts cleanly");
        keep_best(&mut best, cand);
    }
    best
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::super::triple::validate_triple;
    use super::*;
    use crate::graph::{weight_from_int, weight_from_ratio, Graph};
    use crate::testkit::{brute_force_cvc, generate_triple, Rng};

    fn star_triple(leaves: u32) -> CoverCompleteTriple {
        let edges: Vec<(Vertex, Vertex)> = (1..=leaves).map(|v| (0, v)).collect();
        let g = Graph::from_edges(leaves + 1, &edges).unwrap();
        validate_triple(&g, &BTreeSet::from([0]), 0, None).unwrap()
    }

    #[test]
    fn single_j_star() {
        let sol = solve_single_j(&star_triple(4)).unwrap();
        assert_eq!(sol.cover, BTreeSet::from([0]));
        assert_eq!(sol.size, 1);
    }

    #[test]
    fn single_j_over_p3() {
        // y universal over the path a-b-c: optimum is {y, b}.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0]), 0, None).unwrap();
        let sol = solve_single_j(&t).unwrap();
        assert_eq!(sol.cover, BTreeSet::from([0, 2]));
    }

    #[test]
    fn single_j_k2() {
        let g = Graph::complete(2);
        let t = validate_triple(&g, &BTreeSet::from([0]), 0, None).unwrap();
        assert_eq!(solve_single_j(&t).unwrap().cover, BTreeSet::from([0]));
    }

    /// The minimal pseudo-pair configuration plus the witnesses.
    fn pair_triple() -> CoverCompleteTriple {
        let g = Graph::from_edges(5, &[(0, 3), (0, 4), (1, 3), (2, 4)]).unwrap();
        validate_triple(&g, &BTreeSet::from([0, 1, 2]), 0, None).unwrap()
    }

    #[test]
    fn type1_absent_without_pseudo_structures() {
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0, 1]), 0, None).unwrap();
        assert!(t.find_pseudo_pairs().is_empty());
        assert!(smallest_type1_cover(&t, 2).unwrap().is_none());
    }

    #[test]
    fn type1_matches_constrained_brute_force() {
        let t = pair_triple();
        // The instance is (1P1+P5)-free, so s = 1 budgets apply.
        assert!(crate::detection::is_free(t.graph(), 1));
        let found = smallest_type1_cover(&t, 1).unwrap().unwrap();
        let pair = t.find_pseudo_pairs()[0];
        let mut must = t.j_set().clone();
        must.insert(pair.w1);
        must.insert(pair.w2);
        let brute = brute_force_cvc(t.graph(), Some(&must), None)
            .unwrap()
            .unwrap();
        assert_eq!(found.size, brute.size);
        assert_eq!(found.cover, brute.cover);
    }

    #[test]
    fn type1_absent_when_budget_cannot_reach() {
        // With s = 0 the connector budget (s+1 = 1) cannot even contain a
        // pair, matching an independent sweep of budget-sized connectors.
        let t = pair_triple();
        assert!(smallest_type1_cover(&t, 0).unwrap().is_none());
    }

    #[test]
    fn greedy_clique_single_vertex() {
        // One L-vertex adjacent to all of J.
        let g = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0, 1, 2]), 0, None).unwrap();
        assert_eq!(greedy_clique_in_l(&t).unwrap(), BTreeSet::from([3]));
    }

    #[test]
    fn greedy_clique_complementary_neighbourhoods() {
        // w1 = 3 sees {y, 1}; w2 = 4 sees {y, 2}; the edge w1w2 keeps the
        // triple pair-free, and the greedy needs both.
        let g = Graph::from_edges(5, &[(0, 3), (0, 4), (1, 3), (2, 4), (3, 4)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0, 1, 2]), 0, None).unwrap();
        assert!(t.find_pseudo_pairs().is_empty());
        assert_eq!(greedy_clique_in_l(&t).unwrap(), BTreeSet::from([3, 4]));
    }

    #[test]
    fn greedy_gets_stuck_on_pseudo_pair() {
        let t = pair_triple();
        assert!(matches!(
            greedy_clique_in_l(&t),
            Err(CompletionError::GreedyStuck(_)) | Err(CompletionError::NoCandidates)
        ));
    }

    #[test]
    fn completion_equals_single_j_when_j_is_singleton() {
        let t = star_triple(3);
        assert_eq!(
            solve_completion(&t, 1).unwrap(),
            solve_single_j(&t).unwrap()
        );
    }

    #[test]
    fn completion_on_pair_instance() {
        let t = pair_triple();
        let sol = solve_completion(&t, 1).unwrap();
        let brute = brute_force_completion(&t).unwrap();
        assert_eq!(sol.size, brute.size);
        assert_eq!(sol.cover, brute.cover);
    }

    #[test]
    fn completion_matches_brute_force_on_random_triples() {
        let mut rng = Rng::new(4242);
        let mut solved = 0;
        for trial in 0..120 {
            let s = (trial % 3) as usize;
            let n_outside = 3 + (trial % 5) as u32;
            let j_size = 1 + (trial % 3) as u32;
            let Ok((g, j, y)) = generate_triple(
                n_outside,
                j_size,
                s.max(1),
                (1, 2),
                rng.next_u64(),
            ) else {
                continue;
            };
            let t = validate_triple(&g, &j, y, None).unwrap();
            let sol = solve_completion(&t, s.max(1)).unwrap();
            let brute = brute_force_completion(&t).unwrap();
            assert_eq!(sol.size, brute.size, "trial {trial}");
            solved += 1;
        }
        assert!(solved > 80, "only {solved} random triples were generated");
    }

    #[test]
    fn weighted_completion_matches_weighted_brute_force() {
        let mut rng = Rng::new(910);
        for trial in 0..40 {
            let Ok((g, j, y)) = generate_triple(5, 2, 1, (1, 2), rng.next_u64()) else {
                continue;
            };
            let weights = crate::testkit::random_weights(&g, &mut rng);
            let t = validate_triple(&g, &j, y, Some(&weights)).unwrap();
            let sol = solve_completion(&t, 1).unwrap();
            let brute = brute_force_completion(&t).unwrap();
            assert_eq!(sol.weight, brute.weight, "trial {trial}");
        }
    }

    #[test]
    fn lifting_through_an_empty_record_list_is_identity() {
        let t = star_triple(2);
        let sol = solve_single_j(&t).unwrap();
        let lifted = lift_through_records(Some(sol.clone()), &[], 1).unwrap();
        assert_eq!(lifted, Some(sol));
    }

    #[test]
    fn lifting_over_single_rule_records_matches_the_oracle() {
        // A Rule 1 application followed by the full solve-and-lift equals
        // brute force over covers through J on the pre-rule graph.
        let g = Graph::from_edges(
            7,
            &[
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 4),
                (2, 5),
                (3, 6),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap();
        let j = BTreeSet::from([0, 1, 2, 3]);
        let t = validate_triple(&g, &j, 0, None).unwrap();
        let s = crate::detection::minimal_free_s(&g);
        let sol = solve_completion(&t, s).unwrap();
        let brute = brute_force_cvc(&g, Some(&j), None).unwrap().unwrap();
        assert_eq!(sol.size, brute.size);

        // Same story for a Rule 2 application (with a forced non-L
        // neighbour of the deleted vertex).
        let mut edges = vec![
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
            (9, 4),
            (9, 5),
            (9, 6),
            (9, 7),
            (1, 4),
            (2, 5),
            (3, 6),
            (11, 7),
            (12, 8),
            (12, 9),
            (8, 10),
        ];
        for v in [4, 5, 6, 7, 8, 9, 10] {
            edges.push((0, v));
        }
        let g = Graph::from_edges(13, &edges).unwrap();
        let j = BTreeSet::from([0, 1, 2, 3, 11, 12]);
        let t = validate_triple(&g, &j, 0, None).unwrap();
        let s = crate::detection::minimal_free_s(&g);
        let sol = solve_completion(&t, s).unwrap();
        let brute = brute_force_cvc(&g, Some(&j), None).unwrap().unwrap();
        assert_eq!(sol.size, brute.size);
    }

    #[test]
    fn small_weighted_tie_prefers_smaller_cardinality() {
        // Fractional weights: a three-vertex cover of weight 2 must lose to
        // a two-vertex cover of weight 2.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let mut m = BTreeMap::new();
        m.insert(0, weight_from_int(1));
        m.insert(1, weight_from_int(1));
        m.insert(2, weight_from_ratio(1, 2));
        m.insert(3, weight_from_ratio(1, 2));
        let w = crate::graph::WeightMap::new(m).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0]), 0, Some(&w)).unwrap();
        let sol = solve_completion(&t, 0).unwrap();
        let brute = brute_force_completion(&t).unwrap();
        assert_eq!(sol.weight, brute.weight);
        assert_eq!(sol.size, brute.size);
    }

    #[test]
    fn set_contraction_cover_correspondence_small() {
        // Covers of G through J ∪ {w} correspond to covers of the
        // set-contracted graph through J': both sides are enumerated.
        let g = Graph::from_edges(4, &[(0, 1), (0, 3), (1, 2)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0, 2]), 0, None).unwrap();
        let contracted = t.set_contract(1).unwrap();
        let direct = {
            let must = BTreeSet::from([0, 1, 2]);
            brute_force_cvc(t.graph(), Some(&must), None)
                .unwrap()
                .unwrap()
        };
        let via_contraction = brute_force_completion(&contracted).unwrap();
        assert_eq!(direct.size, via_contraction.size);
        assert_eq!(direct.cover, via_contraction.cover);
    }
}
