//! The two safe reduction rules and their fixpoint.
//!
//! Rule 1 set-contracts via any common L-neighbour of a pseudo-dominating
//! pair. Rule 2 removes an L-vertex that misses a whole 4-clique of L: no
//! cover avoiding a whole pseudo structure can use it, so it is deleted and
//! every neighbour outside J is forced into the cover by set-contraction.
//! A triple on which neither rule fires is free: no pseudo-dominating pair
//! shares an L-neighbour and L induces no K4 plus an isolated vertex.

use crate::detection::find_clique;
use crate::graph::Vertex;

use super::triple::{CompletionError, CoverCompleteTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleKind {
    Rule1,
    Rule2,
}

/// Everything needed to lift a solution of the reduced triple back over one
/// rule application. Replaying the parameters on `pre` reproduces the
/// post-state.
#[derive(Debug, Clone)]
pub struct ReductionRecord {
    pub rule: RuleKind,
    pub pre: CoverCompleteTriple,
    /// Rule 2 only: the deleted L-vertex (a live label of `pre`).
    pub deleted_vertex: Option<Vertex>,
    /// Set-contraction targets, in application order (live labels of `pre`).
    pub contract_via: Vec<Vertex>,
}

impl ReductionRecord {
    /// Re-applies the recorded parameters to the stored pre-state. None
    /// means the deletion disconnected the graph (the dead branch).
    pub fn replay(&self) -> Result<Option<CoverCompleteTriple>, CompletionError> {
        let mut cur = self.pre.clone();
        if let Some(w5) = self.deleted_vertex {
            cur = cur.delete_outside_vertex(w5)?;
            if !cur.graph().is_connected() {
                return Ok(None);
            }
        }
        for &u in &self.contract_via {
            cur = cur.set_contract(u)?;
        }
        Ok(Some(cur))
    }
}

/// Outcome of one rule application.
#[derive(Debug, Clone)]
pub enum RuleApplication {
    Applied {
        next: CoverCompleteTriple,
        record: ReductionRecord,
    },
    /// The rule fired but deleting the vertex disconnects the graph; no
    /// cover avoiding it exists, so no type-2 cover exists at all below
    /// this point.
    NoTypeTwo { record: ReductionRecord },
}

/// First Rule 1 site in lexicographic order of (w1, w2, x), applied once.
pub fn apply_rule1(
    t: &CoverCompleteTriple,
) -> Result<Option<RuleApplication>, CompletionError> {
    let Some((_, _, x)) = rule1_site(t) else {
        return Ok(None);
    };
    let record = ReductionRecord {
        rule: RuleKind::Rule1,
        pre: t.clone(),
        deleted_vertex: None,
        contract_via: vec![x],
    };
    let next = t.set_contract(x)?;
    Ok(Some(RuleApplication::Applied { next, record }))
}

fn rule1_site(t: &CoverCompleteTriple) -> Option<(Vertex, Vertex, Vertex)> {
    let l = t.l_set();
    for pair in t.find_pseudo_pairs() {
        let common = l.iter().copied().find(|&x| {
            t.graph().has_edge(x, pair.w1) && t.graph().has_edge(x, pair.w2)
        });
        if let Some(x) = common {
            return Some((pair.w1, pair.w2, x));
        }
    }
    None
}

/// First Rule 2 site (least w5 in L missing a whole 4-clique of L), applied
/// once: w5 is deleted and every neighbour outside J is set-contracted, so
/// the lifted cover is forced to contain all of them.
pub fn apply_rule2(
    t: &CoverCompleteTriple,
) -> Result<Option<RuleApplication>, CompletionError> {
    let Some(w5) = rule2_site(t) else {
        return Ok(None);
    };
    let contract_via: Vec<Vertex> = t
        .graph()
        .neighbours_of(w5)?
        .iter()
        .copied()
        .filter(|u| !t.j_set().contains(u))
        .collect();
    let record = ReductionRecord {
        rule: RuleKind::Rule2,
        pre: t.clone(),
        deleted_vertex: Some(w5),
        contract_via: contract_via.clone(),
    };
    let deleted = t.delete_outside_vertex(w5)?;
    if !deleted.graph().is_connected() {
        return Ok(Some(RuleApplication::NoTypeTwo { record }));
    }
    let mut next = deleted;
    next.recheck()?;
    for &u in &contract_via {
        next = next.set_contract(u)?;
    }
    Ok(Some(RuleApplication::Applied { next, record }))
}

fn rule2_site(t: &CoverCompleteTriple) -> Option<Vertex> {
    let l = t.l_set();
    let gl = t.graph().induced(&l).expect("L lives in the graph");
    l.iter()
        .copied()
        .find(|&w5| find_clique(&gl, 4, Some(w5)).is_some())
}

/// Whether neither rule applies: no pseudo-dominating pair with a common
/// L-neighbour, and L induces no K4 + P1.
pub fn is_free_triple(t: &CoverCompleteTriple) -> bool {
    rule1_site(t).is_none() && rule2_site(t).is_none()
}

/// The fixpoint of the rules.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub records: Vec<ReductionRecord>,
    pub outcome: ReductionOutcome,
}

#[derive(Debug, Clone)]
pub enum ReductionOutcome {
    Free(CoverCompleteTriple),
    /// A Rule 2 deletion disconnected the graph: every cover through J is
    /// type 1 from the last recorded state downwards.
    NoTypeTwo,
}

/// Exhaustively applies Rule 1 and then Rule 2 (sites in lexicographic
/// order) until the triple is free. Each application shrinks the graph, so
/// at most n records accumulate.
pub fn reduce_to_free(t: &CoverCompleteTriple) -> Result<Reduction, CompletionError> {
    let mut records = Vec::new();
    let mut cur = t.clone();
    loop {
        let app = match apply_rule1(&cur)? {
            Some(app) => Some(app),
            None => apply_rule2(&cur)?,
        };
        match app {
            Some(RuleApplication::Applied { next, record }) => {
                records.push(record);
                cur = next;
            }
            Some(RuleApplication::NoTypeTwo { record }) => {
                records.push(record);
                return Ok(Reduction {
                    records,
                    outcome: ReductionOutcome::NoTypeTwo,
                });
            }
            None => {
                debug_assert!(is_free_triple(&cur));
                return Ok(Reduction {
                    records,
                    outcome: ReductionOutcome::Free(cur),
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::super::triple::validate_triple;
    use super::*;
    use crate::graph::Graph;

    /// Pseudo-pair (w1, w2) sharing the L-neighbour x: fires Rule 1.
    /// J = {0 (=y), 1, 2, 3}; L = {4 (w1), 5 (w2), 6 (x)}.
    fn rule1_instance() -> CoverCompleteTriple {
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
        validate_triple(&g, &BTreeSet::from([0, 1, 2, 3]), 0, None).unwrap()
    }

    /// K4 {4,5,6,7} inside L (witnessed by 1, 2, 3, 11), w5 = 8 not
    /// adjacent to it. The witness 12 of w5 keeps a second neighbour 9, so
    /// the deletion does not disconnect; 10 is an outside non-L neighbour
    /// of 8, so the rule must force it too. 9 is tied to the whole clique,
    /// which keeps later states free of fresh rule sites.
    fn rule2_instance() -> CoverCompleteTriple {
        let mut edges = vec![
            // K4 in L
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
            // 9 adjacent to the whole clique
            (9, 4),
            (9, 5),
            (9, 6),
            (9, 7),
            // witnesses x_i - w_i  (J = {0, 1, 2, 3, 11, 12})
            (1, 4),
            (2, 5),
            (3, 6),
            (11, 7),
            (12, 8),
            (12, 9),
            // w5 = 8 and its outside neighbour 10
            (8, 10),
        ];
        // y = 0 adjacent to everything outside J.
        for v in [4, 5, 6, 7, 8, 9, 10] {
            edges.push((0, v));
        }
        let g = Graph::from_edges(13, &edges).unwrap();
        validate_triple(&g, &BTreeSet::from([0, 1, 2, 3, 11, 12]), 0, None).unwrap()
    }

    #[test]
    fn free_triple_fires_nothing() {
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0, 1]), 0, None).unwrap();
        assert!(apply_rule1(&t).unwrap().is_none());
        assert!(apply_rule2(&t).unwrap().is_none());
        assert!(is_free_triple(&t));
        let red = reduce_to_free(&t).unwrap();
        assert!(red.records.is_empty());
        assert!(matches!(red.outcome, ReductionOutcome::Free(_)));
    }

    #[test]
    fn rule1_contracts_the_common_neighbour() {
        let t = rule1_instance();
        let app = apply_rule1(&t).unwrap().unwrap();
        let RuleApplication::Applied { next, record } = app else {
            panic!("rule 1 never dead-ends");
        };
        assert_eq!(record.contract_via, vec![6]);
        // J_6 = {0, 3}, so three vertices merge into one.
        assert_eq!(next.graph().vertex_count(), t.graph().vertex_count() - 2);
        next.recheck().unwrap();
        let y2 = next.y();
        assert_eq!(
            next.trace().class_of(y2).unwrap(),
            &BTreeSet::from([0, 3, 6])
        );
    }

    #[test]
    fn rule2_deletes_and_contracts_all_outside_neighbours() {
        let t = rule2_instance();
        assert!(apply_rule1(&t).unwrap().is_none(), "no shared L-neighbour");
        let app = apply_rule2(&t).unwrap().unwrap();
        let RuleApplication::Applied { next, record } = app else {
            panic!("this instance stays connected");
        };
        assert_eq!(record.deleted_vertex, Some(8));
        assert_eq!(record.contract_via, vec![10]);
        assert!(!next.graph().has_vertex(8));
        assert_eq!(next.deleted(), &BTreeSet::from([8]));
        next.recheck().unwrap();
        // The forced neighbour 10 is merged into the y class.
        assert!(next.trace().class_of(next.y()).unwrap().contains(&10));
    }

    #[test]
    fn rule2_dead_end_when_deletion_disconnects() {
        // x = 2's only neighbour is w5 = 3, which misses the K4 {4,5,6,7};
        // the clique is witnessed into L by 1, 8, 9, 10.
        let mut edges = vec![
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
            (1, 4),
            (8, 5),
            (9, 6),
            (10, 7),
            (2, 3),
        ];
        for v in 3..8 {
            edges.push((0, v));
        }
        let g = Graph::from_edges(11, &edges).unwrap();
        let t = validate_triple(&g, &BTreeSet::from([0, 1, 2, 8, 9, 10]), 0, None).unwrap();
        let app = apply_rule2(&t).unwrap().unwrap();
        assert!(matches!(app, RuleApplication::NoTypeTwo { .. }));
        let red = reduce_to_free(&t).unwrap();
        assert!(matches!(red.outcome, ReductionOutcome::NoTypeTwo));
    }

    #[test]
    fn replay_reproduces_the_post_state() {
        let t = rule1_instance();
        let RuleApplication::Applied { next, record } = apply_rule1(&t).unwrap().unwrap() else {
            panic!("applies");
        };
        let replayed = record.replay().unwrap().unwrap();
        assert_eq!(replayed.graph(), next.graph());
        assert_eq!(replayed.j_set(), next.j_set());
        assert_eq!(replayed.y(), next.y());

        let t = rule2_instance();
        let RuleApplication::Applied { next, record } = apply_rule2(&t).unwrap().unwrap() else {
            panic!("applies");
        };
        let replayed = record.replay().unwrap().unwrap();
        assert_eq!(replayed.graph(), next.graph());
        assert_eq!(replayed.j_set(), next.j_set());
    }

    #[test]
    fn reduction_reaches_a_free_fixpoint() {
        let t = rule2_instance();
        let red = reduce_to_free(&t).unwrap();
        match red.outcome {
            ReductionOutcome::Free(tf) => {
                assert!(is_free_triple(&tf));
                assert!(!red.records.is_empty());
            }
            ReductionOutcome::NoTypeTwo => panic!("instance stays connected"),
        }
    }

    #[test]
    fn chained_rules_terminate() {
        let t = rule1_instance();
        let red = reduce_to_free(&t).unwrap();
        assert!(red.records.len() <= t.graph().vertex_count());
        if let ReductionOutcome::Free(tf) = &red.outcome {
            assert!(is_free_triple(tf));
        }
    }

    #[test]
    fn reduction_can_need_both_rules() {
        // Two gadgets hanging off y: the shared-neighbour pair {4, 5, 6}
        // (Rule 1 territory) and the K4 {7,8,9,10} with the clique-missing
        // vertices of the other gadget (Rule 2 territory). 12 backs the K4,
        // 17 witnesses both 11 and 12.
        let mut edges = vec![
            // pair gadget
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 6),
            (5, 6),
            // K4 gadget with backup 12 and loose vertex 11
            (7, 8),
            (7, 9),
            (7, 10),
            (8, 9),
            (8, 10),
            (9, 10),
            (12, 7),
            (12, 8),
            (12, 9),
            (12, 10),
            (13, 7),
            (14, 8),
            (15, 9),
            (16, 10),
            (17, 11),
            (17, 12),
        ];
        for v in 4..=12 {
            edges.push((0, v));
        }
        let g = Graph::from_edges(18, &edges).unwrap();
        let j = BTreeSet::from([0, 1, 2, 3, 13, 14, 15, 16, 17]);
        let t = validate_triple(&g, &j, 0, None).unwrap();
        let red = reduce_to_free(&t).unwrap();
        let kinds: BTreeSet<_> = red.records.iter().map(|r| r.rule).collect();
        assert!(kinds.contains(&RuleKind::Rule1), "records: {kinds:?}");
        assert!(kinds.contains(&RuleKind::Rule2), "records: {kinds:?}");
        assert!(red.records.len() <= g.vertex_count());
        if let ReductionOutcome::Free(tf) = &red.outcome {
            assert!(is_free_triple(tf));
        }
        // The whole pipeline still matches the exhaustive optimum.
        let s = crate::detection::minimal_free_s(&g);
        let sol = super::super::solve::solve_completion(&t, s).unwrap();
        let brute = crate::testkit::brute_force_cvc(&g, Some(&j), None)
            .unwrap()
            .unwrap();
        assert_eq!(sol.size, brute.size);
    }
}
