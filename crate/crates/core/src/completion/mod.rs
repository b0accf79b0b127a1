//! Machinery for Connected Vertex Cover Completion: cover-complete triples,
//! set-contraction, pseudo-dominating structures, the two reduction rules
//! with their lifting records, and the completion solver itself.

mod rules;
mod solve;
mod triple;

pub use rules::{
    apply_rule1, apply_rule2, reduce_to_free, Reduction, ReductionOutcome, ReductionRecord,
    RuleApplication, RuleKind,
};
pub use solve::{
    greedy_clique_in_l, lift_through_records, smallest_type1_cover, solve_completion,
    solve_single_j,
};
pub use triple::{
    validate_triple, CompletionError, CoverCompleteTriple, PseudoPair, PseudoTriple,
    TripleProperty,
};
