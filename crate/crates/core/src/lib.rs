//! Exact minimum (weighted) connected vertex cover for (sP1+P5)-free
//! graphs, built from a dominating-set guess-and-reduce pipeline over
//! cover-complete triples, together with the brute-force oracles and
//! instance generators that keep every structural step independently
//! testable.

pub mod completion;
pub mod detection;
pub mod domination;
pub mod graph;
pub mod solver;
pub mod testkit;
pub mod vc;
