//! Ground-truth oracles, instance generators, and the star-contraction
//! checker.
//!
//! The oracles deliberately share no code with the solver modules beyond the
//! graph type itself: every answer here comes from exhaustive enumeration, so
//! a solver bug cannot hide behind shared machinery. Subsets are visited by
//! cardinality and then lexicographically, which makes "the" optimal witness
//! deterministic.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use thiserror::Error;

use crate::detection::is_free;
use crate::graph::{weight_from_int, Graph, Vertex, Weight, WeightMap};
use crate::vc::VcResult;

/// Hard ceiling for the exhaustive connected-cover oracle.
pub const CVC_ORACLE_MAX_N: usize = 22;
/// Hard ceiling for the star-contraction checker.
pub const STAR_CHECK_MAX_N: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TestkitError {
    #[error("instance has {n} vertices; the exhaustive guard allows at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("generator gave up after {0} rejected samples")]
    GenerationExhausted(usize),
    #[error("paper figure generators are fixed graphs; spec fields n/s/density are ignored")]
    BadSpec,
}

/// An exact optimum found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteSolution {
    pub cover: BTreeSet<Vertex>,
    pub size: usize,
    pub weight: Weight,
}

/// Exact smallest (or minimum-weight) connected vertex cover containing
/// `must_contain`, by scanning all vertex subsets. None when no connected
/// cover through `must_contain` exists.
pub fn brute_force_cvc(
    g: &Graph,
    must_contain: Option<&BTreeSet<Vertex>>,
    w: Option<&WeightMap>,
) -> Result<Option<BruteSolution>, TestkitError> {
    brute_force(g, must_contain, w, true)
}

/// Exact minimum (weighted) vertex cover, without the connectivity
/// constraint. Always exists: the full vertex set covers everything.
pub fn brute_force_vc(g: &Graph, w: Option<&WeightMap>) -> Result<VcResult, TestkitError> {
    let sol = brute_force(g, None, w, false)?.expect("the full vertex set is a cover");
    Ok(VcResult {
        cover: sol.cover,
        size: sol.size,
        weight: sol.weight,
    })
}

fn brute_force(
    g: &Graph,
    must_contain: Option<&BTreeSet<Vertex>>,
    w: Option<&WeightMap>,
    connected: bool,
) -> Result<Option<BruteSolution>, TestkitError> {
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    if n > CVC_ORACLE_MAX_N {
        return Err(TestkitError::TooLarge {
            n,
            max: CVC_ORACLE_MAX_N,
        });
    }
    let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // Bitmask adjacency for fast cover and connectivity checks.
    let mut nbr = vec![0u32; n];
    for (i, &v) in vs.iter().enumerate() {
        for &u in g.neighbours_of(v).expect("listed vertex") {
            nbr[i] |= 1 << index[&u];
        }
    }
    let forced: u32 = must_contain
        .map(|m| m.iter().map(|v| 1 << index[v]).fold(0, |acc, b| acc | b))
        .unwrap_or(0);
    let weights: Option<Vec<Weight>> = w.map(|wm| {
        vs.iter()
            .map(|&v| wm.get(v).expect("weight map covers the graph").clone())
            .collect()
    });

    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let is_cover = |mask: u32| -> bool {
        let outside = full & !mask;
        (0..n).all(|i| outside & (1 << i) == 0 || nbr[i] & outside == 0)
    };
    let is_conn = |mask: u32| -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= nbr[i] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == mask
    };
    let feasible = |mask: u32| -> bool {
        mask & forced == forced && is_cover(mask) && (!connected || is_conn(mask))
    };
    let to_set = |mask: u32| -> BTreeSet<Vertex> {
        (0..n).filter(|i| mask & (1 << i) != 0).map(|i| vs[i]).collect()
    };
    let mask_weight = |mask: u32| -> Weight {
        match &weights {
            Some(ws) => {
                let mut sum = Weight::zero();
                for (i, wi) in ws.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        sum += wi;
                    }
                }
                sum
            }
            None => weight_from_int(mask.count_ones() as i64),
        }
    };

    if weights.is_none() {
        // Unweighted: the first feasible subset in (cardinality, lex) order
        // is the optimum and the canonical witness.
        for k in 0..=n {
            let mut found: Option<u32> = None;
            for mask in combinations(n, k) {
                if feasible(mask) {
                    found = Some(mask);
                    break;
                }
            }
            if let Some(mask) = found {
                let cover = to_set(mask);
                return Ok(Some(BruteSolution {
                    size: k,
                    weight: weight_from_int(k as i64),
                    cover,
                }));
            }
        }
        return Ok(None);
    }

    // Weighted: weight is not monotone in cardinality, so scan everything,
    // keeping the best (weight, size, lexicographically least cover).
    let mut best: Option<(Weight, usize, u32)> = None;
    for k in 0..=n {
        for mask in combinations(n, k) {
            if !feasible(mask) {
                continue;
            }
            let wt = mask_weight(mask);
            let better = match &best {
                None => true,
                Some((bw, bk, _)) => wt < *bw || (wt == *bw && k < *bk),
            };
            if better {
                best = Some((wt, k, mask));
            }
        }
    }
    Ok(best.map(|(wt, k, mask)| BruteSolution {
        cover: to_set(mask),
        size: k,
        weight: wt,
    }))
}

/// All k-subsets of 0..n as bitmasks, in lexicographic order of the sorted
/// index vectors.
fn combinations(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| 1u32 << i).fold(0, |acc, b| acc | b));
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// True iff `g` can be turned into the star K_{1,n-k} by edge contractions.
///
/// A contraction to the star is witnessed by a partition of the vertices into
/// a connected centre class A and leaf classes with no edges between
/// different leaves. Grouping forces each leaf class to be a whole component
/// of G - A, so it suffices to scan all connected A with exactly n - k
/// components left over.
pub fn star_contraction_check(g: &Graph, k: usize) -> Result<bool, TestkitError> {
    let vs: Vec<Vertex> = g.vertices().collect();
    let n = vs.len();
    if n > STAR_CHECK_MAX_N {
        return Err(TestkitError::TooLarge {
            n,
            max: STAR_CHECK_MAX_N,
        });
    }
    if k > n {
        return Ok(true);
    }
    let leaves = n - k;
    for mask in 1u32..(1u32 << n) {
        let a: BTreeSet<Vertex> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| vs[i])
            .collect();
        if !g.is_connected_set(&a).expect("subset of the graph") {
            continue;
        }
        let rest = g.remove_set(&a).expect("subset of the graph");
        if rest.components().len() == leaves {
            return Ok(true);
        }
    }
    Ok(false)
}

/// SplitMix64: a tiny deterministic PRNG, so generated instances are
/// reproducible bit-for-bit regardless of crate versions.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in 0..bound (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Bernoulli trial with exact rational probability num/den.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        den > 0 && self.below(den) < num
    }
}

/// Which bundled figure graph to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    G1,
    G2,
}

/// Instance families the generator understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// G(n, p) filtered through connectivity and the freeness check.
    Rejection,
    /// Random cograph via union/join; P4-free, hence P5-free.
    Cograph,
    /// Clique plus independent set with random cross edges; 2K2-free,
    /// hence P5-free.
    SplitLike,
    /// The two worked 6-vertex figures, emitted verbatim.
    PaperFigures(FigureId),
}

/// Everything needed to regenerate an instance.
#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    pub n: u32,
    pub s: usize,
    /// Edge probability as an exact rational num/den in [0, 1].
    pub density: (u64, u64),
    pub seed: u64,
    pub family: Family,
}

const MAX_REJECTIONS: usize = 100_000;

/// The 6-cycle a-b-c-d-e-f with chords ad and cf; two minimum vertex covers
/// of size 3, minimum connected vertex cover of size 4.
pub fn figure_g1() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (2, 5)],
    )
    .expect("fixed edge list")
}

/// The 4-cycle p-q-r-s plus pendant path p-t-u; minimum vertex cover of
/// size 3, minimum connected vertex cover of size 4.
pub fn figure_g2() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)])
        .expect("fixed edge list")
}

/// Generates a connected graph passing `is_free(_, spec.s)`, deterministically
/// from the spec.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, TestkitError> {
    match spec.family {
        Family::PaperFigures(FigureId::G1) => return Ok(figure_g1()),
        Family::PaperFigures(FigureId::G2) => return Ok(figure_g2()),
        _ => {}
    }
    let mut rng = Rng::new(spec.seed);
    for _ in 0..MAX_REJECTIONS {
        let g = match spec.family {
            Family::Rejection => gnp(spec.n, spec.density, &mut rng),
            Family::Cograph => cograph(spec.n, &mut rng),
            Family::SplitLike => split_like(spec.n, spec.density, &mut rng),
            Family::PaperFigures(_) => unreachable!("handled above"),
        };
        if g.is_connected() && is_free(&g, spec.s) {
            return Ok(g);
        }
    }
    Err(TestkitError::GenerationExhausted(MAX_REJECTIONS))
}

fn gnp(n: u32, density: (u64, u64), rng: &mut Rng) -> Graph {
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.chance(density.0, density.1) {
                g.insert_edge(u, v).expect("simple pair");
            }
        }
    }
    g
}

/// Builds a random cograph bottom-up; the final operation is forced to be a
/// join, which makes the result connected.
fn cograph(n: u32, rng: &mut Rng) -> Graph {
    fn build(labels: &[Vertex], rng: &mut Rng, force_join: bool) -> Vec<(Vertex, Vertex)> {
        if labels.len() <= 1 {
            return Vec::new();
        }
        let cut = 1 + rng.below(labels.len() as u64 - 1) as usize;
        let (left, right) = labels.split_at(cut);
        let mut edges = build(left, rng, false);
        edges.extend(build(right, rng, false));
        if force_join || rng.chance(1, 2) {
            for &u in left {
                for &v in right {
                    edges.push((u, v));
                }
            }
        }
        edges
    }
    let labels: Vec<Vertex> = (0..n).collect();
    let edges = build(&labels, rng, true);
    Graph::from_edges(n, &edges).expect("simple pairs")
}

/// Clique on a random prefix, independent set on the rest, random cross
/// edges, then every independent vertex is tied in to keep things connected.
fn split_like(n: u32, density: (u64, u64), rng: &mut Rng) -> Graph {
    if n == 0 {
        return Graph::new();
    }
    let clique_size = 1 + rng.below(n as u64) as u32;
    let mut g = Graph::edgeless(n);
    for u in 0..clique_size {
        for v in (u + 1)..clique_size {
            g.insert_edge(u, v).expect("simple pair");
        }
    }
    for u in clique_size..n {
        let mut attached = false;
        for v in 0..clique_size {
            if rng.chance(density.0, density.1) {
                g.insert_edge(u, v).expect("simple pair");
                attached = true;
            }
        }
        if !attached {
            let v = rng.below(clique_size as u64) as u32;
            g.insert_edge(u, v).expect("simple pair");
        }
    }
    g
}

/// Random exact-rational weights in [0, 10], keyed by the graph's vertices.
pub fn random_weights(g: &Graph, rng: &mut Rng) -> WeightMap {
    let mut map = BTreeMap::new();
    for v in g.vertices() {
        let den = 1 + rng.below(12) as i64;
        let num = rng.below((10 * den + 1) as u64) as i64;
        map.insert(v, crate::graph::weight_from_ratio(num, den));
    }
    WeightMap::new(map).expect("non-negative by construction")
}

/// Generates a random cover-complete triple: an independent J with y
/// universal to the outside, each other J-vertex attached to an independent
/// outside set, filtered through the freeness check.
///
/// Returns (graph, J, y). The caller validates it into a triple.
pub fn generate_triple(
    n_outside: u32,
    j_size: u32,
    s: usize,
    density: (u64, u64),
    seed: u64,
) -> Result<(Graph, BTreeSet<Vertex>, Vertex), TestkitError> {
    assert!(j_size >= 1);
    let mut rng = Rng::new(seed);
    'attempt: for _ in 0..MAX_REJECTIONS {
        // Outside vertices are 0..n_outside, J occupies the labels above.
        let n = n_outside + j_size;
        let y = n_outside;
        let mut g = gnp(n_outside, density, &mut rng);
        for j in n_outside..n {
            g.insert_vertex(j);
        }
        for v in 0..n_outside {
            g.insert_edge(y, v).expect("simple pair");
        }
        for x in (n_outside + 1)..n {
            // Grow a random independent outside neighbourhood for x.
            let mut nbhd: BTreeSet<Vertex> = BTreeSet::new();
            for v in 0..n_outside {
                if nbhd.iter().all(|&u| !g.has_edge(u, v)) && rng.chance(1, 2) {
                    nbhd.insert(v);
                }
            }
            if nbhd.is_empty() {
                if n_outside == 0 {
                    continue 'attempt;
                }
                nbhd.insert(rng.below(n_outside as u64) as u32);
            }
            if !g.induced(&nbhd).expect("outside set").is_independent(&nbhd) {
                continue 'attempt;
            }
            for &v in &nbhd {
                g.insert_edge(x, v).expect("simple pair");
            }
        }
        let j: BTreeSet<Vertex> = (n_outside..n).collect();
        if g.is_connected() && is_free(&g, s) {
            return Ok((g, j, y));
        }
    }
    Err(TestkitError::GenerationExhausted(MAX_REJECTIONS))
}
