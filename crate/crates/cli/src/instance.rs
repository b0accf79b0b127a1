//! The instance file format.
//!
//! ```text
//! # comment lines start with '#'
//! cvc <n> <m>
//! <u> <v>          (m edge lines, 0-based indices)
//! w <u> <rational> (optional weight lines; missing vertices weigh 1)
//! ```
//!
//! Rationals are written `p`, `p/q`, or as a plain decimal like `2.5`.
//! Serialization is canonical: header, sorted edge lines, sorted weight
//! lines, no comments, so generate -> parse -> serialize round-trips
//! byte-identically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use cvc_core::graph::{Graph, Vertex, Weight, WeightMap};

#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    /// Weights exactly as written in the file; None when the file had no
    /// weight lines.
    pub explicit_weights: Option<BTreeMap<Vertex, Weight>>,
}

impl Instance {
    pub fn unweighted(graph: Graph) -> Self {
        Instance {
            graph,
            explicit_weights: None,
        }
    }

    /// The effective weight map: explicit entries, 1 everywhere else.
    pub fn weights(&self) -> WeightMap {
        let mut map: BTreeMap<Vertex, Weight> = self
            .graph
            .vertices()
            .map(|v| (v, Weight::one()))
            .collect();
        if let Some(explicit) = &self.explicit_weights {
            for (&v, w) in explicit {
                map.insert(v, w.clone());
            }
        }
        WeightMap::new(map).expect("parse rejects negative weights")
    }
}

pub fn parse_rational(text: &str) -> Result<Weight> {
    let make = |num: BigInt, den: BigInt| -> Result<Weight> {
        if den.is_zero() {
            bail!("zero denominator in '{text}'");
        }
        let w = Weight::new(num, den);
        if w.is_negative() {
            bail!("negative weight '{text}'");
        }
        Ok(w)
    };
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().with_context(|| format!("bad rational '{text}'"))?;
        let q: BigInt = q.trim().parse().with_context(|| format!("bad rational '{text}'"))?;
        return make(p, q);
    }
    if let Some((int, frac)) = text.split_once('.') {
        let digits = frac.trim();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            bail!("bad decimal '{text}'");
        }
        let scale = BigInt::from(10u8).pow(digits.len() as u32);
        let int_part: BigInt = if int.trim().is_empty() {
            BigInt::zero()
        } else {
            int.trim().parse().with_context(|| format!("bad decimal '{text}'"))?
        };
        let frac_part: BigInt = digits.parse().expect("checked digits");
        let num = if int_part.is_negative() {
            &int_part * &scale - frac_part
        } else {
            &int_part * &scale + frac_part
        };
        return make(num, scale);
    }
    let n: BigInt = text.trim().parse().with_context(|| format!("bad rational '{text}'"))?;
    make(n, BigInt::one())
}

pub fn parse(text: &str) -> Result<Instance> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| anyhow!("empty instance file"))?;
    let mut it = header.split_whitespace();
    if it.next() != Some("cvc") {
        bail!("header must start with 'cvc', got '{header}'");
    }
    let n: u32 = it
        .next()
        .ok_or_else(|| anyhow!("header missing vertex count"))?
        .parse()
        .context("bad vertex count")?;
    let m: usize = it
        .next()
        .ok_or_else(|| anyhow!("header missing edge count"))?
        .parse()
        .context("bad edge count")?;
    if it.next().is_some() {
        bail!("trailing tokens in header '{header}'");
    }

    let parse_vertex = |tok: &str| -> Result<Vertex> {
        let v: Vertex = tok.parse().with_context(|| format!("bad vertex '{tok}'"))?;
        if v >= n {
            bail!("vertex {v} out of range [0, {n})");
        }
        Ok(v)
    };

    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut weights: BTreeMap<Vertex, Weight> = BTreeMap::new();
    let mut any_weight = false;
    for line in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["w", v, value] => {
                let v = parse_vertex(v)?;
                if weights.insert(v, parse_rational(value)?).is_some() {
                    bail!("duplicate weight line for vertex {v}");
                }
                any_weight = true;
            }
            [u, v] => {
                let u = parse_vertex(u)?;
                let v = parse_vertex(v)?;
                if u == v {
                    bail!("self-loop at vertex {u}");
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    bail!("duplicate edge {} {}", key.0, key.1);
                }
                edges.push(key);
            }
            _ => bail!("unrecognised line '{line}'"),
        }
    }
    if edges.len() != m {
        bail!("header promises {m} edges, found {}", edges.len());
    }
    let graph = Graph::from_edges(n, &edges).map_err(|e| anyhow!("{e}"))?;
    Ok(Instance {
        graph,
        explicit_weights: any_weight.then_some(weights),
    })
}

/// Canonical rendering: header, sorted edges, sorted weight lines.
pub fn serialize(inst: &Instance) -> String {
    let mut out = String::new();
    let edges = inst.graph.edges();
    writeln!(out, "cvc {} {}", inst.graph.vertex_count(), edges.len()).expect("string write");
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("string write");
    }
    if let Some(weights) = &inst.explicit_weights {
        for (v, w) in weights {
            writeln!(out, "w {v} {w}").expect("string write");
        }
    }
    out
}
