//! Seeded instance generators.
//!
//! All randomness comes from [`Lcg`], a 64-bit linear congruential generator
//! with multiplier 6364136223846793005 and increment 1442695040888963407.
//! Each draw advances the state and returns its high 32 bits; `below(m)`
//! scales that to `0..m` as `(x · m) >> 32`. Fixing these makes generated
//! files reproducible in any language.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::io::{write_graph, write_multicut};
use crate::multicut::MulticutInstance;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish draw from `0..m`; `m` must be in `1..=2^32`.
    pub fn below(&mut self, m: u64) -> u64 {
        (self.next_u32() as u64 * m) >> 32
    }

    /// Bernoulli draw with probability `p`, at 2^-32 resolution.
    pub fn chance(&mut self, p: f64) -> bool {
        (self.next_u32() as f64) < p * 4_294_967_296.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Gnp,
    Tree,
    Path,
    Star,
}

/// Erdős–Rényi graph: each pair `u < v` in lexicographic order is an edge
/// with probability `p`.
pub fn gnp(n: usize, p: f64, rng: &mut Lcg) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Uniform labelled tree decoded from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut Lcg) -> Graph {
    if n <= 1 {
        return Graph::from_edges(n, []).expect("no edges");
    }
    let code: Vec<Vertex> = (0..n - 2)
        .map(|_| rng.below(n as u64) as Vertex + 1)
        .collect();
    Graph::from_edges(n, prufer_decode(n, &code)).expect("Prüfer decoding yields a tree")
}

/// Tree edges for a Prüfer sequence over `1..=n`.
pub fn prufer_decode(n: usize, code: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut degree = vec![1usize; n + 1];
    for &x in code {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<Vertex>> = (1..=n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for &x in code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf remains");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(std::cmp::Reverse(x));
        }
    }
    let rest: Vec<Vertex> = leaves.into_iter().map(|r| r.0).collect();
    if let [a, b] = rest[..] {
        edges.push((a.min(b), a.max(b)));
    }
    edges
}

/// `m` demand pairs with distinct ends, drawn uniformly.
pub fn random_pairs(n: usize, m: usize, rng: &mut Lcg) -> Vec<(Vertex, Vertex)> {
    if n < 2 {
        return Vec::new();
    }
    (0..m)
        .map(|_| {
            let a = rng.below(n as u64) as Vertex + 1;
            let mut b = rng.below(n as u64 - 1) as Vertex + 1;
            if b >= a {
                b += 1;
            }
            (a, b)
        })
        .collect()
}

/// Parameters beyond kind, size and seed.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct GenParams {
    /// Edge probability for `gnp`.
    pub p: Option<f64>,
    /// Demand pairs for `tree`; with `Some`, the output is a multicut instance.
    pub pairs: Option<usize>,
}

/// Generates an instance and renders it in the text format.
pub fn generate_instance(
    kind: InstanceKind,
    n: usize,
    seed: u64,
    params: GenParams,
) -> Result<String> {
    if n == 0 {
        return Err(Error::Input("n must be at least 1".into()));
    }
    let mut rng = Lcg::new(seed);
    Ok(match kind {
        InstanceKind::Gnp => {
            let p = params
                .p
                .ok_or_else(|| Error::Input("gnp needs an edge probability".into()))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Input(format!("edge probability {p} not in [0, 1]")));
            }
            write_graph(&gnp(n, p, &mut rng))
        }
        InstanceKind::Tree => {
            let tree = random_tree(n, &mut rng);
            match params.pairs {
                Some(m) => {
                    if n < 2 && m > 0 {
                        return Err(Error::Input("demand pairs need n >= 2".into()));
                    }
                    let pairs = random_pairs(n, m, &mut rng);
                    write_multicut(&MulticutInstance::new(tree, pairs)?)
                }
                None => write_graph(&tree),
            }
        }
        InstanceKind::Path => write_graph(&Graph::path(n)),
        InstanceKind::Star => write_graph(&Graph::star(n)),
    })
}
