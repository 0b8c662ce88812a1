//! Constructors for the digraph classes used throughout the crate.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};

/// Shape of the underlying tree of a bidirected tree `↔Tₘ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TreeShape {
    Path,
    Star,
    /// A spine path with one pendant leaf hung on spine vertices in turn.
    Caterpillar,
    /// Uniform labelled tree drawn from a Prüfer sequence.
    Random(u64),
}

impl fmt::Display for TreeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeShape::Path => write!(f, "path"),
            TreeShape::Star => write!(f, "star"),
            TreeShape::Caterpillar => write!(f, "caterpillar"),
            TreeShape::Random(seed) => write!(f, "random{seed}"),
        }
    }
}

impl FromStr for TreeShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(TreeShape::Path),
            "star" => Ok(TreeShape::Star),
            "caterpillar" => Ok(TreeShape::Caterpillar),
            _ => s
                .strip_prefix("random")
                .and_then(|seed| seed.trim_start_matches(['(', '=']).trim_end_matches(')').parse().ok())
                .map(TreeShape::Random)
                .ok_or_else(|| Error::ClassSpec(s.to_string())),
        }
    }
}

fn require(what: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        Err(Error::OrderTooSmall { what, min, got })
    } else {
        Ok(())
    }
}

/// Directed cycle `0 → 1 → … → n−1 → 0`. `n = 2` gives the digon.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    require("directed cycle", 2, n)?;
    Digraph::from_arc_list(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Biorientation of the undirected `m`-cycle.
pub fn bidirected_cycle(m: usize) -> Result<Digraph> {
    require("bidirected cycle", 3, m)?;
    Ok(UndirectedGraph::new(m, (0..m).map(|i| (i, (i + 1) % m)))?.biorient())
}

/// The undirected tree of the given shape on `m` vertices.
pub fn tree(shape: TreeShape, m: usize) -> Result<UndirectedGraph> {
    require("tree", 2, m)?;
    let edges: Vec<(usize, usize)> = match shape {
        TreeShape::Path => (1..m).map(|i| (i - 1, i)).collect(),
        TreeShape::Star => (1..m).map(|i| (0, i)).collect(),
        TreeShape::Caterpillar => {
            let spine = m.div_ceil(2);
            let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
            edges.extend((spine..m).map(|leaf| (leaf - spine, leaf)));
            edges
        }
        TreeShape::Random(seed) => random_tree_edges(m, seed),
    };
    UndirectedGraph::new(m, edges)
}

fn random_tree_edges(m: usize, seed: u64) -> Vec<(usize, usize)> {
    if m == 2 {
        return vec![(0, 1)];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..m - 2).map(|_| rng.gen_range(0..m)).collect();
    let mut degree = vec![1usize; m];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    for &v in &prufer {
        let leaf = (0..m).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Biorientation `↔Tₘ` of a tree.
pub fn bidirected_tree(shape: TreeShape, m: usize) -> Result<Digraph> {
    Ok(tree(shape, m)?.biorient())
}

/// Complete digraph `↔Kₘ`.
pub fn complete_digraph(m: usize) -> Result<Digraph> {
    require("complete digraph", 2, m)?;
    Digraph::from_arc_list(
        m,
        (0..m).flat_map(|u| (0..m).filter(move |&v| v != u).map(move |v| (u, v))),
    )
}

/// A strong digraph: a Hamiltonian cycle through a random vertex permutation,
/// plus every other ordered pair independently with probability
/// `extra_arc_prob`. Deterministic in `seed`.
pub fn random_strong_digraph(n: usize, extra_arc_prob: f64, seed: u64) -> Result<Digraph> {
    require("random strong digraph", 2, n)?;
    let p = extra_arc_prob.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arc_list(n, arcs)
}

/// A random connected undirected graph: a random tree plus each remaining
/// pair with probability `extra_edge_prob`.
pub fn random_connected_graph(n: usize, extra_edge_prob: f64, seed: u64) -> Result<UndirectedGraph> {
    require("random connected graph", 1, n)?;
    if n == 1 {
        return UndirectedGraph::new(1, []);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_tree_edges(n, rng.gen());
    let p = extra_edge_prob.clamp(0.0, 1.0);
    for u in 0..n {
        for v in u + 1..n {
            let present = edges.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v));
            if !present && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, edges)
}
