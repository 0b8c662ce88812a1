//! Simple digraphs on dense vertex indices, arc sets and the structural
//! queries every other module builds on.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered vertex pair `(tail, head)`.
pub type ArcPair = (usize, usize);

/// A simple directed graph on vertices `0..order`.
///
/// Loops are rejected and parallel arcs collapse to one (the arc set has set
/// semantics), so `(u, v)` and `(v, u)` may coexist but `(u, v)` appears at
/// most once. Arcs are stored in lexicographic order and an arc's position in
/// that order is its *arc index*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    order: usize,
    arcs: Vec<ArcPair>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a digraph from an arc list. Duplicate arcs are silently
    /// deduplicated; loops and out-of-range endpoints are errors.
    pub fn from_arc_list(order: usize, arcs: impl IntoIterator<Item = ArcPair>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            set.insert((u, v));
        }
        Ok(Self::from_sorted(order, set.into_iter().collect()))
    }

    fn from_sorted(order: usize, arcs: Vec<ArcPair>) -> Self {
        let mut out_arcs = vec![Vec::new(); order];
        let mut in_arcs = vec![Vec::new(); order];
        for (idx, &(u, v)) in arcs.iter().enumerate() {
            out_arcs[u].push(idx);
            in_arcs[v].push(idx);
        }
        Digraph {
            order,
            arcs,
            out_arcs,
            in_arcs,
        }
    }

    /// The digraph on `order` vertices with no arcs.
    pub fn empty(order: usize) -> Result<Self> {
        Self::from_arc_list(order, [])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[ArcPair] {
        &self.arcs
    }

    pub fn arc(&self, idx: usize) -> ArcPair {
        self.arcs[idx]
    }

    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        self.arcs.binary_search(&(u, v)).ok()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arc_index(u, v).is_some()
    }

    /// Indices of arcs leaving `v`, ordered by head.
    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    /// Indices of arcs entering `v`, ordered by tail.
    pub fn in_arcs(&self, v: usize) -> &[usize] {
        &self.in_arcs[v]
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_arcs[v].iter().map(move |&a| self.arcs[a].1)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_arcs[v].iter().map(move |&a| self.arcs[a].0)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_arcs[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_arcs[v].len()
    }

    /// Minimum out-degree and minimum in-degree `(δ⁺, δ⁻)`.
    pub fn degrees(&self) -> (usize, usize) {
        let dout = (0..self.order).map(|v| self.out_degree(v)).min().unwrap_or(0);
        let din = (0..self.order).map(|v| self.in_degree(v)).min().unwrap_or(0);
        (dout, din)
    }

    /// True iff every ordered vertex pair is mutually reachable. A single
    /// vertex is strong.
    pub fn is_strong(&self) -> bool {
        let all = |seen: Vec<bool>| seen.into_iter().all(|s| s);
        all(self.reach(0, true, None)) && all(self.reach(0, false, None))
    }

    /// Vertices reachable from `start`, following arcs forward or backward,
    /// restricted to the arcs for which `keep` holds (all arcs if `None`).
    pub(crate) fn reach(&self, start: usize, forward: bool, keep: Option<&dyn Fn(usize) -> bool>) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            let incident = if forward { &self.out_arcs[u] } else { &self.in_arcs[u] };
            for &a in incident {
                if keep.is_some_and(|k| !k(a)) {
                    continue;
                }
                let (t, h) = self.arcs[a];
                let w = if forward { h } else { t };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// The digraph with the given arcs removed. Arcs not present are ignored.
    pub fn without_arcs(&self, removed: &ArcSet) -> Digraph {
        let arcs = self.arcs.iter().copied().filter(|a| !removed.contains(a)).collect();
        Self::from_sorted(self.order, arcs)
    }

    /// The digraph with one extra arc.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        Self::from_arc_list(self.order, self.arcs.iter().copied().chain([(u, v)]))
    }

    /// The reverse digraph.
    pub fn reversed(&self) -> Digraph {
        Self::from_arc_list(self.order, self.arcs.iter().map(|&(u, v)| (v, u))).expect("reversal preserves validity")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Digraph> {
        Self::from_arc_list(self.order, self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced by `vertices`, relabeled to `0..k` in increasing
    /// vertex order. Also returns the old→new index map.
    pub fn induced_subgraph(&self, vertices: &BTreeSet<usize>) -> Result<(Digraph, BTreeMap<usize, usize>)> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.order) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        let map: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let arcs = self
            .arcs
            .iter()
            .filter_map(|&(u, v)| Some((*map.get(&u)?, *map.get(&v)?)));
        let sub = Self::from_arc_list(map.len(), arcs)?;
        Ok((sub, map))
    }

    /// Whether the subgraph formed by `arcs` and their endpoints is strong and
    /// has every vertex of `seeds` among its vertices.
    pub fn arc_subset_spanning_check(&self, arcs: &ArcSet, seeds: &[usize]) -> bool {
        arcs.iter().all(|&(u, v)| self.has_arc(u, v)) && arcs.is_strong_spanning(seeds)
    }
}

/// A set of arcs in canonical (lexicographic) order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcSet(BTreeSet<ArcPair>);

impl ArcSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, arc: ArcPair) -> bool {
        self.0.insert(arc)
    }

    pub fn remove(&mut self, arc: &ArcPair) -> bool {
        self.0.remove(arc)
    }

    pub fn contains(&self, arc: &ArcPair) -> bool {
        self.0.contains(arc)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArcPair> + '_ {
        self.0.iter()
    }

    pub fn extend(&mut self, other: &ArcSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        ArcSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &ArcSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Endpoints of all arcs.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.0.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn to_vec(&self) -> Vec<ArcPair> {
        self.0.iter().copied().collect()
    }

    /// Whether the digraph formed by these arcs and their endpoints is strong
    /// and contains all of `seeds`.
    pub fn is_strong_spanning(&self, seeds: &[usize]) -> bool {
        let verts = self.vertices();
        if seeds.iter().any(|s| !verts.contains(s)) {
            return false;
        }
        let Some(&root) = verts.iter().next() else {
            return false;
        };
        let mut fwd: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut bwd: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(u, v) in &self.0 {
            fwd.entry(u).or_default().push(v);
            bwd.entry(v).or_default().push(u);
        }
        let covers = |adj: &BTreeMap<usize, Vec<usize>>| {
            let mut seen = BTreeSet::from([root]);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in adj.get(&u).into_iter().flatten() {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.len() == verts.len()
        };
        covers(&fwd) && covers(&bwd)
    }
}

impl FromIterator<ArcPair> for ArcSet {
    fn from_iter<I: IntoIterator<Item = ArcPair>>(iter: I) -> Self {
        ArcSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ArcSet {
    type Item = &'a ArcPair;
    type IntoIter = std::collections::btree_set::Iter<'a, ArcPair>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A simple undirected graph, used for biorientation and the undirected
/// product formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// Edges are normalized to `(min, max)`; loops, repeated edges and
    /// out-of-range endpoints are errors.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::MultiEdge(u, v));
            }
        }
        Ok(UndirectedGraph {
            order,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.biorient().is_strong()
    }

    /// The symmetric digraph with both orientations of every edge.
    pub fn biorient(&self) -> Digraph {
        Digraph::from_arc_list(self.order, self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]))
            .expect("edges were validated")
    }
}

/// Biorientation of an undirected graph given as an edge list.
pub fn biorient(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
    Ok(UndirectedGraph::new(order, edges)?.biorient())
}
