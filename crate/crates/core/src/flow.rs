//! Local and global arc-strong connectivity by unit-capacity maximum flow.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::digraph::{ArcSet, Digraph};
use crate::error::{Error, Result};

/// Maximum number of arc-disjoint `s → t` paths, with both Menger
/// certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalArcConnectivity {
    pub source: usize,
    pub sink: usize,
    pub value: usize,
    /// A minimum `s → t` arc cut.
    pub cut: ArcSet,
    /// Pairwise arc-disjoint `s → t` paths as vertex sequences.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub lambda: usize,
    pub delta_out: usize,
    pub delta_in: usize,
    /// Removing these arcs leaves a non-strong digraph. Empty when the input
    /// is already not strong.
    pub min_cut: ArcSet,
    pub strong: bool,
}

struct FlowState<'a> {
    d: &'a Digraph,
    alive: &'a dyn Fn(usize) -> bool,
    flow: Vec<bool>,
}

impl<'a> FlowState<'a> {
    fn new(d: &'a Digraph, alive: &'a dyn Fn(usize) -> bool) -> Self {
        FlowState {
            d,
            alive,
            flow: vec![false; d.arc_count()],
        }
    }

    /// BFS in the residual network. Returns the predecessor arc of every
    /// reached vertex (`usize::MAX` at the root) and whether the arc was used
    /// backwards.
    fn search(&self, s: usize) -> Vec<Option<(usize, bool)>> {
        let n = self.d.order();
        let mut pred = vec![None; n];
        pred[s] = Some((usize::MAX, false));
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in self.d.out_arcs(u) {
                let w = self.d.arc(a).1;
                if pred[w].is_none() && !self.flow[a] && (self.alive)(a) {
                    pred[w] = Some((a, false));
                    queue.push_back(w);
                }
            }
            for &a in self.d.in_arcs(u) {
                let w = self.d.arc(a).0;
                if pred[w].is_none() && self.flow[a] {
                    pred[w] = Some((a, true));
                    queue.push_back(w);
                }
            }
        }
        pred
    }

    fn run(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut value = 0;
        while value < limit {
            let pred = self.search(s);
            if pred[t].is_none() {
                break;
            }
            let mut v = t;
            while v != s {
                let (a, back) = pred[v].expect("on augmenting path");
                self.flow[a] = !back;
                let (tail, head) = self.d.arc(a);
                v = if back { head } else { tail };
            }
            value += 1;
        }
        value
    }

    fn paths(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut used = vec![false; self.d.arc_count()];
        let mut paths = Vec::new();
        loop {
            let mut walk = vec![s];
            let mut v = s;
            while v != t {
                let next = self.d.out_arcs(v).iter().copied().find(|&a| self.flow[a] && !used[a]);
                let Some(a) = next else { break };
                used[a] = true;
                v = self.d.arc(a).1;
                // Cut out any cycle closed by this step.
                if let Some(pos) = walk.iter().position(|&w| w == v) {
                    walk.truncate(pos + 1);
                } else {
                    walk.push(v);
                }
            }
            if v != t {
                break;
            }
            paths.push(walk);
        }
        paths
    }
}

/// Value of a maximum `s → t` flow using only arcs accepted by `alive`,
/// stopping early once `limit` is reached.
pub(crate) fn unit_flow_value(d: &Digraph, alive: &dyn Fn(usize) -> bool, s: usize, t: usize, limit: usize) -> usize {
    FlowState::new(d, alive).run(s, t, limit)
}

/// Maximum number of arc-disjoint `s → t` paths, with a minimum cut and a
/// path packing of the same size.
pub fn max_flow_unit(d: &Digraph, s: usize, t: usize) -> Result<LocalArcConnectivity> {
    for v in [s, t] {
        if v >= d.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: d.order(),
            });
        }
    }
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let all = |_: usize| true;
    let mut state = FlowState::new(d, &all);
    let value = state.run(s, t, usize::MAX);
    let reached = state.search(s);
    let cut = d
        .arcs()
        .iter()
        .copied()
        .filter(|&(u, v)| reached[u].is_some() && reached[v].is_none())
        .collect();
    Ok(LocalArcConnectivity {
        source: s,
        sink: t,
        value,
        cut,
        paths: state.paths(s, t),
    })
}

/// Arc-strong connectivity `λ(D)` via flows between a fixed pivot and every
/// other vertex in both directions.
pub fn arc_connectivity(d: &Digraph) -> Result<ConnectivityReport> {
    if d.order() < 2 {
        return Err(Error::OrderTooSmall {
            what: "arc connectivity",
            min: 2,
            got: d.order(),
        });
    }
    let (delta_out, delta_in) = d.degrees();
    if !d.is_strong() {
        return Ok(ConnectivityReport {
            lambda: 0,
            delta_out,
            delta_in,
            min_cut: ArcSet::new(),
            strong: false,
        });
    }
    let mut best: Option<LocalArcConnectivity> = None;
    for u in 1..d.order() {
        for (s, t) in [(0, u), (u, 0)] {
            let local = max_flow_unit(d, s, t)?;
            if best.as_ref().is_none_or(|b| local.value < b.value) {
                best = Some(local);
            }
        }
    }
    let best = best.expect("order at least 2");
    Ok(ConnectivityReport {
        lambda: best.value,
        delta_out,
        delta_in,
        min_cut: best.cut,
        strong: true,
    })
}

/// True iff removing `cut` leaves `d` not strong.
pub fn verify_cut(d: &Digraph, cut: &ArcSet) -> bool {
    !d.without_arcs(cut).is_strong()
}
