//! Branch-and-bound packing of arc-disjoint `{x, y}`-strong subgraphs.
//!
//! A minimal `{x, y}`-strong subgraph is the union of a simple `x → y` path
//! and a simple `y → x` path, and it uses exactly one arc from each of
//! `out(x)`, `in(x)`, `out(y)` and `in(y)`. The search therefore picks the
//! scarcest of these four arc groups, takes its lowest available arc `e`, and
//! branches on "some member uses `e`" (enumerating the members through `e`,
//! shortest paths first) versus "`e` stays unused". Residual flow values in
//! both directions bound how many members can still be packed. Failed
//! `(available arcs, members still needed)` states are memoized.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::digraph::Digraph;
use crate::flow::unit_flow_value;

use super::mask::ArcMask;

/// Search node limit was hit before the question was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    OutX,
    InY,
    OutY,
    InX,
}

pub(crate) struct Packer<'a> {
    d: &'a Digraph,
    x: usize,
    y: usize,
    groups: [(Role, ArcMask); 4],
    failed: HashSet<(ArcMask, usize)>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Packer<'a> {
    pub fn new(d: &'a Digraph, x: usize, y: usize, budget: Option<u64>) -> Self {
        let m = d.arc_count();
        let group = |arcs: &[usize]| ArcMask::from_indices(m, arcs.iter().copied());
        Packer {
            d,
            x,
            y,
            groups: [
                (Role::OutX, group(d.out_arcs(x))),
                (Role::InY, group(d.in_arcs(y))),
                (Role::OutY, group(d.out_arcs(y))),
                (Role::InX, group(d.in_arcs(x))),
            ],
            failed: HashSet::new(),
            nodes: 0,
            budget,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Looks for `k` pairwise arc-disjoint `{x, y}`-strong subgraphs.
    pub fn find(&mut self, k: usize) -> Result<Option<Vec<ArcMask>>, Exhausted> {
        let all = ArcMask::full(self.d.arc_count());
        self.pack(&all, k)
    }

    fn pack(&mut self, avail: &ArcMask, r: usize) -> Result<Option<Vec<ArcMask>>, Exhausted> {
        if r == 0 {
            return Ok(Some(Vec::new()));
        }
        if self.failed.contains(&(avail.clone(), r)) {
            return Ok(None);
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Err(Exhausted);
        }

        let (role, group) = self
            .groups
            .iter()
            .min_by_key(|(_, g)| g.intersection_count(avail))
            .expect("four groups");
        let (role, group) = (*role, group.clone());
        if group.intersection_count(avail) < r || !self.flows_allow(avail, r) {
            self.failed.insert((avail.clone(), r));
            return Ok(None);
        }
        let e = group.first_common(avail).expect("group is nonempty");

        let found = self.members_through(avail, e, role, r)?;
        if found.is_some() {
            return Ok(found);
        }

        let mut rest = avail.clone();
        rest.clear(e);
        if let Some(members) = self.pack(&rest, r)? {
            return Ok(Some(members));
        }
        self.failed.insert((avail.clone(), r));
        Ok(None)
    }

    fn flows_allow(&self, avail: &ArcMask, r: usize) -> bool {
        let alive = |a: usize| avail.get(a);
        unit_flow_value(self.d, &alive, self.x, self.y, r) >= r
            && unit_flow_value(self.d, &alive, self.y, self.x, r) >= r
    }

    /// Tries every minimal member containing `e`, recursing on the rest.
    fn members_through(
        &mut self,
        avail: &ArcMask,
        e: usize,
        role: Role,
        r: usize,
    ) -> Result<Option<Vec<ArcMask>>, Exhausted> {
        let d = self.d;
        let (x, y) = (self.x, self.y);
        let (et, eh) = d.arc(e);
        let n = d.order();
        let arc_bits = d.arc_count();
        let mut tried: Vec<ArcMask> = Vec::new();
        let mut seen: HashSet<ArcMask> = HashSet::new();

        // The constrained path goes through `e`; the free one is any simple
        // path in the opposite direction.
        let (from, to, blocked, prefix, suffix, free_from, free_to) = match role {
            Role::OutX => (eh, y, x, Some(e), None, y, x),
            Role::InY => (x, et, y, None, Some(e), y, x),
            Role::OutY => (eh, x, y, Some(e), None, x, y),
            Role::InX => (y, et, x, None, Some(e), x, y),
        };
        let mut blocked_v = vec![false; n];
        blocked_v[blocked] = true;
        let no_block = vec![false; n];
        let constrained_is_xy = matches!(role, Role::OutX | Role::InY);

        let outcome = for_each_path(d, avail, from, to, &blocked_v, &mut |core: &[usize]| {
            let mut fixed = ArcMask::empty(arc_bits);
            for &a in prefix.iter().chain(core).chain(suffix.iter()) {
                fixed.set(a);
            }
            if r > 1 {
                let rest = avail.minus(&fixed);
                let alive = |a: usize| rest.get(a);
                let (s, t) = if constrained_is_xy { (x, y) } else { (y, x) };
                if unit_flow_value(d, &alive, s, t, r - 1) < r - 1 {
                    return ControlFlow::Continue(());
                }
            }
            for_each_path(d, avail, free_from, free_to, &no_block, &mut |free: &[usize]| {
                let mut member = fixed.clone();
                for &a in free {
                    member.set(a);
                }
                if !seen.insert(member.clone()) || tried.iter().any(|t| t.is_subset(&member)) {
                    return ControlFlow::Continue(());
                }
                let child = avail.minus(&member);
                match self.pack(&child, r - 1) {
                    Err(Exhausted) => ControlFlow::Break(Err(Exhausted)),
                    Ok(Some(mut members)) => {
                        members.push(member);
                        ControlFlow::Break(Ok(members))
                    }
                    Ok(None) => {
                        tried.push(member);
                        ControlFlow::Continue(())
                    }
                }
            })
        });
        match outcome {
            ControlFlow::Break(Ok(members)) => Ok(Some(members)),
            ControlFlow::Break(Err(e)) => Err(e),
            ControlFlow::Continue(()) => Ok(None),
        }
    }
}

/// Calls `visit` with the arc indices of every simple `from → to` path inside
/// `avail` that avoids `blocked` vertices, shortest paths first and
/// lexicographically by vertex sequence within a length. `from == to` yields
/// the empty path.
pub(crate) fn for_each_path<B>(
    d: &Digraph,
    avail: &ArcMask,
    from: usize,
    to: usize,
    blocked: &[bool],
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if from == to {
        return visit(&[]);
    }
    let n = d.order();
    // Distances to `to` in the available arcs, avoiding blocked vertices.
    let mut dist = vec![usize::MAX; n];
    dist[to] = 0;
    let mut queue = std::collections::VecDeque::from([to]);
    while let Some(v) = queue.pop_front() {
        for &a in d.in_arcs(v) {
            let u = d.arc(a).0;
            if avail.get(a) && !blocked[u] && dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    if dist[from] == usize::MAX {
        return ControlFlow::Continue(());
    }
    let usable = (0..n).filter(|&v| !blocked[v]).count();
    let mut on_path = blocked.to_vec();
    on_path[from] = true;
    let mut arcs = Vec::with_capacity(n);
    for len in dist[from]..usable {
        walk(d, avail, from, to, len, &dist, &mut on_path, &mut arcs, visit)?;
    }
    ControlFlow::Continue(())
}

#[allow(clippy::too_many_arguments)]
fn walk<B>(
    d: &Digraph,
    avail: &ArcMask,
    v: usize,
    to: usize,
    remaining: usize,
    dist: &[usize],
    on_path: &mut [bool],
    arcs: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if v == to {
        return if remaining == 0 {
            visit(arcs)
        } else {
            ControlFlow::Continue(())
        };
    }
    for &a in d.out_arcs(v) {
        let w = d.arc(a).1;
        if !avail.get(a) || on_path[w] || dist[w] > remaining - 1 {
            continue;
        }
        on_path[w] = true;
        arcs.push(a);
        let flow = walk(d, avail, w, to, remaining - 1, dist, on_path, arcs, visit);
        arcs.pop();
        on_path[w] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_digraph, directed_cycle};

    fn collect_paths(d: &Digraph, from: usize, to: usize) -> Vec<Vec<usize>> {
        let avail = ArcMask::full(d.arc_count());
        let mut out = Vec::new();
        let _ = for_each_path::<()>(d, &avail, from, to, &vec![false; d.order()], &mut |p| {
            let mut verts = vec![from];
            verts.extend(p.iter().map(|&a| d.arc(a).1));
            out.push(verts);
            ControlFlow::Continue(())
        });
        out
    }

    #[test]
    fn paths_shortest_first_then_lexicographic() {
        let k4 = complete_digraph(4).unwrap();
        let paths = collect_paths(&k4, 0, 3);
        assert_eq!(
            paths,
            vec![
                vec![0, 3],
                vec![0, 1, 3],
                vec![0, 2, 3],
                vec![0, 1, 2, 3],
                vec![0, 2, 1, 3],
            ]
        );
        let c5 = directed_cycle(5).unwrap();
        assert_eq!(collect_paths(&c5, 3, 1), vec![vec![3, 4, 0, 1]]);
    }

    #[test]
    fn packs_complete_digraph() {
        let k4 = complete_digraph(4).unwrap();
        let mut p = Packer::new(&k4, 0, 1, None);
        assert_eq!(p.find(3).unwrap().map(|m| m.len()), Some(3));
        assert_eq!(p.find(4).unwrap(), None);
    }

    #[test]
    fn budget_is_reported() {
        let k4 = complete_digraph(4).unwrap();
        let mut p = Packer::new(&k4, 0, 1, Some(0));
        assert_eq!(p.find(2), Err(Exhausted));
    }
}
