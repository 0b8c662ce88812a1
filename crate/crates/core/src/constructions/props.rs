//! Explicit certificate families for products of a directed cycle `C⃗ₙ`
//! (rows, first factor) with `C⃗ₘ`, `↔Cₘ`, `↔Tₘ` or `↔Kₘ` (columns).
//!
//! The explicit routings handle seeds in general position, i.e. in distinct
//! rows and distinct columns. Other positions fall back to the exact solver.

use serde::{Deserialize, Serialize};

use crate::digraph::{ArcSet, Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::generators::{bidirected_cycle, complete_digraph, directed_cycle, tree, TreeShape};
use crate::product::ProductDigraph;
use crate::sssc::{lambda_s_at_least, verify_certificate, CertificateFamily, Feasibility, SeedPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassPair {
    /// `C⃗ₙ □ C⃗ₘ`, two members.
    CycleCycle,
    /// `C⃗ₙ □ ↔Cₘ`, three members.
    CycleBicycle,
    /// `C⃗ₙ □ ↔Tₘ`, two members.
    CycleTree(TreeShape),
    /// `C⃗ₙ □ ↔Kₘ`, `m` members.
    CycleComplete,
}

impl ClassPair {
    /// Number of members the family must have.
    pub fn cardinality(&self, m: usize) -> usize {
        match self {
            ClassPair::CycleCycle | ClassPair::CycleTree(_) => 2,
            ClassPair::CycleBicycle => 3,
            ClassPair::CycleComplete => m,
        }
    }

    fn min_m(&self) -> usize {
        match self {
            ClassPair::CycleCycle | ClassPair::CycleBicycle => 3,
            ClassPair::CycleTree(_) | ClassPair::CycleComplete => 2,
        }
    }

    fn second_factor(&self, m: usize) -> Result<Digraph> {
        match self {
            ClassPair::CycleCycle => directed_cycle(m),
            ClassPair::CycleBicycle => bidirected_cycle(m),
            ClassPair::CycleTree(shape) => Ok(tree(*shape, m)?.biorient()),
            ClassPair::CycleComplete => complete_digraph(m),
        }
    }

    /// The product `C⃗ₙ □ X_m` these families live in.
    pub fn product(&self, n: usize, m: usize) -> Result<ProductDigraph> {
        if n < 3 {
            return Err(Error::OrderTooSmall {
                what: "directed cycle factor",
                min: 3,
                got: n,
            });
        }
        if m < self.min_m() {
            return Err(Error::OrderTooSmall {
                what: "second factor",
                min: self.min_m(),
                got: m,
            });
        }
        Ok(ProductDigraph::new(&directed_cycle(n)?, &self.second_factor(m)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Routing {
    /// Staircase walks for `x = (0,0)`, `y = (1,1)`.
    Staircase,
    /// Closed-form routing for any seeds in distinct rows and columns.
    GeneralPosition,
    /// Seeds share a row or column; members found by the exact solver.
    SolverDerived,
}

#[derive(Debug, Clone)]
pub struct PropFamily {
    pub family: CertificateFamily,
    pub routing: Routing,
    pub product: ProductDigraph,
}

/// Builds and verifies the proposition family for `class` at orders `n`, `m`.
pub fn prop_certificates(class: ClassPair, n: usize, m: usize, s: SeedPair) -> Result<PropFamily> {
    let p = class.product(n, m)?;
    if s.y() >= n * m {
        return Err(Error::VertexOutOfRange {
            vertex: s.y(),
            order: n * m,
        });
    }
    let want = class.cardinality(m);
    let (a, b) = p.decode(s.x());
    let (c, d) = p.decode(s.y());

    let (members, routing) = if a == c || b == d {
        match lambda_s_at_least(p.digraph(), s, want, None)? {
            Feasibility::Yes(w) => (w.members, Routing::SolverDerived),
            _ => {
                return Err(Error::UnsupportedPosition(format!(
                    "solver found fewer than {want} members for {s}"
                )))
            }
        }
    } else {
        let routes = Routes { p: &p, n };
        let staircase = (a, b, c, d) == (0, 0, 1, 1) && class == ClassPair::CycleCycle && n >= 4;
        if staircase {
            (routes.cycle_cycle_staircase(m), Routing::Staircase)
        } else {
            let members = match class {
                ClassPair::CycleCycle => {
                    let fwd = |from: usize, to: usize| cyclic_walk(from, to, m);
                    routes.rectangles((a, b), (c, d), fwd(b, d), fwd(d, b))
                }
                ClassPair::CycleTree(shape) => {
                    let t = tree(shape, m)?;
                    let there = tree_path(&t, b, d);
                    let back = there.iter().rev().copied().collect();
                    routes.rectangles((a, b), (c, d), there, back)
                }
                ClassPair::CycleBicycle => routes.bicycle((a, b), (c, d), m),
                ClassPair::CycleComplete => routes.complete((a, b), (c, d), m),
            };
            (members, Routing::GeneralPosition)
        }
    };

    let family = CertificateFamily::new(s, members);
    let report = verify_certificate(p.digraph(), &family);
    if !report.is_valid() {
        return Err(Error::Construction(report.to_string()));
    }
    if family.len() != want {
        return Err(Error::Construction(format!(
            "expected {want} members, built {}",
            family.len()
        )));
    }
    Ok(PropFamily {
        family,
        routing,
        product: p,
    })
}

/// Vertex sequence `from, from+1, …, to` around an `m`-cycle.
fn cyclic_walk(from: usize, to: usize, m: usize) -> Vec<usize> {
    let mut walk = vec![from];
    let mut v = from;
    while v != to {
        v = (v + 1) % m;
        walk.push(v);
    }
    walk
}

/// Vertex sequence of the unique tree path from `from` to `to`.
fn tree_path(t: &UndirectedGraph, from: usize, to: usize) -> Vec<usize> {
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for &(p, q) in t.edges() {
            for (s, w) in [(p, q), (q, p)] {
                if s == u && parent[w] == usize::MAX {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    path
}

struct Routes<'a> {
    p: &'a ProductDigraph,
    n: usize,
}

impl Routes<'_> {
    /// Arcs along a row `i` through the given column sequence.
    fn row(&self, i: usize, cols: &[usize]) -> ArcSet {
        cols.windows(2)
            .map(|w| (self.p.encode(i, w[0]), self.p.encode(i, w[1])))
            .collect()
    }

    /// Both orientations of a row path.
    fn row_both(&self, i: usize, cols: &[usize]) -> ArcSet {
        let rev: Vec<usize> = cols.iter().rev().copied().collect();
        self.row(i, cols).union(&self.row(i, &rev))
    }

    /// Arcs down column `j` from row `from` to row `to`, following `C⃗ₙ`.
    fn column(&self, j: usize, from: usize, to: usize) -> ArcSet {
        let rows = cyclic_walk(from, to, self.n);
        rows.windows(2)
            .map(|w| (self.p.encode(w[0], j), self.p.encode(w[1], j)))
            .collect()
    }

    fn full_column(&self, j: usize) -> ArcSet {
        (0..self.n)
            .map(|i| (self.p.encode(i, j), self.p.encode((i + 1) % self.n, j)))
            .collect()
    }

    fn walk(&self, cells: &[(usize, usize)]) -> ArcSet {
        cells
            .windows(2)
            .map(|w| (self.p.encode(w[0].0, w[0].1), self.p.encode(w[1].0, w[1].1)))
            .collect()
    }

    /// Two closed walks circling the "rectangle" spanned by the seeds in
    /// opposite senses: `x` → column `b` → row `c` → `y` → column `d` → row
    /// `a` → `x`, and `x` → row `a` → column `d` → `y` → row `c` → column
    /// `b` → `x`. Row routes `there` (`b ⇒ d`) and `back` (`d ⇒ b`) must be
    /// arc-disjoint.
    fn rectangles(
        &self,
        (a, b): (usize, usize),
        (c, d): (usize, usize),
        there: Vec<usize>,
        back: Vec<usize>,
    ) -> Vec<ArcSet> {
        let mut first = self.column(b, a, c);
        first.extend(&self.row(c, &there));
        first.extend(&self.column(d, c, a));
        first.extend(&self.row(a, &back));
        let mut second = self.row(a, &there);
        second.extend(&self.column(d, a, c));
        second.extend(&self.row(c, &back));
        second.extend(&self.column(b, c, a));
        vec![first, second]
    }

    /// The drawn `C⃗ₙ □ C⃗ₘ` routing for `x = (0,0)`, `y = (1,1)`; needs
    /// `n ≥ 4`.
    fn cycle_cycle_staircase(&self, m: usize) -> Vec<ArcSet> {
        let n = self.n;
        let mut first = vec![(0, 0), (0, 1)];
        first.extend((1..m).map(|j| (1, j)));
        first.extend((2..n).map(|i| (i, m - 1)));
        first.extend([(0, m - 1), (0, 0)]);
        let mut second = vec![(0, 0), (1, 0)];
        second.extend((1..n - 1).map(|i| (i, 1)));
        second.extend((2..m).map(|j| (n - 2, j)));
        second.extend([(n - 2, 0), (n - 1, 0), (0, 0)]);
        vec![self.walk(&first), self.walk(&second)]
    }

    /// Three members for `C⃗ₙ □ ↔Cₘ`: the full columns through `b` and `d`,
    /// and a third column `e` next to `b` on the side of the `m`-cycle with
    /// more room between `b` and `d`.
    fn bicycle(&self, (a, b): (usize, usize), (c, d): (usize, usize), m: usize) -> Vec<ArcSet> {
        let up = cyclic_walk(b, d, m);
        let mut down = cyclic_walk(d, b, m);
        down.reverse();
        let (near, far) = if up.len() > down.len() { (down, up) } else { (up, down) };
        let e = far[1];
        let e_to_d = &far[1..];

        let mut col_d = self.full_column(d);
        col_d.extend(&self.row_both(a, &near));
        let mut col_e = self.full_column(e);
        col_e.extend(&self.row_both(a, &far[..2]));
        col_e.extend(&self.row_both(c, e_to_d));
        let mut col_b = self.full_column(b);
        col_b.extend(&self.row_both(c, &near));
        vec![col_d, col_e, col_b]
    }

    /// `m` members for `C⃗ₙ □ ↔Kₘ`, one per column.
    fn complete(&self, (a, b): (usize, usize), (c, d): (usize, usize), m: usize) -> Vec<ArcSet> {
        let mut col_d = self.full_column(d);
        col_d.extend(&self.row_both(a, &[b, d]));
        let mut col_b = self.full_column(b);
        col_b.extend(&self.row_both(c, &[b, d]));
        let mut members = vec![col_d, col_b];
        for e in (0..m).filter(|&e| e != b && e != d) {
            let mut col_e = self.full_column(e);
            col_e.extend(&self.row_both(a, &[b, e]));
            col_e.extend(&self.row_both(c, &[e, d]));
            members.push(col_e);
        }
        members
    }
}
