//! Cartesian products `G □ H` and fiber bookkeeping.
//!
//! Vertex `(i, j)` with `i ∈ V(G)` and `j ∈ V(H)` gets the flat index
//! `i·m + j`, where `m = |H|`. The `G`-fiber `G(v_j)` is the column of
//! vertices with second coordinate `j`; the `H`-fiber `H(u_i)` is the row with
//! first coordinate `i`.

use crate::digraph::{ArcPair, ArcSet, Digraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Copies of `G`: second coordinate fixed.
    G,
    /// Copies of `H`: first coordinate fixed.
    H,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberRef {
    pub axis: Axis,
    /// `j` for `G(v_j)`, `i` for `H(u_i)`.
    pub index: usize,
    /// Flat product vertices in factor order.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ProductDigraph {
    product: Digraph,
    g: Digraph,
    h: Digraph,
}

impl ProductDigraph {
    /// Builds `G □ H`.
    pub fn new(g: &Digraph, h: &Digraph) -> Self {
        let (n, m) = (g.order(), h.order());
        let enc = |i: usize, j: usize| i * m + j;
        let mut arcs = Vec::with_capacity(m * g.arc_count() + n * h.arc_count());
        for &(a, b) in g.arcs() {
            arcs.extend((0..m).map(|j| (enc(a, j), enc(b, j))));
        }
        for &(a, b) in h.arcs() {
            arcs.extend((0..n).map(|i| (enc(i, a), enc(i, b))));
        }
        let product = Digraph::from_arc_list(n * m, arcs).expect("product of valid digraphs");
        ProductDigraph {
            product,
            g: g.clone(),
            h: h.clone(),
        }
    }

    pub fn digraph(&self) -> &Digraph {
        &self.product
    }

    pub fn into_digraph(self) -> Digraph {
        self.product
    }

    pub fn g(&self) -> &Digraph {
        &self.g
    }

    pub fn h(&self) -> &Digraph {
        &self.h
    }

    /// Order of `G`.
    pub fn n(&self) -> usize {
        self.g.order()
    }

    /// Order of `H`.
    pub fn m(&self) -> usize {
        self.h.order()
    }

    pub fn encode(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n() && j < self.m());
        i * self.m() + j
    }

    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v / self.m(), v % self.m())
    }

    /// `G(v_j)`.
    pub fn g_fiber(&self, j: usize) -> Result<FiberRef> {
        if j >= self.m() {
            return Err(Error::VertexOutOfRange {
                vertex: j,
                order: self.m(),
            });
        }
        Ok(FiberRef {
            axis: Axis::G,
            index: j,
            vertices: (0..self.n()).map(|i| self.encode(i, j)).collect(),
        })
    }

    /// `H(u_i)`.
    pub fn h_fiber(&self, i: usize) -> Result<FiberRef> {
        if i >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                order: self.n(),
            });
        }
        Ok(FiberRef {
            axis: Axis::H,
            index: i,
            vertices: (0..self.m()).map(|j| self.encode(i, j)).collect(),
        })
    }

    /// Places arcs of `G` into the column `G(v_j)`.
    pub fn embed_g(&self, arcs: &ArcSet, j: usize) -> ArcSet {
        arcs.iter()
            .map(|&(a, b)| (self.encode(a, j), self.encode(b, j)))
            .collect()
    }

    /// Places arcs of `H` into the row `H(u_i)`.
    pub fn embed_h(&self, arcs: &ArcSet, i: usize) -> ArcSet {
        arcs.iter()
            .map(|&(a, b)| (self.encode(i, a), self.encode(i, b)))
            .collect()
    }

    /// The fiber holding a product arc.
    pub fn fiber_of_arc(&self, (u, v): ArcPair) -> (Axis, usize) {
        let ((i1, j1), (i2, j2)) = (self.decode(u), self.decode(v));
        if j1 == j2 {
            debug_assert_ne!(i1, i2);
            (Axis::G, j1)
        } else {
            debug_assert_eq!(i1, i2);
            (Axis::H, i1)
        }
    }

    /// Maps an arc set lying inside one fiber onto the corresponding arcs of
    /// `target`, a fiber of the same axis.
    pub fn translate_subgraph(&self, arcs: &ArcSet, target: &FiberRef) -> Result<ArcSet> {
        let mut source = None;
        for &arc in arcs {
            let fiber = self.fiber_of_arc(arc);
            if fiber.0 != target.axis || source.is_some_and(|s| s != fiber) {
                return Err(Error::NotInOneFiber);
            }
            source = Some(fiber);
        }
        Ok(arcs
            .iter()
            .map(|&(u, v)| {
                let ((i1, j1), (i2, j2)) = (self.decode(u), self.decode(v));
                match target.axis {
                    Axis::G => (self.encode(i1, target.index), self.encode(i2, target.index)),
                    Axis::H => (self.encode(target.index, j1), self.encode(target.index, j2)),
                }
            })
            .collect())
    }
}

/// `G □ H` as a bare digraph.
pub fn cartesian_product(g: &Digraph, h: &Digraph) -> ProductDigraph {
    ProductDigraph::new(g, h)
}
