//! Lifting factor certificates to a certificate family in `G □ H`.
//!
//! For `S = {x, y}` with `x = (a, b)` and `y = (c, d)`, every member is
//! assembled from `{·,·}`-strong subgraphs of the factors placed into fibers:
//! a factor subgraph through `x`'s fiber, a connector in a parallel fiber
//! entered at a distinct out-neighbour of `x`, and the corresponding copy of
//! the first subgraph reaching `y`.

use serde::{Deserialize, Serialize};

use crate::digraph::{ArcSet, Digraph};
use crate::error::{Error, Result};
use crate::product::ProductDigraph;
use crate::sssc::{lambda_2, lambda_s_exact, verify_certificate, CertificateFamily, Lambda2Mode, SeedPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftCase {
    /// `x` and `y` in the same `H`-fiber (same first coordinate).
    SameHFiber,
    /// `x` and `y` in the same `G`-fiber (same second coordinate).
    SameGFiber,
    /// Distinct fibers, no chosen out-neighbour hits `y`'s row or column.
    NoAlignedNeighbour,
    /// Exactly one side picked the out-neighbour aligned with `y`.
    OneSideAligned,
    /// Both sides did; one member of each side is rerouted.
    BothSidesAligned,
}

#[derive(Debug, Clone)]
pub struct LiftedFamily {
    pub family: CertificateFamily,
    pub case: LiftCase,
    pub lambda2_g: usize,
    pub lambda2_h: usize,
    /// Whether a conflicting member had to be dropped.
    pub dropped_member: bool,
}

impl LiftedFamily {
    pub fn lower_bound(&self) -> usize {
        (self.lambda2_g + self.lambda2_h).saturating_sub(1)
    }
}

fn require_factor(d: &Digraph, name: &'static str) -> Result<()> {
    if d.order() < 2 {
        return Err(Error::OrderTooSmall {
            what: name,
            min: 2,
            got: d.order(),
        });
    }
    if !d.is_strong() {
        return Err(Error::NotStrong(name));
    }
    Ok(())
}

/// Builds a verified family of at least `λ₂(G) + λ₂(H) − 1` arc-disjoint
/// `S`-strong subgraphs of `G □ H`.
pub fn lift_certificates(g: &Digraph, h: &Digraph, s: SeedPair) -> Result<LiftedFamily> {
    require_factor(g, "factor G")?;
    require_factor(h, "factor H")?;
    let l2g = lambda_2(g, Lambda2Mode::Exhaustive)?.value;
    let l2h = lambda_2(h, Lambda2Mode::Exhaustive)?.value;
    lift_with(&ProductDigraph::new(g, h), l2g, l2h, s)
}

/// As [`lift_certificates`], with the factor values `λ₂(G)`, `λ₂(H)` supplied.
pub fn lift_with(p: &ProductDigraph, l2g: usize, l2h: usize, s: SeedPair) -> Result<LiftedFamily> {
    let nm = p.digraph().order();
    if s.y() >= nm {
        return Err(Error::VertexOutOfRange {
            vertex: s.y(),
            order: nm,
        });
    }
    let (a, b) = p.decode(s.x());
    let (c, d) = p.decode(s.y());
    let (members, case, dropped) = if a == c {
        (same_row(p, l2g, l2h, a, b, d)?, LiftCase::SameHFiber, false)
    } else if b == d {
        (same_column(p, l2g, l2h, a, c, b)?, LiftCase::SameGFiber, false)
    } else {
        distinct_fibers(p, l2g, l2h, (a, b), (c, d))?
    };
    let family = CertificateFamily::new(s, members);
    let report = verify_certificate(p.digraph(), &family);
    if !report.is_valid() {
        return Err(Error::Construction(report.to_string()));
    }
    let lifted = LiftedFamily {
        family,
        case,
        lambda2_g: l2g,
        lambda2_h: l2h,
        dropped_member: dropped,
    };
    if lifted.family.len() < lifted.lower_bound() {
        return Err(Error::Construction(format!(
            "lifted family has {} members, expected at least {}",
            lifted.family.len(),
            lifted.lower_bound()
        )));
    }
    Ok(lifted)
}

/// Arc-disjoint `{u, v}`-strong subgraphs of a factor, at least `want` of
/// them when `λ_{u,v}` allows.
fn factor_certificate(f: &Digraph, u: usize, v: usize, want: usize) -> Result<Vec<ArcSet>> {
    let r = lambda_s_exact(f, SeedPair::new(u, v)?, None)?;
    if r.value < want {
        return Err(Error::Construction(format!(
            "factor pair {{{u}, {v}}} packs only {} < {want} subgraphs",
            r.value
        )));
    }
    Ok(r.witness.members)
}

/// Lexicographically least out-neighbour of `v` inside each member. Members
/// are arc-disjoint, so these are distinct.
fn out_neighbors(members: &[ArcSet], v: usize) -> Vec<usize> {
    members
        .iter()
        .map(|m| {
            m.iter()
                .filter(|&&(t, _)| t == v)
                .map(|&(_, w)| w)
                .min()
                .expect("a strong member through v leaves v")
        })
        .collect()
}

fn other_vertex(order: usize, v: usize) -> usize {
    if v == 0 { 1 } else { 0 }.min(order - 1)
}

fn same_row(p: &ProductDigraph, l2g: usize, l2h: usize, a: usize, b: usize, d: usize) -> Result<Vec<ArcSet>> {
    let h_cert = factor_certificate(p.h(), b, d, l2h)?;
    let partner = other_vertex(p.n(), a);
    let g_cert = factor_certificate(p.g(), a, partner, l2g)?;
    let g_used = &g_cert[..l2g];
    let mut members: Vec<ArcSet> = h_cert[..l2h].iter().map(|m| p.embed_h(m, a)).collect();
    for (di, t) in g_used.iter().zip(out_neighbors(g_used, a)) {
        let mut m = p.embed_g(di, b);
        m.extend(&p.embed_h(&h_cert[0], t));
        m.extend(&p.embed_g(di, d));
        members.push(m);
    }
    Ok(members)
}

fn same_column(p: &ProductDigraph, l2g: usize, l2h: usize, a: usize, c: usize, b: usize) -> Result<Vec<ArcSet>> {
    let g_cert = factor_certificate(p.g(), a, c, l2g)?;
    let partner = other_vertex(p.m(), b);
    let h_cert = factor_certificate(p.h(), b, partner, l2h)?;
    let h_used = &h_cert[..l2h];
    let mut members: Vec<ArcSet> = g_cert[..l2g].iter().map(|m| p.embed_g(m, b)).collect();
    for (dj, t) in h_used.iter().zip(out_neighbors(h_used, b)) {
        let mut m = p.embed_h(dj, a);
        m.extend(&p.embed_g(&g_cert[0], t));
        m.extend(&p.embed_h(dj, c));
        members.push(m);
    }
    Ok(members)
}

fn distinct_fibers(
    p: &ProductDigraph,
    l2g: usize,
    l2h: usize,
    (a, b): (usize, usize),
    (c, d): (usize, usize),
) -> Result<(Vec<ArcSet>, LiftCase, bool)> {
    let g_cert = factor_certificate(p.g(), a, c, l2g)?;
    let h_cert = factor_certificate(p.h(), b, d, l2h)?;
    let (g_used, g_spare) = g_cert.split_at(l2g);
    let (h_used, h_spare) = h_cert.split_at(l2h);
    let tg = out_neighbors(g_used, a);
    let th = out_neighbors(h_used, b);
    let hit_g = tg.iter().position(|&t| t == c);
    let hit_h = th.iter().position(|&t| t == d);

    // Connector rows/columns default to the first factor member; a connector
    // in y's own row (column) prefers a spare member that no H-side (G-side)
    // member occupies.
    let h_conn = |row: usize| -> &ArcSet {
        if row == c {
            h_spare.first().unwrap_or(&h_used[0])
        } else {
            &h_used[0]
        }
    };
    let g_conn = |col: usize| -> &ArcSet {
        if col == d {
            g_spare.first().unwrap_or(&g_used[0])
        } else {
            &g_used[0]
        }
    };
    let g_member = |i: usize| {
        let mut m = p.embed_g(&g_used[i], b);
        m.extend(&p.embed_h(h_conn(tg[i]), tg[i]));
        m.extend(&p.embed_g(&g_used[i], d));
        m
    };
    let h_member = |j: usize| {
        let mut m = p.embed_h(&h_used[j], a);
        m.extend(&p.embed_g(g_conn(th[j]), th[j]));
        m.extend(&p.embed_h(&h_used[j], c));
        m
    };

    let mut g_members: Vec<ArcSet> = (0..l2g).map(g_member).collect();
    let mut h_members: Vec<ArcSet> = (0..l2h).map(h_member).collect();
    let case = match (hit_g, hit_h) {
        (None, None) => LiftCase::NoAlignedNeighbour,
        (Some(_), None) | (None, Some(_)) => LiftCase::OneSideAligned,
        (Some(i), Some(j)) => {
            // x's fiber piece plus a connector along y's row, and x's other
            // fiber piece plus the copy of the first one through y's column.
            let mut bar = p.embed_g(&g_used[i], b);
            bar.extend(&p.embed_h(&h_used[j], c));
            let mut bar_prime = p.embed_h(&h_used[j], a);
            bar_prime.extend(&p.embed_g(&g_used[i], d));
            g_members[i] = bar;
            h_members[j] = bar_prime;
            LiftCase::BothSidesAligned
        }
    };
    let mut members = g_members;
    members.extend(h_members);

    let mut dropped = false;
    if case == LiftCase::OneSideAligned {
        let family = CertificateFamily::new(SeedPair::new(p.encode(a, b), p.encode(c, d))?, members.clone());
        if !verify_certificate(p.digraph(), &family).is_valid() {
            let victim = match (hit_g, hit_h) {
                (Some(i), _) => i,
                (_, Some(j)) => l2g + j,
                _ => unreachable!(),
            };
            members.remove(victim);
            dropped = true;
        }
    }
    Ok((members, case, dropped))
}
