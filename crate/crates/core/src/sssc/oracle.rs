//! Brute-force reference computations of `λ_S(D)` for small digraphs.

use std::collections::{BTreeSet, HashMap};

use crate::digraph::{ArcSet, Digraph};
use crate::error::{Error, Result};

use super::SeedPair;

/// Largest arc count accepted by [`lambda_s_oracle_subsets`].
pub const SUBSET_ORACLE_ARC_CAP: usize = 16;

/// Largest number of simple paths per direction accepted by
/// [`lambda_s_oracle_paths`].
pub const PATH_ORACLE_CAP: usize = 100_000;

/// `λ_S(D)` for any seed set with at least two vertices, by enumerating every
/// arc subset, keeping the inclusion-minimal `S`-strong ones, and finding a
/// maximum disjoint packing by exhaustive recursion.
pub fn lambda_s_oracle_subsets(d: &Digraph, seeds: &[usize]) -> Result<usize> {
    let distinct: BTreeSet<usize> = seeds.iter().copied().collect();
    if distinct.len() < 2 {
        return Err(Error::SeedTooSmall { min: 2 });
    }
    if let Some(&v) = distinct.iter().find(|&&v| v >= d.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: d.order(),
        });
    }
    let m = d.arc_count();
    if m > SUBSET_ORACLE_ARC_CAP {
        return Err(Error::ArcCapExceeded {
            cap: SUBSET_ORACLE_ARC_CAP,
            got: m,
        });
    }
    let seeds: Vec<usize> = distinct.into_iter().collect();
    let mut strong: Vec<u32> = (1u32..1 << m)
        .filter(|&mask| {
            let set: ArcSet = (0..m).filter(|a| mask >> a & 1 == 1).map(|a| d.arc(a)).collect();
            set.is_strong_spanning(&seeds)
        })
        .collect();
    strong.sort_by_key(|s| s.count_ones());
    let mut minimal: Vec<u32> = Vec::new();
    for s in strong {
        if !minimal.iter().any(|&k| k & !s == 0) {
            minimal.push(s);
        }
    }

    // Either the lowest available arc is unused, or exactly one member
    // contains it.
    fn best(avail: u32, minimal: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if avail == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&avail) {
            return v;
        }
        let low = avail & avail.wrapping_neg();
        let mut value = best(avail & !low, minimal, memo);
        for &c in minimal {
            if c & low != 0 && c & avail == c {
                value = value.max(1 + best(avail & !c, minimal, memo));
            }
        }
        memo.insert(avail, value);
        value
    }
    let full = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    Ok(best(full, &minimal, &mut HashMap::new()))
}

fn simple_paths(d: &Digraph, from: usize, to: usize, cap: usize) -> Result<Vec<BTreeSet<usize>>> {
    fn dfs(
        d: &Digraph,
        v: usize,
        to: usize,
        visited: &mut Vec<bool>,
        arcs: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<usize>>,
        cap: usize,
    ) -> Result<()> {
        if v == to {
            if out.len() == cap {
                return Err(Error::PathCapExceeded(cap));
            }
            out.push(arcs.iter().copied().collect());
            return Ok(());
        }
        for &a in d.out_arcs(v) {
            let w = d.arc(a).1;
            if !visited[w] {
                visited[w] = true;
                arcs.push(a);
                dfs(d, w, to, visited, arcs, out, cap)?;
                arcs.pop();
                visited[w] = false;
            }
        }
        Ok(())
    }
    let mut visited = vec![false; d.order()];
    visited[from] = true;
    let mut out = Vec::new();
    dfs(d, from, to, &mut visited, &mut Vec::new(), &mut out, cap)?;
    Ok(out)
}

/// `λ_S(D)` for `S = {x, y}` from the union of every simple `x → y` path with
/// every simple `y → x` path, followed by an exhaustive maximum packing of
/// those unions.
pub fn lambda_s_oracle_paths(d: &Digraph, s: SeedPair) -> Result<usize> {
    s.check_range(d)?;
    let forward = simple_paths(d, s.x(), s.y(), PATH_ORACLE_CAP)?;
    let backward = simple_paths(d, s.y(), s.x(), PATH_ORACLE_CAP)?;
    let mut unions: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for p in &forward {
        for q in &backward {
            unions.insert(p.union(q).copied().collect());
        }
    }
    let mut candidates: Vec<BTreeSet<usize>> = unions.into_iter().collect();
    candidates.sort_by_key(|c| c.len());
    let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
    for c in candidates {
        if !minimal.iter().any(|k| k.is_subset(&c)) {
            minimal.push(c);
        }
    }

    // Classic set-packing recursion over candidate indices, with a
    // remaining-candidate bound.
    fn extend(start: usize, used: &mut BTreeSet<usize>, count: usize, minimal: &[BTreeSet<usize>], best: &mut usize) {
        *best = (*best).max(count);
        for i in start..minimal.len() {
            if count + (minimal.len() - i) <= *best {
                return;
            }
            if minimal[i].is_disjoint(used) {
                used.extend(minimal[i].iter().copied());
                extend(i + 1, used, count + 1, minimal, best);
                for a in &minimal[i] {
                    used.remove(a);
                }
            }
        }
    }
    let mut best = 0;
    extend(0, &mut BTreeSet::new(), 0, &minimal, &mut best);
    Ok(best)
}
