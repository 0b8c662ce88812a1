//! Strong subgraph arc-connectivity: exact `λ_S(D)` for two-vertex seed
//! sets, `λ₂(D)`, brute-force oracles and the certificate verifier.

pub(crate) mod mask;
pub mod oracle;
pub(crate) mod search;

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digraph::{ArcPair, ArcSet, Digraph};
use crate::error::{Error, Result};
use crate::flow::unit_flow_value;

use mask::ArcMask;
use search::{Exhausted, Packer};

pub use oracle::{lambda_s_oracle_paths, lambda_s_oracle_subsets};

/// The seed set `S = {x, y}`; stored with `x < y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeedPair {
    x: usize,
    y: usize,
}

impl SeedPair {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::SeedTooSmall { min: 2 });
        }
        Ok(SeedPair {
            x: a.min(b),
            y: a.max(b),
        })
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn as_slice(&self) -> [usize; 2] {
        [self.x, self.y]
    }

    fn check_range(&self, d: &Digraph) -> Result<()> {
        if self.y >= d.order() {
            return Err(Error::VertexOutOfRange {
                vertex: self.y,
                order: d.order(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SeedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.x, self.y)
    }
}

/// A list of arc sets claimed to be pairwise arc-disjoint `S`-strong
/// subgraphs. Members are checked by [`verify_certificate`], not on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFamily {
    pub seed: SeedPair,
    pub members: Vec<ArcSet>,
}

impl CertificateFamily {
    pub fn new(seed: SeedPair, members: Vec<ArcSet>) -> Self {
        CertificateFamily { seed, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberCheck {
    pub strong: bool,
    /// Seed vertices absent from the member's vertex set.
    pub missing_seeds: Vec<usize>,
    /// Member arcs that are not arcs of the host.
    pub foreign_arcs: Vec<ArcPair>,
}

impl MemberCheck {
    pub fn is_valid(&self) -> bool {
        self.strong && self.missing_seeds.is_empty() && self.foreign_arcs.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub members: Vec<MemberCheck>,
    /// `(i, j, shared arcs)` for every intersecting pair `i < j`.
    pub overlaps: Vec<(usize, usize, ArcSet)>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.overlaps.is_empty() && self.members.iter().all(MemberCheck::is_valid)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if m.is_valid() {
                continue;
            }
            write!(f, "member {i}:")?;
            if !m.strong {
                write!(f, " not strong;")?;
            }
            if !m.missing_seeds.is_empty() {
                write!(f, " missing seeds {:?};", m.missing_seeds)?;
            }
            if !m.foreign_arcs.is_empty() {
                write!(f, " foreign arcs {:?};", m.foreign_arcs)?;
            }
            writeln!(f)?;
        }
        for (i, j, shared) in &self.overlaps {
            writeln!(f, "members {i} and {j} share arcs {:?}", shared.to_vec())?;
        }
        Ok(())
    }
}

/// Checks every certificate invariant and reports each violation.
pub fn verify_certificate(d: &Digraph, cert: &CertificateFamily) -> VerificationReport {
    let seeds = cert.seed.as_slice();
    let members = cert
        .members
        .iter()
        .map(|m| {
            let verts = m.vertices();
            MemberCheck {
                strong: m.is_strong_spanning(&[]),
                missing_seeds: seeds.iter().copied().filter(|s| !verts.contains(s)).collect(),
                foreign_arcs: m.iter().copied().filter(|&(u, v)| !d.has_arc(u, v)).collect(),
            }
        })
        .collect();
    let mut overlaps = Vec::new();
    for i in 0..cert.members.len() {
        for j in i + 1..cert.members.len() {
            let shared = cert.members[i].intersection(&cert.members[j]);
            if !shared.is_empty() {
                overlaps.push((i, j, shared));
            }
        }
    }
    VerificationReport { members, overlaps }
}

/// Why the returned value cannot be improved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OptimalityProof {
    /// Matches `min(d⁺(x), d⁻(x), d⁺(y), d⁻(y))`.
    DegreeBound,
    /// Matches `min(λ(x→y), λ(y→x))`.
    LocalConnectivityBound,
    /// The search closed without finding one more member.
    ExhaustiveSearch,
    /// The node budget ran out; `value` is only a lower bound.
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct LambdaResult {
    /// `λ_S(D)` when exact, otherwise the best lower bound found.
    pub value: usize,
    /// Sound upper bound; equals `value` when exact.
    pub upper: usize,
    pub witness: CertificateFamily,
    pub proof: OptimalityProof,
    pub nodes: u64,
}

impl LambdaResult {
    pub fn is_exact(&self) -> bool {
        self.proof != OptimalityProof::BudgetExhausted
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UpperBounds {
    pub degree: usize,
    pub local: usize,
}

impl UpperBounds {
    pub fn value(&self) -> usize {
        self.degree.min(self.local)
    }
}

pub fn upper_bound_parts(d: &Digraph, s: SeedPair) -> Result<UpperBounds> {
    s.check_range(d)?;
    let (x, y) = (s.x, s.y);
    let degree = [d.out_degree(x), d.in_degree(x), d.out_degree(y), d.in_degree(y)]
        .into_iter()
        .min()
        .expect("nonempty");
    let all = |_: usize| true;
    let local = unit_flow_value(d, &all, x, y, degree).min(unit_flow_value(d, &all, y, x, degree));
    Ok(UpperBounds { degree, local })
}

/// `min(d⁺(x), d⁻(x), d⁺(y), d⁻(y), λ(x→y), λ(y→x))`.
pub fn lambda_s_upper_bounds(d: &Digraph, s: SeedPair) -> Result<usize> {
    Ok(upper_bound_parts(d, s)?.value())
}

fn to_arcset(d: &Digraph, m: &ArcMask) -> ArcSet {
    m.ones().map(|a| d.arc(a)).collect()
}

fn family(d: &Digraph, s: SeedPair, members: &[ArcMask]) -> CertificateFamily {
    let mut sets: Vec<ArcSet> = members.iter().map(|m| to_arcset(d, m)).collect();
    sets.sort();
    CertificateFamily::new(s, sets)
}

/// Outcome of asking whether `λ_S(D) ≥ k`.
#[derive(Debug, Clone)]
pub enum Feasibility {
    Yes(CertificateFamily),
    No,
    Unknown,
}

/// Decides `λ_S(D) ≥ k`, returning a witness of exactly `k` members when it
/// holds.
pub fn lambda_s_at_least(d: &Digraph, s: SeedPair, k: usize, budget: Option<u64>) -> Result<Feasibility> {
    if k > lambda_s_upper_bounds(d, s)? {
        return Ok(Feasibility::No);
    }
    Ok(match Packer::new(d, s.x, s.y, budget).find(k) {
        Ok(Some(members)) => Feasibility::Yes(family(d, s, &members)),
        Ok(None) => Feasibility::No,
        Err(Exhausted) => Feasibility::Unknown,
    })
}

/// Exact `λ_S(D)` for `S = {x, y}` with a verifying witness.
///
/// Packs `1, 2, …` members until either the upper bound is reached or the
/// search proves the next size infeasible. With a node `budget` the search may
/// stop early; the result then carries the best lower bound and is flagged.
pub fn lambda_s_exact(d: &Digraph, s: SeedPair, budget: Option<u64>) -> Result<LambdaResult> {
    let bounds = upper_bound_parts(d, s)?;
    let ub = bounds.value();
    let mut packer = Packer::new(d, s.x, s.y, budget);
    let mut best: Vec<ArcMask> = Vec::new();
    let mut proof = if bounds.degree <= bounds.local {
        OptimalityProof::DegreeBound
    } else {
        OptimalityProof::LocalConnectivityBound
    };
    for k in best.len() + 1..=ub {
        match packer.find(k) {
            Ok(Some(members)) => best = members,
            Ok(None) => {
                proof = OptimalityProof::ExhaustiveSearch;
                break;
            }
            Err(Exhausted) => {
                proof = OptimalityProof::BudgetExhausted;
                break;
            }
        }
    }
    let value = best.len();
    Ok(LambdaResult {
        value,
        upper: if proof == OptimalityProof::BudgetExhausted {
            ub
        } else {
            value
        },
        witness: family(d, s, &best),
        proof,
        nodes: packer.nodes(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lambda2Mode {
    Exhaustive,
    /// Only `count` seed pairs drawn with `seed`; the value is an upper bound.
    Sampled {
        count: usize,
        seed: u64,
    },
}

#[derive(Debug, Clone)]
pub struct Lambda2Result {
    pub value: usize,
    pub argmin: SeedPair,
    pub witness: CertificateFamily,
    /// True when only a sample of seed pairs was examined.
    pub sampled: bool,
}

struct PairState {
    pair: SeedPair,
    ub: usize,
    /// Known `λ_S ≥ lower`, with a witness of exactly `lower` members.
    lower: usize,
    exact: bool,
    witness: Option<CertificateFamily>,
}

/// `λ₂(D)`: the minimum of `λ_S(D)` over seed pairs, with the
/// lexicographically least minimizing pair and its witness.
///
/// Pairs are first screened against the smallest per-pair upper bound; only
/// pairs that cannot reach the running minimum are solved exactly.
pub fn lambda_2(d: &Digraph, mode: Lambda2Mode) -> Result<Lambda2Result> {
    if d.order() < 2 {
        return Err(Error::OrderTooSmall {
            what: "lambda_2",
            min: 2,
            got: d.order(),
        });
    }
    let n = d.order();
    let mut pairs: Vec<SeedPair> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| SeedPair { x, y }))
        .collect();
    let sampled = match mode {
        Lambda2Mode::Exhaustive => false,
        Lambda2Mode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            pairs.shuffle(&mut rng);
            pairs.truncate(count.max(1));
            pairs.sort();
            true
        }
    };

    let mut states: Vec<PairState> = pairs
        .par_iter()
        .map(|&pair| {
            Ok(PairState {
                pair,
                ub: lambda_s_upper_bounds(d, pair)?,
                lower: 0,
                exact: false,
                witness: None,
            })
        })
        .collect::<Result<_>>()?;

    // Seed the running minimum with the pair of smallest upper bound.
    let first = (0..states.len())
        .min_by_key(|&i| (states[i].ub, states[i].pair))
        .expect("at least one pair");
    let r = lambda_s_exact(d, states[first].pair, None)?;
    states[first].lower = r.value;
    states[first].exact = true;
    states[first].witness = Some(r.witness);
    let target = r.value;

    // Every other pair either packs `target` members or is solved exactly.
    states
        .par_iter_mut()
        .enumerate()
        .try_for_each(|(i, st)| -> Result<()> {
            if i == first {
                return Ok(());
            }
            match lambda_s_at_least(d, st.pair, target, None)? {
                Feasibility::Yes(w) => {
                    st.lower = target;
                    st.exact = st.ub == target;
                    st.witness = Some(w);
                }
                _ => {
                    let r = lambda_s_exact(d, st.pair, None)?;
                    st.lower = r.value;
                    st.exact = true;
                    st.witness = Some(r.witness);
                }
            }
            Ok(())
        })?;
    let value = states.iter().map(|s| s.lower).min().expect("nonempty");

    // Lexicographically least pair with λ_S equal to the minimum. Pairs whose
    // value is only bounded below by the minimum are settled by one more
    // feasibility test.
    let undecided: Vec<usize> = states
        .iter()
        .enumerate()
        .take_while(|(_, s)| !(s.exact && s.lower == value))
        .filter(|(_, s)| s.lower == value)
        .map(|(i, _)| i)
        .collect();
    let settled: Vec<bool> = undecided
        .par_iter()
        .map(|&i| {
            Ok(matches!(
                lambda_s_at_least(d, states[i].pair, value + 1, None)?,
                Feasibility::No
            ))
        })
        .collect::<Result<_>>()?;
    for (&i, at_min) in undecided.iter().zip(settled) {
        if at_min {
            states[i].exact = true;
        } else {
            states[i].lower = value + 1;
        }
    }
    let best = states
        .into_iter()
        .find(|s| s.exact && s.lower == value)
        .expect("the minimum is attained");
    let mut witness = best.witness.expect("every pair has a witness");
    witness.members.truncate(value);
    Ok(Lambda2Result {
        value,
        argmin: best.pair,
        witness,
        sampled,
    })
}
