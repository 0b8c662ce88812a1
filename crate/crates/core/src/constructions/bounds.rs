use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::generators::random_strong_digraph;
use crate::product::cartesian_product;
use crate::sssc::{lambda_2, lambda_s_exact, verify_certificate, CertificateFamily, Lambda2Mode, SeedPair};

use super::formula::product_lambda_formula;
use super::table::DigraphClass;

/// Lower and upper bounds on `λ₂(G □ H)` from factor data, optionally
/// sandwiched around the exact value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lambda2_g: usize,
    pub lambda2_h: usize,
    /// `λ₂(G) + λ₂(H) − 1`.
    pub lower: usize,
    /// `λ(G □ H)` from the closed form.
    pub upper: usize,
    pub observed: Option<usize>,
    pub lower_tight: bool,
    pub upper_tight: bool,
}

impl BoundsReport {
    /// `lower ≤ observed ≤ upper`, vacuously true without an observation.
    pub fn sandwich_holds(&self) -> bool {
        self.observed.is_none_or(|o| self.lower <= o && o <= self.upper)
    }

    /// `observed − lower`.
    pub fn gap(&self) -> Option<usize> {
        self.observed.map(|o| o.saturating_sub(self.lower))
    }
}

/// Bound report for `G □ H`. With `compute_exact` the product's `λ₂` is
/// solved exhaustively.
pub fn check_bounds(g: &Digraph, h: &Digraph, compute_exact: bool) -> Result<BoundsReport> {
    Ok(check_bounds_with_witness(g, h, compute_exact)?.0)
}

fn check_bounds_with_witness(
    g: &Digraph,
    h: &Digraph,
    compute_exact: bool,
) -> Result<(BoundsReport, Option<CertificateFamily>)> {
    let upper = product_lambda_formula(g, h)?.value;
    let lambda2_g = lambda_2(g, Lambda2Mode::Exhaustive)?.value;
    let lambda2_h = lambda_2(h, Lambda2Mode::Exhaustive)?.value;
    let lower = (lambda2_g + lambda2_h).saturating_sub(1);
    let (observed, witness) = if compute_exact {
        let p = cartesian_product(g, h);
        let r = lambda_2(p.digraph(), Lambda2Mode::Exhaustive)?;
        (Some(r.value), Some(r.witness))
    } else {
        (None, None)
    };
    let report = BoundsReport {
        lambda2_g,
        lambda2_h,
        lower,
        upper,
        observed,
        lower_tight: observed == Some(lower),
        upper_tight: observed == Some(upper),
    };
    Ok((report, witness))
}

/// Parameters for [`hunt_tightness`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HuntConfig {
    pub trials: usize,
    pub min_order: usize,
    pub max_order: usize,
    pub seed: u64,
    /// Also run every pair of table classes at order 3 (order 2 for trees
    /// and complete digraphs when `max_order < 3`).
    pub include_classes: bool,
}

impl Default for HuntConfig {
    fn default() -> Self {
        HuntConfig {
            trials: 100,
            min_order: 2,
            max_order: 4,
            seed: 0,
            include_classes: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HuntTrial {
    pub label: String,
    pub g: Digraph,
    pub h: Digraph,
    pub report: BoundsReport,
}

/// A product attaining `λ₂(G □ H) = λ₂(G) + λ₂(H) − 1`.
#[derive(Debug, Clone)]
pub struct TightnessWitness {
    pub trial: HuntTrial,
    /// Optimal family at the minimizing seed pair.
    pub certificate: CertificateFamily,
}

#[derive(Debug, Clone, Default)]
pub struct HuntReport {
    pub trials: Vec<HuntTrial>,
    pub witnesses: Vec<TightnessWitness>,
    /// Count of trials per `observed − lower`.
    pub gap_histogram: BTreeMap<usize, usize>,
}

impl HuntReport {
    pub fn all_sandwiched(&self) -> bool {
        self.trials.iter().all(|t| t.report.sandwich_holds())
    }
}

/// The random factor pair used by trial `index` of a hunt or bounds sweep.
pub fn random_factor_pair(config: &HuntConfig, index: usize) -> Result<(Digraph, Digraph)> {
    if config.min_order < 2 || config.max_order < config.min_order {
        return Err(Error::OrderTooSmall {
            what: "hunt factor",
            min: 2,
            got: config.min_order,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let orders = config.min_order..=config.max_order;
    let (ng, nh) = (rng.gen_range(orders.clone()), rng.gen_range(orders));
    let (pg, ph) = (rng.gen_range(0.0..0.6), rng.gen_range(0.0..0.6));
    let g = random_strong_digraph(ng, pg, rng.gen())?;
    let h = random_strong_digraph(nh, ph, rng.gen())?;
    Ok((g, h))
}

fn class_pairs(config: &HuntConfig) -> Result<Vec<(String, Digraph, Digraph)>> {
    let mut out = Vec::new();
    for row in DigraphClass::ALL {
        for col in DigraphClass::ALL {
            let order = |c: DigraphClass| 3.min(config.max_order).max(c.min_order());
            let (n, m) = (order(row), order(col));
            if n > config.max_order.max(2) || m > config.max_order.max(2) {
                continue;
            }
            out.push((format!("{row}{n} x {col}{m}"), row.build(n)?, col.build(m)?));
        }
    }
    Ok(out)
}

/// Sandwich-checks random strong factor pairs and collects every product
/// whose `λ₂` meets the lower bound. Each witness's certificate is checked
/// and its optimality re-derived by the exact solver.
pub fn hunt_tightness(config: &HuntConfig) -> Result<HuntReport> {
    let mut inputs: Vec<(String, Digraph, Digraph)> = (0..config.trials)
        .map(|i| {
            let (g, h) = random_factor_pair(config, i)?;
            Ok((format!("trial {i}"), g, h))
        })
        .collect::<Result<_>>()?;
    if config.include_classes {
        inputs.extend(class_pairs(config)?);
    }

    let results: Vec<(HuntTrial, Option<CertificateFamily>)> = inputs
        .into_par_iter()
        .map(|(label, g, h)| {
            let (report, witness) = check_bounds_with_witness(&g, &h, true)?;
            Ok((HuntTrial { label, g, h, report }, witness))
        })
        .collect::<Result<_>>()?;

    let mut out = HuntReport::default();
    for (trial, witness) in results {
        if let Some(gap) = trial.report.gap() {
            *out.gap_histogram.entry(gap).or_default() += 1;
        }
        if trial.report.lower_tight {
            let certificate = witness.expect("exact run keeps its witness");
            reverify(&trial, &certificate)?;
            out.witnesses.push(TightnessWitness {
                trial: trial.clone(),
                certificate,
            });
        }
        out.trials.push(trial);
    }
    Ok(out)
}

fn reverify(trial: &HuntTrial, cert: &CertificateFamily) -> Result<()> {
    let p = cartesian_product(&trial.g, &trial.h);
    let report = verify_certificate(p.digraph(), cert);
    if !report.is_valid() {
        return Err(Error::Construction(report.to_string()));
    }
    let s: SeedPair = cert.seed;
    let exact = lambda_s_exact(p.digraph(), s, None)?;
    if exact.value != cert.len() || Some(exact.value) != trial.report.observed {
        return Err(Error::Construction(format!(
            "{}: witness has {} members but the solver gives {}",
            trial.label,
            cert.len(),
            exact.value
        )));
    }
    Ok(())
}
