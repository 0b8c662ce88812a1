//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints exactly one `PASS`/`FAIL` line; the process fails if any does.
//! All comparisons are exact integer equalities or inequalities.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use arcconn::constructions::{lift_with, random_factor_pair, LiftCase};
use arcconn::{
    arc_connectivity, bidirected_cycle, cartesian_product, check_bounds, check_formula, class_table_value,
    complete_digraph, directed_cycle, lambda_2, lambda_s_exact, lambda_s_oracle_paths, lambda_s_oracle_subsets,
    prop_certificates, random_connected_graph, undirected_product_lambda, verify_certificate, verify_cut, ClassPair,
    Digraph, DigraphClass, HuntConfig, Lambda2Mode, ProductDigraph, SeedPair, TreeShape, UndirectedGraph,
};

type Outcome = Result<String, String>;

/// Id, name, time limit and check.
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn l2(d: &Digraph) -> usize {
    lambda_2(d, Lambda2Mode::Exhaustive).unwrap().value
}

/// Table classes including both tree shapes under test.
const CLASSES: [DigraphClass; 5] = [
    DigraphClass::DirectedCycle,
    DigraphClass::BidirectedCycle,
    DigraphClass::BidirectedTree(TreeShape::Path),
    DigraphClass::BidirectedTree(TreeShape::Star),
    DigraphClass::Complete,
];

fn orders_for(c: DigraphClass) -> Vec<usize> {
    // Orders 3 and 4 everywhere; classes whose smallest member is the
    // digon also at 2.
    (c.min_order().min(3)..=4).collect()
}

fn ac1_table() -> Outcome {
    let mut cases = Vec::new();
    for row in CLASSES {
        for col in CLASSES {
            for n in orders_for(row) {
                for m in orders_for(col) {
                    cases.push((row, col, n, m));
                }
            }
        }
    }
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|&(row, col, n, m)| {
            let expected = class_table_value(row, col, n, m).unwrap();
            let p = cartesian_product(&row.build(n).unwrap(), &col.build(m).unwrap());
            let got = l2(p.digraph());
            (got != expected).then(|| format!("{row}{n} x {col}{m}: table {expected}, computed {got}"))
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("{} products, all equal to the closed form", cases.len()))
}

fn ac2_formula() -> Outcome {
    for seed in 1..=50u64 {
        let cfg = HuntConfig {
            trials: 1,
            min_order: 2,
            max_order: 6,
            seed,
            include_classes: false,
        };
        let (g, h) = random_factor_pair(&cfg, 0).unwrap();
        let r = check_formula(&g, &h).unwrap();
        ensure(r.formula.value == r.flow.lambda, || {
            format!("seed {seed}: formula {} vs flow {}", r.formula, r.flow.lambda)
        })?;
        let p = cartesian_product(&g, &h);
        ensure(
            r.flow.min_cut.len() == r.flow.lambda && verify_cut(p.digraph(), &r.flow.min_cut),
            || format!("seed {seed}: returned cut does not disconnect"),
        )?;
    }
    Ok("50 pairs, formula equals flow value, cuts verified".into())
}

fn ac3_sandwich() -> Outcome {
    let reports: Vec<(u64, arcconn::BoundsReport)> = (1..=100u64)
        .into_par_iter()
        .map(|seed| {
            let cfg = HuntConfig {
                trials: 1,
                min_order: 2,
                max_order: 4,
                seed,
                include_classes: false,
            };
            let (g, h) = random_factor_pair(&cfg, 0).unwrap();
            (seed, check_bounds(&g, &h, true).unwrap())
        })
        .collect();
    let mut gaps = [0usize; 8];
    for (seed, r) in &reports {
        let obs = r.observed.unwrap();
        ensure(r.lower <= obs && obs <= r.upper, || {
            format!("seed {seed}: {} <= {obs} <= {} violated", r.lower, r.upper)
        })?;
        gaps[(obs - r.lower).min(7)] += 1;
    }
    Ok(format!("100 pairs sandwiched; gap counts {:?}", &gaps[..4]))
}

fn general_position_pairs(p: &ProductDigraph) -> Vec<SeedPair> {
    let (n, m) = (p.n(), p.m());
    let mut out = Vec::new();
    for x in 0..n * m {
        for y in x + 1..n * m {
            let ((a, b), (c, d)) = (p.decode(x), p.decode(y));
            if a != c && b != d {
                out.push(SeedPair::new(x, y).unwrap());
            }
        }
    }
    out
}

fn ac4_props() -> Outcome {
    let classes = [
        ClassPair::CycleCycle,
        ClassPair::CycleBicycle,
        ClassPair::CycleTree(TreeShape::Path),
        ClassPair::CycleTree(TreeShape::Star),
        ClassPair::CycleComplete,
    ];
    let mut families = 0;
    for class in classes {
        for n in 3..=5 {
            for m in 3..=5 {
                let p = class.product(n, m).unwrap();
                let want = match class {
                    ClassPair::CycleCycle | ClassPair::CycleTree(_) => 2,
                    ClassPair::CycleBicycle => 3,
                    ClassPair::CycleComplete => m,
                };
                for s in general_position_pairs(&p) {
                    let r = prop_certificates(class, n, m, s).map_err(|e| format!("{class:?} {n}x{m} {s}: {e}"))?;
                    let report = verify_certificate(p.digraph(), &r.family);
                    ensure(report.is_valid() && r.family.len() == want, || {
                        format!("{class:?} {n}x{m} {s}: {} members, {report}", r.family.len())
                    })?;
                    families += 1;
                }
            }
        }
    }
    Ok(format!(
        "{families} general-position families verified at exact cardinality"
    ))
}

fn lift_all_positions(g: &Digraph, h: &Digraph, tag: &str) -> Result<usize, String> {
    let (lg, lh) = (l2(g), l2(h));
    let p = ProductDigraph::new(g, h);
    let order = p.digraph().order();
    let pairs: Vec<SeedPair> = (0..order)
        .flat_map(|x| (x + 1..order).map(move |y| SeedPair::new(x, y).unwrap()))
        .collect();
    pairs.par_iter().try_for_each(|&s| {
        let r = lift_with(&p, lg, lh, s).map_err(|e| format!("{tag} {s}: {e}"))?;
        let report = verify_certificate(p.digraph(), &r.family);
        ensure(report.is_valid() && r.family.len() + 1 >= lg + lh, || {
            format!("{tag} {s}: {} members ({:?}), {report}", r.family.len(), r.case)
        })?;
        let full = matches!(
            r.case,
            LiftCase::SameGFiber | LiftCase::SameHFiber | LiftCase::NoAlignedNeighbour | LiftCase::BothSidesAligned
        );
        ensure(!full || r.family.len() >= lg + lh, || {
            format!("{tag} {s}: {:?} built only {} members", r.case, r.family.len())
        })
    })?;
    Ok(pairs.len())
}

fn ac5_lift() -> Outcome {
    let mut families = 0;
    for seed in 1..=30u64 {
        let cfg = HuntConfig {
            trials: 1,
            min_order: 2,
            max_order: 4,
            seed,
            include_classes: false,
        };
        let (g, h) = random_factor_pair(&cfg, 0).unwrap();
        families += lift_all_positions(&g, &h, &format!("seed {seed}"))?;
    }
    let three: [(&str, Digraph); 3] = [
        ("C3", directed_cycle(3).unwrap()),
        ("<C3>", bidirected_cycle(3).unwrap()),
        ("<K3>", complete_digraph(3).unwrap()),
    ];
    for (gn, g) in &three {
        for (hn, h) in &three {
            families += lift_all_positions(g, h, &format!("{gn} x {hn}"))?;
        }
    }
    Ok(format!(
        "{families} lifted families verified, each of size >= lower bound"
    ))
}

/// Random digraph with at most `cap` arcs; not necessarily strong.
fn random_small_digraph(rng: &mut ChaCha8Rng, cap: usize) -> Digraph {
    loop {
        let n = rng.gen_range(2..=6);
        let p = rng.gen_range(0.2..0.8);
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .filter(|_| rng.gen_bool(p))
            .collect();
        if arcs.len() <= cap {
            return Digraph::from_arc_list(n, arcs).unwrap();
        }
    }
}

fn ac6_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checks = 0;
    let mut positive = 0;
    for i in 0..200 {
        let d = random_small_digraph(&mut rng, 14);
        for _ in 0..5 {
            let x = rng.gen_range(0..d.order());
            let y = (x + rng.gen_range(1..d.order())) % d.order();
            let s = SeedPair::new(x, y).unwrap();
            let exact = lambda_s_exact(&d, s, None).unwrap();
            let paths = lambda_s_oracle_paths(&d, s).unwrap();
            let subsets = lambda_s_oracle_subsets(&d, &[x, y]).unwrap();
            ensure(exact.is_exact() && exact.value == paths && paths == subsets, || {
                format!(
                    "digraph {i} {:?} S={s}: exact {} paths {paths} subsets {subsets}",
                    d.arcs(),
                    exact.value
                )
            })?;
            ensure(verify_certificate(&d, &exact.witness).is_valid(), || {
                format!("digraph {i} S={s}: invalid witness")
            })?;
            checks += 1;
            positive += usize::from(exact.value > 0);
        }
    }
    Ok(format!(
        "{checks} seed pairs agree across all three ({positive} nonzero)"
    ))
}

/// Edge connectivity by trying every edge subset in order of size.
fn brute_edge_connectivity(g: &UndirectedGraph) -> usize {
    let edges = g.edges();
    for k in 0..=edges.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let kept = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !idx.contains(i))
                .map(|(_, &e)| e);
            if !UndirectedGraph::new(g.order(), kept).unwrap().is_connected() {
                return k;
            }
            // Next k-combination.
            let mut i = k;
            while i > 0 && idx[i - 1] == edges.len() - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    edges.len()
}

fn ac7_symmetric() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..50 {
        let n = rng.gen_range(2..=7);
        let g = random_connected_graph(n, rng.gen_range(0.0..0.7), rng.gen()).unwrap();
        let brute = brute_edge_connectivity(&g);
        let got = l2(&g.biorient());
        ensure(got == brute, || {
            format!("graph {i} {:?}: lambda2 {got}, edge connectivity {brute}", g.edges())
        })?;
        ensure(arc_connectivity(&g.biorient()).unwrap().lambda == brute, || {
            format!("graph {i}: flow disagrees with brute force")
        })?;
    }

    let small = [
        UndirectedGraph::new(2, [(0, 1)]).unwrap(),
        UndirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap(),
        UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap(),
    ];
    let mut pairs = 0;
    for g in &small {
        for h in &small {
            let (lg, lh) = (brute_edge_connectivity(g), brute_edge_connectivity(h));
            let closed = (lg * h.order())
                .min(lh * g.order())
                .min(g.min_degree() + h.min_degree());
            let formula = undirected_product_lambda(g, h).unwrap();
            let p = cartesian_product(&g.biorient(), &h.biorient());
            let got = l2(p.digraph());
            ensure(got == formula && formula == closed, || {
                format!(
                    "{:?} x {:?}: lambda2 {got}, formula {formula}, brute closed form {closed}",
                    g.edges(),
                    h.edges()
                )
            })?;
            pairs += 1;
        }
    }
    Ok(format!("50 graphs and {pairs} product pairs agree"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("AC1", "class-pair closed form", Duration::from_secs(600), ac1_table),
        (
            "AC2",
            "product arc-connectivity formula",
            Duration::from_secs(60),
            ac2_formula,
        ),
        ("AC3", "bound sandwich", Duration::from_secs(900), ac3_sandwich),
        ("AC4", "proposition constructions", Duration::from_secs(60), ac4_props),
        ("AC5", "lifting construction", Duration::from_secs(300), ac5_lift),
        ("AC6", "oracle equivalence", Duration::from_secs(300), ac6_oracles),
        ("AC7", "symmetric identities", Duration::from_secs(600), ac7_symmetric),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(run)) {
            Ok(r) => r,
            Err(panic) => Err(panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}, but took {elapsed:.1?} (limit {limit:?})")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("{id} PASS {name}: {detail} [{elapsed:.2?}]"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {name}: {detail} [{elapsed:.2?}]");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
