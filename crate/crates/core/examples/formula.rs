//! The closed form for `λ(G □ H)` compared against max-flow on the product,
//! plus the undirected three-term version.
//!
//! `cargo run --example formula`

use arcconn::constructions::random_factor_pair;
use arcconn::{
    bidirected_cycle, check_formula, complete_digraph, directed_cycle, undirected_product_lambda, HuntConfig,
    UndirectedGraph,
};

fn main() -> arcconn::Result<()> {
    let pairs = [
        ("C3 x C3", directed_cycle(3)?, directed_cycle(3)?),
        ("C3 x <K4>", directed_cycle(3)?, complete_digraph(4)?),
        ("<C5> x <K3>", bidirected_cycle(5)?, complete_digraph(3)?),
    ];
    for (name, g, h) in &pairs {
        let r = check_formula(g, h)?;
        println!(
            "{name:<12} {}  ({:?})  flow {}  cut ok {}",
            r.formula, r.formula.argmin, r.flow.lambda, r.cut_verified
        );
    }

    let cfg = HuntConfig {
        max_order: 6,
        seed: 3,
        ..HuntConfig::default()
    };
    let passed = (0..20)
        .map(|i| -> arcconn::Result<bool> {
            let (g, h) = random_factor_pair(&cfg, i)?;
            Ok(check_formula(&g, &h)?.passed())
        })
        .collect::<arcconn::Result<Vec<_>>>()?;
    println!("random pairs: {}/20 agree", passed.iter().filter(|&&b| b).count());

    let c4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let k3 = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)])?;
    println!("undirected C4 x K3: {}", undirected_product_lambda(&c4, &k3)?);
    Ok(())
}
