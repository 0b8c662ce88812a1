//! Strong subgraph 2-arc-connectivity: `λ_S` for one seed pair with its
//! certificate, then `λ₂` over all pairs, exhaustively and by sampling.
//!
//! `cargo run --release --example lambda2`

use arcconn::{
    cartesian_product, complete_digraph, directed_cycle, lambda_2, lambda_s_exact, lambda_s_upper_bounds,
    verify_certificate, Lambda2Mode, SeedPair,
};

fn main() -> arcconn::Result<()> {
    let p = cartesian_product(&directed_cycle(4)?, &complete_digraph(3)?);
    let d = p.digraph();
    let s = SeedPair::new(p.encode(0, 0), p.encode(2, 1))?;

    let r = lambda_s_exact(d, s, None)?;
    println!("C4 x <K3>, S = {s}");
    println!("  upper bound {}", lambda_s_upper_bounds(d, s)?);
    println!("  lambda_S = {} ({:?}, {} search nodes)", r.value, r.proof, r.nodes);
    for (i, m) in r.witness.members.iter().enumerate() {
        println!("  member {i}: {} arcs", m.len());
    }
    println!("  certificate valid: {}", verify_certificate(d, &r.witness).is_valid());

    let all = lambda_2(d, Lambda2Mode::Exhaustive)?;
    println!("lambda_2 = {} at {}", all.value, all.argmin);

    let sampled = lambda_2(d, Lambda2Mode::Sampled { count: 8, seed: 1 })?;
    println!("sampled 8 pairs: lambda_2 <= {}", sampled.value);
    Ok(())
}
