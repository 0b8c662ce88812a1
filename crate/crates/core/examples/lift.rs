//! Lifts factor certificates into `G □ H` for every seed pair and reports
//! which case of the construction applied.
//!
//! `cargo run --example lift`

use std::collections::BTreeMap;

use arcconn::constructions::lift_with;
use arcconn::{bidirected_cycle, lambda_2, Lambda2Mode, ProductDigraph, SeedPair};

fn main() -> arcconn::Result<()> {
    let g = bidirected_cycle(4)?;
    let h = bidirected_cycle(4)?;
    let lg = lambda_2(&g, Lambda2Mode::Exhaustive)?.value;
    let lh = lambda_2(&h, Lambda2Mode::Exhaustive)?.value;
    let p = ProductDigraph::new(&g, &h);
    println!(
        "<C4> x <C4>: lambda_2 factors {lg} and {lh}, lower bound {}",
        lg + lh - 1
    );

    let mut by_case: BTreeMap<String, (usize, usize, usize)> = BTreeMap::new();
    let n = p.digraph().order();
    for x in 0..n {
        for y in x + 1..n {
            let r = lift_with(&p, lg, lh, SeedPair::new(x, y)?)?;
            let e = by_case.entry(format!("{:?}", r.case)).or_insert((0, usize::MAX, 0));
            e.0 += 1;
            e.1 = e.1.min(r.family.len());
            e.2 = e.2.max(r.family.len());
        }
    }
    for (case, (count, lo, hi)) in by_case {
        println!("  {case:<12} {count:>3} pairs, family sizes {lo}..={hi}");
    }

    let s = SeedPair::new(p.encode(0, 0), p.encode(2, 1))?;
    let r = lift_with(&p, lg, lh, s)?;
    println!("S = {s}: {:?}, {} members", r.case, r.family.len());
    for m in &r.family.members {
        let cells: Vec<String> = m
            .iter()
            .map(|&(u, v)| format!("{:?}->{:?}", p.decode(u), p.decode(v)))
            .collect();
        println!("  {}", cells.join(" "));
    }
    Ok(())
}
