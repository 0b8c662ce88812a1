//! Explicit certificate families for `C⃗ₙ` times a directed cycle, a
//! bidirected cycle, a bidirected tree and a complete digraph.
//!
//! `cargo run --example propositions`

use arcconn::{prop_certificates, ClassPair, SeedPair, TreeShape};

fn main() -> arcconn::Result<()> {
    let classes = [
        ("C x C", ClassPair::CycleCycle),
        ("C x <C>", ClassPair::CycleBicycle),
        ("C x <T:star>", ClassPair::CycleTree(TreeShape::Star)),
        ("C x <K>", ClassPair::CycleComplete),
    ];
    let (n, m) = (4, 5);
    for (name, class) in classes {
        let p = class.product(n, m)?;
        for ((a, b), (c, d)) in [((0, 0), (1, 1)), ((3, 4), (1, 2)), ((0, 1), (0, 3))] {
            let s = SeedPair::new(p.encode(a, b), p.encode(c, d))?;
            let r = prop_certificates(class, n, m, s)?;
            let sizes: Vec<usize> = r.family.members.iter().map(|m| m.len()).collect();
            println!(
                "{name:<13} n={n} m={m} S={{({a},{b}),({c},{d})}}  {} members {:?}  {:?}",
                r.family.len(),
                sizes,
                r.routing
            );
        }
    }
    Ok(())
}
