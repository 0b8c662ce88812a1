//! Arc-strong connectivity of a few digraphs, with the minimum cut and the
//! Menger paths behind one local value.
//!
//! `cargo run --example lambda`

use arcconn::{arc_connectivity, bidirected_cycle, complete_digraph, directed_cycle, max_flow_unit, Digraph};

fn main() -> arcconn::Result<()> {
    let samples: [(&str, Digraph); 4] = [
        ("directed 5-cycle", directed_cycle(5)?),
        ("bidirected 6-cycle", bidirected_cycle(6)?),
        ("complete digraph K4", complete_digraph(4)?),
        ("directed path", Digraph::from_arc_list(3, [(0, 1), (1, 2)])?),
    ];
    for (name, d) in &samples {
        let r = arc_connectivity(d)?;
        println!(
            "{name:<20} lambda={} delta+={} delta-={} strong={} cut={:?}",
            r.lambda,
            r.delta_out,
            r.delta_in,
            r.strong,
            r.min_cut.to_vec()
        );
    }

    let k4 = complete_digraph(4)?;
    let local = max_flow_unit(&k4, 0, 3)?;
    println!("\nK4, 0 -> 3: {} arc-disjoint paths", local.value);
    for p in &local.paths {
        println!("  {p:?}");
    }
    println!("  cut {:?}", local.cut.to_vec());
    Ok(())
}
