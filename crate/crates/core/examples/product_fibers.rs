//! Builds a Cartesian product and walks its fibers: vertex `(i, j)` has
//! index `i·m + j`, the `G`-fiber at `j` is column `j` and the `H`-fiber at
//! `i` is row `i`. A subgraph of one fiber is copied into another.
//!
//! `cargo run --example product_fibers`

use arcconn::{bidirected_cycle, cartesian_product, directed_cycle, ArcSet};

fn main() -> arcconn::Result<()> {
    let g = directed_cycle(3)?;
    let h = bidirected_cycle(4)?;
    let p = cartesian_product(&g, &h);
    let d = p.digraph();
    println!(
        "C3 x <C4>: {} vertices, {} arcs (= {}*{} + {}*{})",
        d.order(),
        d.arc_count(),
        g.arc_count(),
        h.order(),
        h.arc_count(),
        g.order()
    );
    for v in [0, 5, 11] {
        let (i, j) = p.decode(v);
        println!(
            "vertex {v} = ({i},{j}): out-degree {} = {} + {}",
            d.out_degree(v),
            g.out_degree(i),
            h.out_degree(j)
        );
    }

    let column = p.g_fiber(1)?;
    let row = p.h_fiber(2)?;
    println!("G-fiber at column 1: {:?}", column.vertices);
    println!("H-fiber at row 2:    {:?}", row.vertices);

    // The directed triangle placed in column 1, then translated to column 3.
    let tri: ArcSet = g.arcs().iter().copied().collect();
    let in_col1 = p.embed_g(&tri, 1);
    let in_col3 = p.translate_subgraph(&in_col1, &p.g_fiber(3)?)?;
    println!("triangle in column 1: {:?}", in_col1.to_vec());
    println!("copied to column 3:   {:?}", in_col3.to_vec());
    println!("product strong: {}", d.is_strong());
    Ok(())
}
