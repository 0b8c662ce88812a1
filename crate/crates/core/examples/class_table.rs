//! Recomputes the table of exact `λ₂` values for products of directed
//! cycles, bidirected cycles, bidirected trees and complete digraphs, and
//! compares each entry against the closed form.
//!
//! Run with `cargo run --release --example class_table -- 3 4`.

use std::time::Instant;

use arcconn::constructions::render_class_table;
use arcconn::{cartesian_product, class_table_value, lambda_2, DigraphClass, Lambda2Mode, TreeShape};

fn main() -> arcconn::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let orders = if args.is_empty() { vec![3, 4] } else { args };
    let classes = [
        DigraphClass::DirectedCycle,
        DigraphClass::BidirectedCycle,
        DigraphClass::BidirectedTree(TreeShape::Path),
        DigraphClass::BidirectedTree(TreeShape::Star),
        DigraphClass::Complete,
    ];

    let mut mismatches = 0;
    for &row in &classes {
        for &col in &classes {
            for &n in &orders {
                for &m in &orders {
                    if n < row.min_order() || m < col.min_order() {
                        continue;
                    }
                    let expected = class_table_value(row, col, n, m)?;
                    let start = Instant::now();
                    let p = cartesian_product(&row.build(n)?, &col.build(m)?);
                    let got = lambda_2(p.digraph(), Lambda2Mode::Exhaustive)?;
                    let ok = got.value == expected;
                    mismatches += usize::from(!ok);
                    println!(
                        "{:>10} x {:<10} n={n} m={m}  table={expected}  computed={}  argmin={}  {:.2?}{}",
                        format!("{row}"),
                        format!("{col}"),
                        got.value,
                        got.argmin,
                        start.elapsed(),
                        if ok { "" } else { "  MISMATCH" }
                    );
                }
            }
        }
    }
    println!();
    print!("{}", render_class_table(orders[0], *orders.last().unwrap())?);
    println!("{mismatches} mismatches");
    Ok(())
}
