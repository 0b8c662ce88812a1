//! Looks for products whose `λ₂` equals the lower bound
//! `λ₂(G) + λ₂(H) − 1`, over random strong factors and the table classes.
//!
//! `cargo run --release --example hunt -- 200 7`

use arcconn::{hunt_tightness, HuntConfig};

fn main() -> arcconn::Result<()> {
    let mut args = std::env::args().skip(1).filter_map(|a| a.parse::<u64>().ok());
    let trials = args.next().unwrap_or(100) as usize;
    let seed = args.next().unwrap_or(7);
    let report = hunt_tightness(&HuntConfig {
        trials,
        min_order: 2,
        max_order: 4,
        seed,
        include_classes: true,
    })?;
    println!(
        "{} products, sandwich holds: {}",
        report.trials.len(),
        report.all_sandwiched()
    );
    for (gap, count) in &report.gap_histogram {
        println!("  observed - lower = {gap}: {count}");
    }
    for w in &report.witnesses {
        let r = &w.trial.report;
        println!(
            "tight: {} (lambda_2 {} + {} - 1 = {}), {} arcs x {} arcs",
            w.trial.label,
            r.lambda2_g,
            r.lambda2_h,
            r.lower,
            w.trial.g.arc_count(),
            w.trial.h.arc_count()
        );
    }
    if report.witnesses.is_empty() {
        println!("no product met the lower bound");
    }
    Ok(())
}
