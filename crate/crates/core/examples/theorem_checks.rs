//! Runs every registered claim checker at a small scale.
//!
//! Run with `cargo run --release --example theorem_checks`.

use mutvis::theorems::{check_all, ScaleParams, CLAIMS};

fn main() -> mutvis::Result<()> {
    let params = ScaleParams {
        max_n: 5,
        max_n_triangle_free: 6,
        samples: 10,
        workers: 4,
        ..ScaleParams::default()
    };
    for (claim, report) in CLAIMS.iter().zip(check_all(&params)?) {
        println!(
            "{:<18} {:?} on {:>5} instances: {}",
            report.claim_id, report.status, report.instances_checked, claim.statement
        );
        for f in &report.failures {
            println!("    {}: expected {}, got {}", f.instance, f.expected, f.got);
        }
    }
    Ok(())
}
