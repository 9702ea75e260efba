//! Run the full verification harness over every theorem family up to a
//! bound and print the report table.
//!
//! Run with: cargo run --example verify_sweep

use faulhaber::render::reports_plain;
use faulhaber::{sweep, TheoremId};

fn main() {
    let max_m = 12;
    let reports = sweep(max_m, &TheoremId::ALL);
    print!("{}", reports_plain(&reports, max_m));

    // Each report carries its named sub-checks and witnesses.
    let sample = &reports[0];
    println!("\nsub-checks of {} at m = {}:", sample.theorem, sample.m);
    for check in &sample.checks {
        println!("  {:<32} {} ({})", check.name, check.pass, check.witness);
    }
}
