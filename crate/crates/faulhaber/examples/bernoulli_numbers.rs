//! Generate Bernoulli numbers exactly and watch the odd ones vanish.
//!
//! Run with: cargo run --example bernoulli_numbers

use faulhaber::render::rational_plain;
use faulhaber::{bernoulli_number, BernoulliCache};
use num_traits::Zero;

fn main() {
    println!("first Bernoulli numbers (convention B_1 = -1/2):");
    for j in 0..=16 {
        println!("  B_{j:<3} = {}", rational_plain(&bernoulli_number(j)));
    }

    let odd_zero = (1..=50).all(|k| bernoulli_number(2 * k + 1).is_zero());
    println!("\nB_3, B_5, ..., B_101 all zero: {odd_zero}");

    // A private cache works the same way when isolation matters.
    let cache = BernoulliCache::new();
    println!(
        "B_30 via a local cache: {}",
        rational_plain(&cache.number(30))
    );
}
