//! Evaluate power sums three ways — brute force, the Bernoulli formula, and
//! Horner over the Faulhaber form — and time the two closed forms at a
//! large argument.
//!
//! Run with: cargo run --release --example power_sums

use faulhaber::{
    eval_faulhaber, faulhaber_form, power_sum_bernoulli, power_sum_bruteforce,
};
use std::time::Instant;

fn main() {
    // All three routes agree exactly wherever brute force is affordable.
    for (exponent, n) in [(3u32, 5u64), (10, 100), (25, 50)] {
        let brute = power_sum_bruteforce(exponent, n);
        let bern = power_sum_bernoulli(exponent, n);
        let faul = eval_faulhaber(&faulhaber_form(exponent).unwrap(), n);
        assert!(brute == bern && bern == faul);
        println!("S_{exponent}({n}) = {}", brute.numer());
    }

    // At n = 10^6 the brute-force route is off the table; the closed forms
    // still answer instantly and must agree digit for digit.
    let (exponent, n) = (100u32, 1_000_000u64);
    let t0 = Instant::now();
    let form = faulhaber_form(exponent).unwrap();
    let faul = eval_faulhaber(&form, n);
    let faulhaber_time = t0.elapsed();
    let t1 = Instant::now();
    let bern = power_sum_bernoulli(exponent, n);
    let bernoulli_time = t1.elapsed();
    assert_eq!(faul, bern);

    let digits = faul.numer().to_string();
    println!(
        "\nS_{exponent}({n}) has {} digits; faulhaber {faulhaber_time:.2?}, bernoulli {bernoulli_time:.2?}",
        digits.len()
    );
    println!("  leading digits:  {}...", &digits[..40]);
    println!("  trailing digits: ...{}", &digits[digits.len() - 40..]);
}
