//! Print Faulhaber forms: even power sums as S_2 times a polynomial in S_1,
//! odd ones as S_1^2 times a polynomial in S_1, and the exact relation
//! c_{m,j} = (4m+2)/(3j+6) b_{m,j} linking the two coefficient families.
//!
//! Run with: cargo run --example faulhaber_forms

use faulhaber::{bc_relation_check, faulhaber_form};

fn main() {
    for exponent in 2..=11 {
        println!("{}", faulhaber_form(exponent).unwrap());
    }

    println!();
    let all = (1..=15u32).all(|m| (0..m).all(|j| bc_relation_check(m, j).unwrap()));
    println!("b/c coefficient relation for every m <= 15: {all}");
}
