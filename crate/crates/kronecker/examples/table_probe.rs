//! Quick cost probe for the oracle table build. Not part of the test suite.

use std::time::Instant;

use kronecker::oracle::build_ext_table;
use kronecker::symbol::{symbols_up_to, DimVector};

fn main() {
    let cap_arg = std::env::args().nth(1).unwrap_or_else(|| "3,3".into());
    let q: u32 = std::env::args()
        .nth(2)
        .map(|s| s.parse().unwrap())
        .unwrap_or(2);
    let parts: Vec<u32> = cap_arg.split(',').map(|t| t.parse().unwrap()).collect();
    let cap = DimVector::new(parts[0], parts[1]);
    println!("symbols up to {cap}: {}", symbols_up_to(cap).len());
    let t0 = Instant::now();
    let table = build_ext_table(q, cap).unwrap();
    println!(
        "table q={q} cap={cap}: {} keys in {:.2?}",
        table.pair_keys().count(),
        t0.elapsed()
    );
}
