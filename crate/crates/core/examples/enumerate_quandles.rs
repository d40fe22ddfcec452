//! Counts quandles of each order up to isomorphism.
//!
//! `cargo run --release --example enumerate_quandles -- 7`

use std::time::Instant;

use quandle_forge::enumeration::{enumerate_quandles, Filter};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for n in 1..=max {
        let start = Instant::now();
        let all = enumerate_quandles(n, Filter::All).expect("order in range");
        let connected = all
            .tables
            .iter()
            .filter(|t| Filter::Connected.matches(&quandle_forge::Quandle::verify((*t).clone()).unwrap()))
            .count();
        println!(
            "order {n}: {} quandles, {connected} connected ({:.2?})",
            all.count,
            start.elapsed()
        );
    }
}
