//! Alexander quandles `x * y = t(x − y) + y` up to isomorphism, per order.
//!
//! `cargo run --release --example alexander_quandles -- 16`

use std::time::Instant;

use quandle_forge::constructions::{alexander_poly, AbelianGroupSpec, AutomorphismSpec};
use quandle_forge::enumeration::enumerate_alexander_tagged;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    for n in 1..=max {
        let start = Instant::now();
        let (res, tags) = enumerate_alexander_tagged(n).expect("order in range");
        println!("order {n}: {} classes ({:.2?})", res.count, start.elapsed());
        if n == 4 {
            for (m, t) in &tags {
                println!("    group {:?}, t = {t:?}", m.orders());
            }
        }
    }

    // the polynomial presentation of the order-4 connected Alexander quandle
    let q = alexander_poly(2, &[1, 1, 1]).unwrap();
    println!("Z_2[T]/(T^2+T+1):\n{q}");
    let same = quandle_forge::constructions::alexander(
        &AbelianGroupSpec::new(vec![2, 2]).unwrap(),
        &AutomorphismSpec::Matrix(vec![vec![0, 1], vec![1, 1]]),
    )
    .unwrap();
    assert_eq!(q, same);
}
