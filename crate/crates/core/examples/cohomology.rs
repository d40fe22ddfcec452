//! Rack and quandle homology of small dihedral quandles, and the cocycle
//! space `Z^2(R_4; Z_2)` with an explicit basis.
//!
//! `cargo run --release --example cohomology`

use quandle_forge::cohomology::{cocycle_space, homology, is_coboundary, Theory};
use quandle_forge::constructions::{alexander_poly, dihedral};

fn cyclic_sum(orders: &[u64]) -> String {
    if orders.is_empty() {
        return "0".into();
    }
    orders.iter().map(|o| format!("Z_{o}")).collect::<Vec<_>>().join(" + ")
}

fn main() {
    for n in [3, 4, 5] {
        let q = dihedral(n).unwrap();
        for theory in [Theory::Rack, Theory::Quandle] {
            let hs: Vec<String> = (1..=3)
                .map(|d| format!("H_{d} = {}", homology(&q, d, theory).unwrap()))
                .collect();
            println!("R_{n} {theory:?}: {}", hs.join(", "));
        }
    }

    let r4 = dihedral(4).unwrap();
    let space = cocycle_space(&r4, 2, 2).unwrap();
    println!("\nZ^2(R_4; Z_2) has {} cocycles; H^2 = {}", space.cocycle_count(), cyclic_sum(&space.cohomology));
    for (i, (g, o)) in space.cocycle_generators.iter().enumerate() {
        let support: Vec<String> = (0..4)
            .flat_map(|x| (0..4).map(move |y| (x, y)))
            .filter(|&(x, y)| g.get(&[x, y]) != 0)
            .map(|(x, y)| format!("{x}{y}"))
            .collect();
        let cob = is_coboundary(&r4, g).unwrap();
        println!("  generator {i} (order {o}, coboundary {cob}): {}", support.join(" "));
    }

    let a4 = alexander_poly(2, &[1, 1, 1]).unwrap();
    println!("\nH^2(Z_2[T]/(T^2+T+1); Z_2) = {}", cyclic_sum(&cocycle_space(&a4, 2, 2).unwrap().cohomology));
    println!("H^3(R_3; Z_3) = {}", cyclic_sum(&cocycle_space(&dihedral(3).unwrap(), 3, 3).unwrap().cohomology));
}
