//! The order-81 commutative Moufang loop, a non-Moufang loop of order 5, and
//! a Belousov loop built from a Latin quandle.
//!
//! `cargo run --release --example moufang_loops`

use quandle_forge::constructions::dihedral;
use quandle_forge::loops::{
    belousov_loop, distributivity_flags, magma_conditions, moufang_check, validate_quasigroup, zassenhaus81,
    FiniteLoop,
};
use quandle_forge::CayleyTable;

fn main() {
    let z = zassenhaus81();
    println!("order-81 loop");
    println!("  commutative: {}", z.is_commutative());
    println!("  non-associative triple: {:?}", z.associativity_witness());
    println!("  exponent: {}", z.exponent());
    println!("  Moufang: {:?}", moufang_check(&z));
    let m = magma_conditions(&z);
    println!("  magma conditions hold: {}", m.all());

    let text = include_str!("../data/nonmoufang5.qdl");
    let t = CayleyTable::parse(text).unwrap();
    let l = FiniteLoop::from_table(&t).unwrap();
    println!("\norder-5 loop: Moufang {:?}", moufang_check(&l));

    // R_5 is a Latin quandle, hence a distributive quasigroup
    let r5 = validate_quasigroup(dihedral(5).unwrap().table()).unwrap();
    println!("\nR_5 distributivity: {:?}", distributivity_flags(&r5));
    for a in 0..5 {
        let b = belousov_loop(&r5, a).unwrap();
        println!(
            "  Belousov loop at {a}: identity {}, commutative {}, Moufang {}",
            b.identity(),
            b.is_commutative(),
            moufang_check(&b).all_hold()
        );
    }
}
