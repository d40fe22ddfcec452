//! Abelian extensions by 2-cocycles, recovering a cocycle from a covering,
//! and a dynamical cocycle read off a non-abelian fibration.
//!
//! `cargo run --release --example extensions`

use quandle_forge::cohomology::CocycleTable;
use quandle_forge::constructions::{dihedral, galkin, AbelianGroupSpec};
use quandle_forge::extensions::{abelian_extension, extract_cocycle, fibration_to_dynamical};
use quandle_forge::quandle::are_isomorphic;

fn main() {
    let r4 = dihedral(4).unwrap();
    let r8 = dihedral(8).unwrap();
    let phi = CocycleTable::parse(include_str!("../data/r4.coc"), 4, 2).unwrap();
    let e = abelian_extension(&r4, 2, &phi).unwrap();
    println!("E(R_4, phi):\n{e}");
    println!("isomorphic to R_8: {}", are_isomorphic(&e, &r8).is_some());

    // R_8 -> R_4 by reduction mod 4, section x -> x / 4
    let p: Vec<usize> = (0..8).map(|i| i % 4).collect();
    let section: Vec<usize> = (0..8).map(|i| i / 4).collect();
    let back = extract_cocycle(&r8, &r4, &p, Some(&section)).unwrap();
    println!("recovered cocycle:\n{}", back.to_text());
    assert_eq!(back, phi);

    // Galkin(Z_3, 0, 0) fibres over R_3 with fibre size 3
    let g = galkin(&AbelianGroupSpec::cyclic(3).unwrap(), 0, 0).unwrap();
    let r3 = dihedral(3).unwrap();
    let p: Vec<usize> = (0..9).map(|i| i / 3).collect();
    let alpha = fibration_to_dynamical(&g, &r3, &p).unwrap();
    println!("dynamical cocycle over R_3 with fibre {}:", alpha.fiber_size());
    for x in 0..3 {
        for y in 0..3 {
            let m: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| alpha.alpha(x, y, a, b)).collect()).collect();
            println!("  alpha_{x}{y} = {m:?}");
        }
    }
}
