//! Colorings and the cocycle state sum for a few knots, from PD files and
//! from braid words.
//!
//! `cargo run --release --example knot_invariants`

use quandle_forge::cohomology::CocycleTable;
use quandle_forge::constructions::{alexander_poly, dihedral};
use quandle_forge::knots::{cocycle_invariant, colorings, parse_pd, KnotDiagram};

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let a4 = alexander_poly(2, &[1, 1, 1]).unwrap();
    let chi6 = CocycleTable::parse(&std::fs::read_to_string(format!("{data}/chi6.coc")).unwrap(), 4, 2).unwrap();
    let r3 = dihedral(3).unwrap();

    let mut knots: Vec<(String, KnotDiagram)> = ["trefoil", "figure8", "8_5"]
        .iter()
        .map(|n| (n.to_string(), parse_pd(&std::fs::read_to_string(format!("{data}/{n}.pd")).unwrap()).unwrap()))
        .collect();
    knots.push(("unknot (s1 s2^-1)".into(), KnotDiagram::from_braid(3, &[1, -2]).unwrap()));
    knots.push(("trefoil (s1^3)".into(), KnotDiagram::from_braid(2, &[1, 1, 1]).unwrap()));
    knots.push(("5_1 (s1^5)".into(), KnotDiagram::from_braid(2, &[1; 5]).unwrap()));

    for (name, k) in &knots {
        let phi = cocycle_invariant(k, &a4, &chi6).unwrap();
        println!(
            "{name:<18} crossings={:<2} writhe={:<3} R_3 colorings={:<3} state sum over A_4: {phi}",
            k.crossing_count(),
            k.writhe(),
            colorings(k, &r3).len(),
        );
    }
}
