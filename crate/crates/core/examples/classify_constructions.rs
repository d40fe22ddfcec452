//! Builds each construction family and prints its structural flags, then
//! decomposes a few non-connected quandles.
//!
//! `cargo run --release --example classify_constructions`

use quandle_forge::constructions::{
    alexander_poly, conjugation, core, coxeter_fp, dihedral, galkin, trivial, AbelianGroupSpec,
};
use quandle_forge::group::FiniteGroup;
use quandle_forge::quandle::{automorphism_group, nelson_wong_decomposition, orbit_decomposition, verify_vendramin};
use quandle_forge::Quandle;

fn row(name: &str, q: &Quandle) {
    let r = q.classify().unwrap();
    let simple = r.simple.map_or("?".to_string(), |s| s.to_string());
    println!(
        "{name:<22} n={:<3} kei={:<5} latin={:<5} medial={:<5} connected={:<5} faithful={:<5} simple={:<5} |Inn|={:<4} |Aut|={}",
        q.order(),
        r.kei,
        r.latin,
        r.medial,
        r.connected,
        r.faithful,
        simple,
        r.inner_order,
        automorphism_group(q).unwrap().order(),
    );
}

fn main() {
    let z3 = AbelianGroupSpec::cyclic(3).unwrap();
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let family: Vec<(&str, Quandle)> = vec![
        ("T_3", trivial(3).unwrap()),
        ("R_3", dihedral(3).unwrap()),
        ("R_4", dihedral(4).unwrap()),
        ("R_5", dihedral(5).unwrap()),
        ("Z_2[T]/(T^2+T+1)", alexander_poly(2, &[1, 1, 1]).unwrap()),
        ("Z_5[T]/(T-2)", alexander_poly(5, &[-2, 1]).unwrap()),
        ("Conj(S_3)", conjugation(&s3).unwrap()),
        ("Core(S_3)", core(&s3).unwrap()),
        ("Galkin(Z_3, 0, 0)", galkin(&z3, 0, 0).unwrap()),
        ("Galkin(Z_3, 1, 2)", galkin(&z3, 1, 2).unwrap()),
        ("Coxeter(F_3, I_2)", coxeter_fp(3, &[vec![1, 0], vec![0, 1]]).unwrap()),
    ];
    for (name, q) in &family {
        row(name, q);
    }

    println!();
    for (name, q) in &family {
        if q.classify().unwrap().connected && q.order() <= 8 {
            println!("{name}: rebuilt as a homogeneous quandle: {}", verify_vendramin(q).unwrap());
        }
    }

    println!();
    for (name, q) in [("R_4", dihedral(4).unwrap()), ("Conj(S_3)", conjugation(&s3).unwrap())] {
        let orbits: Vec<_> = orbit_decomposition(&q).into_iter().map(|b| b.elements).collect();
        let nw: Vec<_> = nelson_wong_decomposition(&q).unwrap().into_iter().map(|b| b.elements).collect();
        println!("{name}: orbits {orbits:?}, minimal complemented blocks {nw:?}");
    }
}
