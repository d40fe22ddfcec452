//! Finite quandles: verification, translations, inner and transvection groups.
//!
//! Tables follow `get(a, b) = a * b`, so the column of `b` is the right
//! translation `R_b`. Indices are 0-based throughout.

mod canon;
pub(crate) mod classify;
mod decompose;
mod vendramin;

use std::fmt;

pub use canon::{are_isomorphic, automorphism_group, canonical_form, canonical_labeling, isomorphism};
pub use classify::{
    classify, is_connected, is_faithful, is_kei, is_latin, is_left_distributive, is_medial, is_simple, orbit_count,
    ClassificationReport,
};
pub use decompose::{nelson_wong_decomposition, orbit_decomposition, Subquandle};
pub use vendramin::verify_vendramin;

use crate::error::{Axiom, Error, Result, Violation};
use crate::perm::{PermGroup, Permutation};
use crate::table::{CayleyTable, TableKind};

/// A Cayley table that satisfies the three quandle axioms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    table: CayleyTable,
}

/// The row function `x -> a * x`, which need not be a bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftMap {
    pub images: Vec<usize>,
    pub bijective: bool,
}

/// Checks idempotency, right invertibility and right self-distributivity.
///
/// On failure the error lists one witness per failing axiom.
pub fn verify_quandle(t: &CayleyTable) -> Result<Quandle> {
    let v = quandle_violations(t);
    if v.is_empty() {
        Ok(Quandle {
            table: t.clone().with_kind(TableKind::Quandle),
        })
    } else {
        Err(Error::NotAQuandle(v))
    }
}

pub fn quandle_violations(t: &CayleyTable) -> Vec<Violation> {
    let n = t.order();
    let mut out = Vec::new();
    if let Some(a) = (0..n).find(|&a| t.get(a, a) != a) {
        out.push(Violation {
            axiom: Axiom::Idempotency,
            witness: vec![a],
        });
    }
    'cols: for b in 0..n {
        let mut seen = vec![false; n];
        for a in 0..n {
            let v = t.get(a, b);
            if seen[v] {
                out.push(Violation {
                    axiom: Axiom::RightInvertibility,
                    witness: vec![b],
                });
                break 'cols;
            }
            seen[v] = true;
        }
    }
    if let Some(w) = first_sd_failure(t) {
        out.push(Violation {
            axiom: Axiom::SelfDistributivity,
            witness: w,
        });
    }
    out
}

pub(crate) fn first_sd_failure(t: &CayleyTable) -> Option<Vec<usize>> {
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            let ab = t.get(a, b);
            for c in 0..n {
                if t.get(ab, c) != t.get(t.get(a, c), t.get(b, c)) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

impl Quandle {
    pub fn verify(t: CayleyTable) -> Result<Quandle> {
        verify_quandle(&t)
    }

    /// Skips verification; callers guarantee the axioms.
    pub(crate) fn from_verified(t: CayleyTable) -> Quandle {
        debug_assert!(quandle_violations(&t).is_empty(), "{t:?}");
        Quandle {
            table: t.with_kind(TableKind::Quandle),
        }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    /// `R_b : x -> x * b`.
    pub fn right_map(&self, b: usize) -> Result<Permutation> {
        self.check_index(b)?;
        Ok(Permutation::from_images_unchecked(self.table.column(b)))
    }

    pub fn right_maps(&self) -> Vec<Permutation> {
        (0..self.order())
            .map(|b| Permutation::from_images_unchecked(self.table.column(b)))
            .collect()
    }

    /// `L_a : x -> a * x`.
    pub fn left_map(&self, a: usize) -> Result<LeftMap> {
        self.check_index(a)?;
        let images = self.table.row(a).to_vec();
        let bijective = Permutation::from_images(images.clone()).is_ok();
        Ok(LeftMap { images, bijective })
    }

    /// `Inn(X)`, generated by all right translations.
    pub fn inner_group(&self) -> Result<PermGroup> {
        PermGroup::generate(&self.right_maps(), self.order())
    }

    /// `Transv(X)`, generated by all `R_x ∘ R_y^{-1}`.
    pub fn transvection_group(&self) -> Result<PermGroup> {
        let rs = self.right_maps();
        let mut gens = Vec::new();
        // R_x R_y^{-1} for a fixed y already generate together with their products
        for x in &rs {
            for y in &rs {
                gens.push(x.compose_unchecked(&y.inverse()));
            }
        }
        gens.sort();
        gens.dedup();
        PermGroup::generate(&gens, self.order())
    }

    /// Checks `R_c ∘ R_b = R_{b*c} ∘ R_c` for all `b, c`; returns the first failing pair.
    pub fn inner_relation_failure(&self) -> Option<(usize, usize)> {
        let rs = self.right_maps();
        let n = self.order();
        for b in 0..n {
            for c in 0..n {
                let lhs = rs[c].compose_unchecked(&rs[b]);
                let rhs = rs[self.op(b, c)].compose_unchecked(&rs[c]);
                if lhs != rhs {
                    return Some((b, c));
                }
            }
        }
        None
    }

    /// Whether `f` (indexed by element of `self`) is a homomorphism into `other`.
    pub fn is_homomorphism_to(&self, other: &Quandle, f: &[usize]) -> bool {
        let n = self.order();
        f.len() == n
            && f.iter().all(|&v| v < other.order())
            && (0..n).all(|a| (0..n).all(|b| f[self.op(a, b)] == other.op(f[a], f[b])))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.order() {
            return Err(Error::Invalid(format!("index {i} out of range for order {}", self.order())));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        self.table.to_text()
    }

    /// Columns as disjoint cycles, 1-indexed, comma separated.
    pub fn column_cycles(&self) -> String {
        self.right_maps()
            .iter()
            .map(|p| p.cycle_string(1))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quandle(n={}, {:?})", self.order(), self.table.entries())
    }
}

impl fmt::Display for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral, trivial};

    fn brute_force_is_quandle(t: &CayleyTable) -> bool {
        let n = t.order();
        let idem = (0..n).all(|a| t.get(a, a) == a);
        let right = (0..n).all(|b| {
            let mut c = t.column(b);
            c.sort();
            c == (0..n).collect::<Vec<_>>()
        });
        let sd = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| t.get(t.get(a, b), c) == t.get(t.get(a, c), t.get(b, c))))
        });
        idem && right && sd
    }

    #[test]
    fn verify_examples() {
        let triv = CayleyTable::from_fn(3, |a, _| a).unwrap();
        assert!(verify_quandle(&triv).is_ok());

        let mut e = triv.entries().to_vec();
        e[0] = 1;
        let bad = CayleyTable::new(3, e).unwrap();
        match verify_quandle(&bad) {
            Err(Error::NotAQuandle(v)) => {
                assert_eq!(v[0].axiom, Axiom::Idempotency);
                assert_eq!(v[0].witness, vec![0]);
            }
            other => panic!("{other:?}"),
        }

        let r5 = CayleyTable::from_fn(5, |a, b| (2 * b + 5 - a) % 5).unwrap();
        assert!(verify_quandle(&r5).is_ok());
    }

    #[test]
    fn translations() {
        let t = trivial(4).unwrap();
        assert!(t.right_map(2).unwrap().is_identity());
        let r4 = dihedral(4).unwrap();
        assert_eq!(r4.right_map(0).unwrap(), Permutation::from_cycles(4, &[&[1, 3]]).unwrap());
        assert!(!r4.left_map(0).unwrap().bijective);
        assert!(r4.right_map(4).is_err());
    }

    #[test]
    fn inner_and_transvection_groups() {
        assert_eq!(trivial(5).unwrap().inner_group().unwrap().order(), 1);
        let r3 = dihedral(3).unwrap();
        assert_eq!(r3.inner_group().unwrap().order(), 6);
        assert_eq!(r3.transvection_group().unwrap().order(), 3);
        assert!(r3.inner_group().unwrap().is_transitive());
        let inn4 = dihedral(4).unwrap().inner_group().unwrap();
        assert_eq!(inn4.orbits(), vec![vec![0, 2], vec![1, 3]]);
        assert!(!inn4.is_transitive());
        assert!(dihedral(5).unwrap().inner_group().unwrap().is_transitive());
    }

    #[test]
    fn inner_quotient_is_cyclic_for_r3() {
        let r3 = dihedral(3).unwrap();
        let inn = r3.inner_group().unwrap();
        let tr = r3.transvection_group().unwrap();
        assert!(inn.quotient_is_cyclic(&tr).unwrap());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(300))]
            // random order-3 tables: verify agrees with the brute-force axiom loops
            #[test]
            fn verify_matches_brute_force(entries in proptest::collection::vec(0usize..3, 9)) {
                let t = CayleyTable::new(3, entries).unwrap();
                prop_assert_eq!(verify_quandle(&t).is_ok(), brute_force_is_quandle(&t));
            }
        }

        #[test]
        fn verify_matches_brute_force_on_every_order_two_and_three_table() {
            for n in 1..=3usize {
                let total = n.pow((n * n) as u32);
                for code in 0..total {
                    let mut c = code;
                    let entries: Vec<usize> = (0..n * n)
                        .map(|_| {
                            let v = c % n;
                            c /= n;
                            v
                        })
                        .collect();
                    let t = CayleyTable::new(n, entries).unwrap();
                    assert_eq!(verify_quandle(&t).is_ok(), brute_force_is_quandle(&t));
                }
            }
        }
    }
}
