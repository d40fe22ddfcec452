//! Finite groups given by verified Cayley tables.

use std::collections::HashMap;

use crate::error::{Axiom, Error, Result, Violation};
use crate::perm::{PermGroup, Permutation};
use crate::table::{CayleyTable, TableKind};

/// A Cayley table checked for associativity, a two-sided identity and inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: CayleyTable,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(table: CayleyTable) -> Result<Self> {
        let n = table.order();
        if n == 0 {
            return Err(Error::NotAGroup(vec![Violation {
                axiom: Axiom::Identity,
                witness: vec![],
            }]));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table.get(a, b);
                for c in 0..n {
                    if table.get(ab, c) != table.get(a, table.get(b, c)) {
                        return Err(Error::NotAGroup(vec![Violation {
                            axiom: Axiom::Associativity,
                            witness: vec![a, b, c],
                        }]));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x))
            .ok_or_else(|| {
                Error::NotAGroup(vec![Violation {
                    axiom: Axiom::Identity,
                    witness: vec![],
                }])
            })?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n).find(|&y| table.get(x, y) == identity).ok_or_else(|| {
                Error::NotAGroup(vec![Violation {
                    axiom: Axiom::Inverse,
                    witness: vec![x],
                }])
            })?;
            inverses.push(inv);
        }
        Ok(FiniteGroup {
            table: table.with_kind(TableKind::Group),
            identity,
            inverses,
        })
    }

    /// `Z_n` with addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::from_table(CayleyTable::from_fn(n, |a, b| (a + b) % n)?)
    }

    /// The group of a materialized permutation group; element `i` is `g.elements()[i]`.
    pub fn from_perm_group(g: &PermGroup) -> Self {
        let elems = g.elements();
        let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elems.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in elems {
            for b in elems {
                entries.push(index[&a.compose_unchecked(b)]);
            }
        }
        let table = CayleyTable::new(n, entries).expect("closed group");
        let identity = index[&Permutation::identity(g.degree())];
        let inverses = elems.iter().map(|p| index[&p.inverse()]).collect();
        FiniteGroup {
            table: table.with_kind(TableKind::Group),
            identity,
            inverses,
        }
    }

    /// Symmetric group on `k` points, elements in lexicographic image order.
    pub fn symmetric(k: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if k >= 2 {
            gens.push(Permutation::from_cycles(k, &[&[0, 1]])?);
            let cyc: Vec<usize> = (0..k).collect();
            gens.push(Permutation::from_cycles(k, &[&cyc])?);
        }
        Ok(Self::from_perm_group(&PermGroup::generate(&gens, k)?))
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let n = self.order();
        let mut member = vec![false; n];
        for &x in set {
            if x >= n {
                return false;
            }
            member[x] = true;
        }
        member[self.identity]
            && set
                .iter()
                .all(|&a| member[self.inv(a)] && set.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// Whether `map` (indexed by element) is a bijective homomorphism.
    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        let n = self.order();
        if map.len() != n || Permutation::from_images(map.to_vec()).is_err() {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == self.mul(map[a], map[b])))
    }

    /// Inner automorphism `x -> g x g^{-1}` as an element map.
    pub fn conjugation_by(&self, g: usize) -> Vec<usize> {
        let gi = self.inv(g);
        (0..self.order()).map(|x| self.mul(self.mul(g, x), gi)).collect()
    }
}
