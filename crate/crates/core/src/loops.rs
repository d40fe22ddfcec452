//! Quasigroups, loops and Moufang identities.

use rayon::prelude::*;

use crate::constructions::{AbelianGroupSpec, AutomorphismSpec};
use crate::enumeration::enumerate_alexander_tagged;
use crate::error::{invalid, Axiom, Error, Result, Violation};
use crate::perm::Permutation;
use crate::quandle::{classify, isomorphism, Quandle};
use crate::table::{CayleyTable, TableKind};

/// A table whose rows and columns are all permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuasigroup {
    table: CayleyTable,
}

/// A quasigroup with a two-sided identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLoop {
    quasigroup: FiniteQuasigroup,
    identity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistributivityFlags {
    pub left: bool,
    pub right: bool,
}

/// Outcome of one identity: `None` when it holds, else the first failing `(x, y, z)`.
pub type IdentityCheck = Option<[usize; 3]>;

/// The three Moufang identities
/// `x(y(xz)) = ((xy)x)z`, `z(x(yx)) = ((zx)y)x`, `(xy)(zx) = (x(yz))x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoufangReport {
    pub id1: IdentityCheck,
    pub id2: IdentityCheck,
    pub id3: IdentityCheck,
}

impl MoufangReport {
    pub fn all_hold(&self) -> bool {
        self.id1.is_none() && self.id2.is_none() && self.id3.is_none()
    }

    pub fn agree(&self) -> bool {
        let h = [self.id1.is_none(), self.id2.is_none(), self.id3.is_none()];
        h.iter().all(|&b| b == h[0])
    }
}

pub fn validate_quasigroup(t: &CayleyTable) -> Result<FiniteQuasigroup> {
    let n = t.order();
    let mut v = Vec::new();
    if let Some(a) = (0..n).find(|&a| !is_perm(n, t.row(a).iter().copied())) {
        v.push(Violation {
            axiom: Axiom::LeftInvertibility,
            witness: vec![a],
        });
    }
    if let Some(b) = (0..n).find(|&b| !is_perm(n, (0..n).map(|a| t.get(a, b)))) {
        v.push(Violation {
            axiom: Axiom::RightInvertibility,
            witness: vec![b],
        });
    }
    if v.is_empty() {
        Ok(FiniteQuasigroup {
            table: t.clone().with_kind(TableKind::Quasigroup),
        })
    } else {
        Err(Error::NotAQuasigroup(v))
    }
}

fn is_perm(n: usize, mut line: impl Iterator<Item = usize>) -> bool {
    let mut seen = vec![false; n];
    line.all(|x| !std::mem::replace(&mut seen[x], true))
}

/// The unique two-sided identity, if any.
pub fn find_identity(q: &FiniteQuasigroup) -> Option<usize> {
    let n = q.order();
    (0..n).find(|&e| (0..n).all(|x| q.op(e, x) == x && q.op(x, e) == x))
}

impl FiniteQuasigroup {
    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    /// `R_a⁻¹`: the `x` with `x * a = v`.
    pub fn right_div(&self, v: usize, a: usize) -> usize {
        (0..self.order()).find(|&x| self.op(x, a) == v).expect("column is a permutation")
    }

    /// `L_a⁻¹`: the `y` with `a * y = v`.
    pub fn left_div(&self, a: usize, v: usize) -> usize {
        self.table.row(a).iter().position(|&x| x == v).expect("row is a permutation")
    }

    pub fn is_medial(&self) -> bool {
        let n = self.order();
        (0..n).all(|u| {
            (0..n).all(|v| {
                let uv = self.op(u, v);
                (0..n).all(|w| {
                    let uw = self.op(u, w);
                    (0..n).all(|z| self.op(uv, self.op(w, z)) == self.op(uw, self.op(v, z)))
                })
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order()).all(|a| self.op(a, a) == a)
    }

    /// Lexicographically least `(x, y, z)` with `(xy)z ≠ x(yz)`.
    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.order();
        (0..n).into_par_iter().find_map_first(|x| {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
            None
        })
    }

    /// As a quandle, when the table is one.
    pub fn to_quandle(&self) -> Result<Quandle> {
        Quandle::verify(self.table.clone())
    }
}

pub fn distributivity_flags(q: &FiniteQuasigroup) -> DistributivityFlags {
    let n = q.order();
    let mut left = true;
    let mut right = true;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if left && q.op(x, q.op(y, z)) != q.op(q.op(x, y), q.op(x, z)) {
                    left = false;
                }
                if right && q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z)) {
                    right = false;
                }
            }
        }
    }
    DistributivityFlags { left, right }
}

impl FiniteLoop {
    pub fn from_quasigroup(q: FiniteQuasigroup) -> Result<Self> {
        match find_identity(&q) {
            Some(identity) => Ok(FiniteLoop {
                quasigroup: FiniteQuasigroup {
                    table: q.table.with_kind(TableKind::Loop),
                },
                identity,
            }),
            None => Err(Error::NotAQuasigroup(vec![Violation {
                axiom: Axiom::Identity,
                witness: vec![],
            }])),
        }
    }

    pub fn from_table(t: &CayleyTable) -> Result<Self> {
        Self::from_quasigroup(validate_quasigroup(t)?)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn quasigroup(&self) -> &FiniteQuasigroup {
        &self.quasigroup
    }

    pub fn order(&self) -> usize {
        self.quasigroup.order()
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.quasigroup.op(a, b)
    }

    pub fn is_commutative(&self) -> bool {
        self.quasigroup.is_commutative()
    }

    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        self.quasigroup.associativity_witness()
    }

    /// Least `k ≥ 1` with `x + … + x` (`k` terms, left-nested) equal to the
    /// identity for every `x`.
    pub fn exponent(&self) -> usize {
        let n = self.order();
        let mut result = 1;
        for x in 0..n {
            let mut k = 1;
            let mut p = x;
            while p != self.identity {
                p = self.op(p, x);
                k += 1;
                assert!(k <= n + 1, "powers of {x} do not return to the identity");
            }
            result = lcm(result, k);
        }
        result
    }

    /// The sub-magma generated by `gens`, closed under the operation.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut member = vec![false; n];
        let mut elems: Vec<usize> = Vec::new();
        for &g in gens {
            if !std::mem::replace(&mut member[g], true) {
                elems.push(g);
            }
        }
        let mut done = 0;
        while done < elems.len() {
            let a = elems[done];
            done += 1;
            for i in 0..done {
                let b = elems[i];
                for v in [self.op(a, b), self.op(b, a)] {
                    if !std::mem::replace(&mut member[v], true) {
                        elems.push(v);
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    pub fn is_associative_on(&self, set: &[usize]) -> bool {
        set.iter().all(|&x| {
            set.iter().all(|&y| {
                let xy = self.op(x, y);
                set.iter().all(|&z| self.op(xy, z) == self.op(x, self.op(y, z)))
            })
        })
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / crate::perm::gcd(a, b) * b
}

pub fn moufang_check(l: &FiniteLoop) -> MoufangReport {
    let n = l.order();
    let o = |a, b| l.op(a, b);
    let scan = |f: &(dyn Fn(usize, usize, usize) -> bool + Sync)| -> IdentityCheck {
        (0..n).into_par_iter().find_map_first(|x| {
            for y in 0..n {
                for z in 0..n {
                    if !f(x, y, z) {
                        return Some([x, y, z]);
                    }
                }
            }
            None
        })
    };
    MoufangReport {
        id1: scan(&|x, y, z| o(x, o(y, o(x, z))) == o(o(o(x, y), x), z)),
        id2: scan(&|x, y, z| o(z, o(x, o(y, x))) == o(o(o(z, x), y), x)),
        id3: scan(&|x, y, z| o(o(x, y), o(z, x)) == o(o(x, o(y, z)), x)),
    }
}

/// `x + y = R_a⁻¹(x) * L_a⁻¹(y)`. Its identity is `a * a`, which is `a`
/// whenever `a` is idempotent.
pub fn belousov_loop(q: &FiniteQuasigroup, a: usize) -> Result<FiniteLoop> {
    let n = q.order();
    if a >= n {
        return invalid(format!("element {a} out of range"));
    }
    let rinv: Vec<usize> = (0..n).map(|x| q.right_div(x, a)).collect();
    let linv: Vec<usize> = (0..n).map(|y| q.left_div(a, y)).collect();
    let t = CayleyTable::from_fn(n, |x, y| q.op(rinv[x], linv[y]))?;
    let l = FiniteLoop::from_table(&t)?;
    debug_assert_eq!(l.identity(), q.op(a, a));
    debug_assert!((0..n).all(|x| (0..n).all(|y| l.op(q.op(x, a), q.op(a, y)) == q.op(x, y))));
    Ok(l)
}

/// The commutative Moufang loop of order 81 and exponent 3 on `(Z_3)⁴`:
/// `x + y = (x0 + y0 + (x1 − y1)(x2 y3 − x3 y2), x1 + y1, x2 + y2, x3 + y3)`.
/// Index of `(x0, x1, x2, x3)` is `27 x0 + 9 x1 + 3 x2 + x3`.
pub fn zassenhaus81() -> FiniteLoop {
    let dec = |i: usize| [i / 27, i / 9 % 3, i / 3 % 3, i % 3].map(|v| v as i64);
    let t = CayleyTable::from_fn(81, |a, b| {
        let (x, y) = (dec(a), dec(b));
        let c0 = (x[0] + y[0] + (x[1] - y[1]) * (x[2] * y[3] - x[3] * y[2])).rem_euclid(3);
        let c: Vec<usize> = [c0, x[1] + y[1], x[2] + y[2], x[3] + y[3]]
            .iter()
            .map(|v| v.rem_euclid(3) as usize)
            .collect();
        c[0] * 27 + c[1] * 9 + c[2] * 3 + c[3]
    })
    .expect("in range");
    FiniteLoop::from_table(&t).expect("Zassenhaus table is a loop")
}

/// Properties asked of a finite magma `(X, +)`: a commutative loop, the
/// identity `(x+y)+(z+z) = (x+z)+(y+z)`, and an automorphism `f` with
/// `f(x) + f(x) = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagmaConditions {
    pub commutative_loop: bool,
    pub condition2: bool,
    /// The automorphism for the third condition; it is forced to be the
    /// inverse of doubling when one exists.
    pub square_root_automorphism: Option<Vec<usize>>,
}

impl MagmaConditions {
    pub fn all(&self) -> bool {
        self.commutative_loop && self.condition2 && self.square_root_automorphism.is_some()
    }
}

pub fn magma_conditions(l: &FiniteLoop) -> MagmaConditions {
    let n = l.order();
    let o = |a, b| l.op(a, b);
    let condition2 = (0..n).into_par_iter().all(|x| {
        (0..n).all(|y| (0..n).all(|z| o(o(x, y), o(z, z)) == o(o(x, z), o(y, z))))
    });
    let double: Vec<usize> = (0..n).map(|x| o(x, x)).collect();
    let root = Permutation::from_images(double).ok().map(|d| d.inverse().images().to_vec());
    let square_root_automorphism =
        root.filter(|f| (0..n).all(|x| (0..n).all(|y| f[o(x, y)] == o(f[x], f[y]))));
    MagmaConditions {
        commutative_loop: l.is_commutative(),
        condition2,
        square_root_automorphism,
    }
}

pub const TOYODA_MAX_ORDER: usize = 15;

/// For a Latin quandle: an Alexander quandle isomorphic to `q` when `q` is
/// medial, as `(group, automorphism, isomorphism q -> alexander(group, automorphism))`.
pub fn toyoda_witness(q: &Quandle) -> Result<Option<(AbelianGroupSpec, AutomorphismSpec, Permutation)>> {
    let n = q.order();
    if n > TOYODA_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order: n,
            range: "1..=15",
        });
    }
    if !classify::is_latin(q) {
        return invalid("quandle is not Latin");
    }
    let medial = classify::is_medial(q);
    let (res, tags) = enumerate_alexander_tagged(n)?;
    for (t, (m, a)) in res.tables.iter().zip(tags) {
        if isomorphism(q.table(), t).is_some() {
            assert!(medial, "non-medial quandle matched an Alexander quandle");
            let target = crate::constructions::alexander(&m, &a)?;
            let f = isomorphism(q.table(), target.table()).expect("same class");
            return Ok(Some((m, a, f)));
        }
    }
    assert!(!medial, "medial Latin quandle without an Alexander match");
    Ok(None)
}
