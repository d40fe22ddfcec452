//! Canonical labeling, isomorphism and automorphism search for Cayley tables.
//!
//! The canonical form of a table is the lexicographically least row-major
//! flattening over all `n!` relabelings. The search branches only while
//! filling row 0: once a label has been chosen for the column index, the
//! entry value either already has a label or receives the next free one
//! (any other choice would give a larger entry). Branches are cut by the
//! running best table and by automorphisms discovered at leaves.

use crate::error::{Error, Result};
use crate::perm::{closure_bound, PermGroup, Permutation, UnionFind};
use crate::table::CayleyTable;

use super::Quandle;

const NONE: usize = usize::MAX;

/// The canonical table and one labeling producing it (`labeling[new] = old`).
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    pub table: CayleyTable,
    pub labeling: Vec<usize>,
}

enum Flow {
    Continue,
    /// unwind to the node that branches on this label
    Jump(usize),
}

struct Search<'a> {
    n: usize,
    t: &'a [usize],
    g: Vec<usize>,
    f: Vec<usize>,
    best: Vec<usize>,
    best_g: Vec<usize>,
    autos: Vec<Vec<usize>>,
    scratch: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(n: usize, t: &'a [usize]) -> Self {
        Search {
            n,
            t,
            g: Vec::with_capacity(n),
            f: vec![NONE; n],
            best: Vec::new(),
            best_g: Vec::new(),
            autos: Vec::new(),
            scratch: vec![0; n * n],
        }
    }

    fn assign(&mut self, x: usize) {
        self.f[x] = self.g.len();
        self.g.push(x);
    }

    fn undo_to(&mut self, k: usize) {
        while self.g.len() > k {
            let x = self.g.pop().unwrap();
            self.f[x] = NONE;
        }
    }

    /// True if `c` lies in the orbit of a tried candidate under the stored
    /// automorphisms that fix every labeled element.
    fn equivalent_to_tried(&self, c: usize, tried: &[usize]) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| self.g.iter().all(|&x| a[x] == x))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for a in fixing {
            for x in 0..self.n {
                uf.union(x, a[x]);
            }
        }
        let rc = uf.find(c);
        tried.iter().any(|&t| uf.find(t) == rc)
    }

    fn descend(&mut self, j: usize) -> Flow {
        if j == self.n {
            return self.leaf();
        }
        if self.g.len() > j {
            return self.place(j);
        }
        let candidates: Vec<usize> = (0..self.n).filter(|&x| self.f[x] == NONE).collect();
        let mut tried: Vec<usize> = Vec::new();
        for c in candidates {
            if !tried.is_empty() && self.equivalent_to_tried(c, &tried) {
                continue;
            }
            tried.push(c);
            self.assign(c);
            let flow = self.place(j);
            self.undo_to(j);
            if let Flow::Jump(level) = flow {
                if level < j {
                    return flow;
                }
            }
        }
        Flow::Continue
    }

    /// Row 0 entries are compared against the current best on every call,
    /// since the best can improve while a branch is open.
    fn place(&mut self, j: usize) -> Flow {
        let n = self.n;
        let mark = self.g.len();
        let v = self.t[self.g[0] * n + self.g[j]];
        if self.f[v] == NONE {
            self.assign(v);
        }
        if !self.best.is_empty() {
            let row0 = self.g[0] * n;
            for i in 0..=j {
                let e = self.f[self.t[row0 + self.g[i]]];
                if e != self.best[i] {
                    if e > self.best[i] {
                        self.undo_to(mark);
                        return Flow::Continue;
                    }
                    break;
                }
            }
        }
        let flow = self.descend(j + 1);
        self.undo_to(mark);
        flow
    }

    fn leaf(&mut self) -> Flow {
        let n = self.n;
        debug_assert_eq!(self.g.len(), n);
        let mut less = self.best.is_empty();
        for i in 0..n {
            for j in 0..n {
                let e = self.f[self.t[self.g[i] * n + self.g[j]]];
                let pos = i * n + j;
                self.scratch[pos] = e;
                if !less {
                    if e > self.best[pos] {
                        return Flow::Continue;
                    }
                    less = e < self.best[pos];
                }
            }
        }
        if less {
            self.best.clone_from(&self.scratch);
            self.best_g.clone_from(&self.g);
            return Flow::Continue;
        }
        // equal to the best table: the two labelings differ by an automorphism
        let mut auto = vec![0; n];
        for i in 0..n {
            auto[self.best_g[i]] = self.g[i];
        }
        self.autos.push(auto);
        let first_diff = (0..n).find(|&i| self.g[i] != self.best_g[i]).unwrap_or(0);
        Flow::Jump(first_diff)
    }
}

/// Lexicographically least relabeling of an arbitrary table.
pub fn canonical_labeling(t: &CayleyTable) -> CanonicalLabeling {
    let n = t.order();
    if n == 0 {
        return CanonicalLabeling {
            table: t.clone(),
            labeling: Vec::new(),
        };
    }
    let mut s = Search::new(n, t.entries());
    s.descend(0);
    let table = CayleyTable::new(n, s.best).expect("labels stay in range").with_kind(t.kind());
    CanonicalLabeling {
        table,
        labeling: s.best_g,
    }
}

/// The canonical representative of `q`'s isomorphism class.
pub fn canonical_form(q: &Quandle) -> CayleyTable {
    canonical_labeling(q.table()).table
}

/// An isomorphism `f` with `f(a*b) = f(a) ▷ f(b)` between two tables, if any.
pub fn isomorphism(t1: &CayleyTable, t2: &CayleyTable) -> Option<Permutation> {
    if t1.order() != t2.order() {
        return None;
    }
    let c1 = canonical_labeling(t1);
    let c2 = canonical_labeling(t2);
    if c1.table.entries() != c2.table.entries() {
        return None;
    }
    let n = t1.order();
    let mut f = vec![0; n];
    for i in 0..n {
        f[c1.labeling[i]] = c2.labeling[i];
    }
    Some(Permutation::from_images_unchecked(f))
}

/// Isomorphism between two quandles with witness relabeling `q1 -> q2`.
pub fn are_isomorphic(q1: &Quandle, q2: &Quandle) -> Option<Permutation> {
    isomorphism(q1.table(), q2.table())
}

/// Every automorphism of a table by propagation-pruned backtracking.
pub(crate) fn all_automorphisms(t: &CayleyTable, limit: usize) -> Result<Vec<Vec<usize>>> {
    let n = t.order();
    let mut out = Vec::new();
    let mut sigma = vec![NONE; n];
    let mut used = vec![false; n];
    let mut trail = Vec::new();
    auto_rec(t, &mut sigma, &mut used, &mut trail, &mut out, limit)?;
    Ok(out)
}

fn auto_rec(
    t: &CayleyTable,
    sigma: &mut [usize],
    used: &mut [bool],
    trail: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    let n = t.order();
    let Some(x) = (0..n).find(|&x| sigma[x] == NONE) else {
        if out.len() >= limit {
            return Err(Error::ResourceLimit {
                what: "automorphism group",
                bound: limit,
            });
        }
        out.push(sigma.to_vec());
        return Ok(());
    };
    for y in 0..n {
        if used[y] {
            continue;
        }
        let mark = trail.len();
        if propagate(t, sigma, used, trail, x, y) {
            auto_rec(t, sigma, used, trail, out, limit)?;
        }
        while trail.len() > mark {
            let z = trail.pop().unwrap();
            used[sigma[z]] = false;
            sigma[z] = NONE;
        }
    }
    Ok(())
}

/// Sets `sigma(x) = y` and closes under `sigma(a*b) = sigma(a)*sigma(b)`.
fn propagate(
    t: &CayleyTable,
    sigma: &mut [usize],
    used: &mut [bool],
    trail: &mut Vec<usize>,
    x: usize,
    y: usize,
) -> bool {
    let n = t.order();
    let mut queue = vec![(x, y)];
    while let Some((a, b)) = queue.pop() {
        if sigma[a] != NONE {
            if sigma[a] != b {
                return false;
            }
            continue;
        }
        if used[b] {
            return false;
        }
        sigma[a] = b;
        used[b] = true;
        trail.push(a);
        for c in 0..n {
            if sigma[c] == NONE {
                continue;
            }
            for (p, q) in [(a, c), (c, a)] {
                let v = t.get(p, q);
                let w = t.get(sigma[p], sigma[q]);
                if sigma[v] == NONE {
                    queue.push((v, w));
                } else if sigma[v] != w {
                    return false;
                }
            }
        }
    }
    true
}

/// `Aut(q)` by exhaustive pruned search; supported for order ≤ 12.
pub fn automorphism_group(q: &Quandle) -> Result<PermGroup> {
    let n = q.order();
    if n > 12 {
        return Err(Error::OrderOutOfRange {
            order: n,
            range: "1..=12",
        });
    }
    let autos = all_automorphisms(q.table(), closure_bound())?;
    let elems = autos.into_iter().map(Permutation::from_images_unchecked).collect();
    Ok(PermGroup::from_closed_elements(n, elems))
}
