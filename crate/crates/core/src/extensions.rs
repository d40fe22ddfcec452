//! Abelian extensions `E(X, Z_m, φ)`, cocycle extraction from a covering, and
//! extensions by dynamical cocycles.
//!
//! Pairs `(a, x)` are flattened to the index `a·|X| + x`.

use crate::cohomology::{cocycle_violation, CocycleTable};
use crate::error::{invalid, Error, Result};
use crate::quandle::{are_isomorphic, Quandle};
use crate::table::CayleyTable;

/// `(a_1, x_1) * (a_2, x_2) = (a_1 + φ(x_1, x_2), x_1 * x_2)`.
pub fn abelian_extension(x: &Quandle, m: u64, phi: &CocycleTable) -> Result<Quandle> {
    let n = x.order();
    if phi.degree != 2 || phi.order != n || phi.modulus != m {
        return invalid(format!(
            "cocycle has degree {}, order {}, modulus {}; expected 2, {n}, {m}",
            phi.degree, phi.order, phi.modulus
        ));
    }
    if let Some(witness) = cocycle_violation(x, phi) {
        return Err(Error::NotACocycle { witness });
    }
    let m = m as usize;
    let t = CayleyTable::from_fn(m * n, |i, j| {
        let (a1, x1) = (i / n, i % n);
        let x2 = j % n;
        ((a1 + phi.get(&[x1, x2]) as usize) % m) * n + x.op(x1, x2)
    })?;
    Quandle::verify(t)
}

/// Fibers of a surjection `p: E -> X`, each ascending, plus the common size.
fn fibers(e: &Quandle, x: &Quandle, p: &[usize]) -> Result<(Vec<Vec<usize>>, usize)> {
    if p.len() != e.order() || p.iter().any(|&v| v >= x.order()) {
        return invalid("map does not send E into X");
    }
    if !e.is_homomorphism_to(x, p) {
        return invalid("map is not a quandle homomorphism");
    }
    let mut f = vec![Vec::new(); x.order()];
    for (i, &v) in p.iter().enumerate() {
        f[v].push(i);
    }
    let size = f.first().map_or(0, |b| b.len());
    if size == 0 || f.iter().any(|b| b.len() != size) {
        return invalid("fibers are empty or of unequal size");
    }
    Ok((f, size))
}

pub const SECTION_SEARCH_MAX_FIBER: usize = 4;
pub const SECTION_SEARCH_MAX_BASE: usize = 8;

/// Reads `φ` off a covering `p: E -> X` with fibers of size `m`.
///
/// `section[e] = a` labels each element of `E` by its fiber coordinate, so that
/// `e` corresponds to `(section[e], p(e))`. Without a section, per-fiber
/// labelings are searched (fiber size ≤ 4, `|X|` ≤ 8) and the first one in
/// lexicographic order that fits is used.
pub fn extract_cocycle(e: &Quandle, x: &Quandle, p: &[usize], section: Option<&[usize]>) -> Result<CocycleTable> {
    let (fib, m) = fibers(e, x, p)?;
    let label = match section {
        Some(s) => {
            if s.len() != e.order() || s.iter().any(|&a| a >= m) {
                return invalid("section labels out of range");
            }
            for b in &fib {
                let mut seen = vec![false; m];
                for &i in b {
                    if std::mem::replace(&mut seen[s[i]], true) {
                        return invalid("section is not a bijection on a fiber");
                    }
                }
            }
            s.to_vec()
        }
        None => search_section(e, x, &fib, m)?,
    };
    let phi = read_cocycle(e, x, p, &label, m)?;
    if let Some(witness) = cocycle_violation(x, &phi) {
        return Err(Error::NotACocycle { witness });
    }
    Ok(phi)
}

fn read_cocycle(e: &Quandle, x: &Quandle, p: &[usize], label: &[usize], m: usize) -> Result<CocycleTable> {
    let n = x.order();
    let mut shift: Vec<Option<usize>> = vec![None; n * n];
    for i in 0..e.order() {
        for j in 0..e.order() {
            let k = e.op(i, j);
            let s = (label[k] + m - label[i]) % m;
            let slot = &mut shift[p[i] * n + p[j]];
            match *slot {
                None => *slot = Some(s),
                Some(prev) if prev != s => {
                    return invalid(format!(
                        "fiber shift over ({}, {}) depends on the fiber coordinates",
                        p[i], p[j]
                    ))
                }
                _ => {}
            }
        }
    }
    CocycleTable::from_fn(n, 2, m as u64, |t| shift[t[0] * n + t[1]].unwrap() as i64)
}

fn search_section(e: &Quandle, x: &Quandle, fib: &[Vec<usize>], m: usize) -> Result<Vec<usize>> {
    let n = x.order();
    if m > SECTION_SEARCH_MAX_FIBER || n > SECTION_SEARCH_MAX_BASE {
        return Err(Error::ResourceLimit {
            what: "section search (fiber size 4, base order 8)",
            bound: SECTION_SEARCH_MAX_FIBER.max(SECTION_SEARCH_MAX_BASE),
        });
    }
    // e1 * e2 may only depend on the fiber of e2
    for b in fib {
        for i in 0..e.order() {
            if b.iter().any(|&j| e.op(i, j) != e.op(i, b[0])) {
                return invalid("product depends on the right factor within a fiber");
            }
        }
    }
    // labelings with the least element of each fiber at 0; shifting a whole fiber
    // only moves φ by a coboundary
    let perms = labelings(m);
    let mut label = vec![usize::MAX; e.order()];
    let mut chosen = vec![usize::MAX; n];
    if place(e, x, fib, m, &perms, 0, &mut chosen, &mut label) {
        Ok(label)
    } else {
        invalid("no section puts the covering in extension form")
    }
}

fn labelings(m: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; m];
    used[0] = true;
    go(&mut vec![0], &mut used, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn place(
    e: &Quandle,
    x: &Quandle,
    fib: &[Vec<usize>],
    m: usize,
    perms: &[Vec<usize>],
    f: usize,
    chosen: &mut Vec<usize>,
    label: &mut Vec<usize>,
) -> bool {
    let n = x.order();
    if f == n {
        return true;
    }
    for (pi, perm) in perms.iter().enumerate() {
        chosen[f] = pi;
        for (k, &el) in fib[f].iter().enumerate() {
            label[el] = perm[k];
        }
        // fibers x1 and x1*x2 both labeled: left multiplication must be a translation
        let ok = (0..=f).all(|x1| {
            (0..n).all(|x2| {
                let x3 = x.op(x1, x2);
                if x3 > f {
                    return true;
                }
                let rep = fib[x2][0];
                let s = (label[e.op(fib[x1][0], rep)] + m - label[fib[x1][0]]) % m;
                fib[x1].iter().all(|&i| (label[e.op(i, rep)] + m - label[i]) % m == s)
            })
        });
        if ok && place(e, x, fib, m, perms, f + 1, chosen, label) {
            return true;
        }
    }
    for &el in &fib[f] {
        label[el] = usize::MAX;
    }
    false
}

/// A family `α_{x,y}: S × S -> S` indexed by pairs of a base quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynamicalCocycle {
    base: usize,
    fiber: usize,
    /// `values[((x·n + y)·s + a)·s + b] = α_{x,y}(a, b)`
    values: Vec<usize>,
}

impl DynamicalCocycle {
    pub fn from_fn(base: usize, fiber: usize, f: impl Fn(usize, usize, usize, usize) -> usize) -> Result<Self> {
        let mut values = Vec::with_capacity(base * base * fiber * fiber);
        for x in 0..base {
            for y in 0..base {
                for a in 0..fiber {
                    for b in 0..fiber {
                        let v = f(x, y, a, b);
                        if v >= fiber {
                            return invalid(format!("α_{{{x},{y}}}({a},{b}) = {v} lies outside the fiber"));
                        }
                        values.push(v);
                    }
                }
            }
        }
        Ok(DynamicalCocycle { base, fiber, values })
    }

    /// `α_{x,y}(a, b) = a + φ(x, y)` over `Z_m`.
    pub fn from_abelian(phi: &CocycleTable) -> Result<Self> {
        if phi.degree != 2 {
            return invalid("abelian cocycle must have degree 2");
        }
        let m = phi.modulus as usize;
        Self::from_fn(phi.order, m, |x, y, a, _| (a + phi.get(&[x, y]) as usize) % m)
    }

    pub fn base_order(&self) -> usize {
        self.base
    }

    pub fn fiber_size(&self) -> usize {
        self.fiber
    }

    pub fn alpha(&self, x: usize, y: usize, a: usize, b: usize) -> usize {
        let s = self.fiber;
        self.values[((x * self.base + y) * s + a) * s + b]
    }

    /// First failing condition with its witness `[x, y, z, a, b, c]` (unused
    /// coordinates dropped), if any.
    pub fn violation(&self, q: &Quandle) -> Option<(&'static str, Vec<usize>)> {
        let (n, s) = (self.base, self.fiber);
        if q.order() != n {
            return Some(("base order", vec![q.order()]));
        }
        for x in 0..n {
            for a in 0..s {
                if self.alpha(x, x, a, a) != a {
                    return Some(("idempotency", vec![x, a]));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for b in 0..s {
                    let mut seen = vec![false; s];
                    for a in 0..s {
                        if std::mem::replace(&mut seen[self.alpha(x, y, a, b)], true) {
                            return Some(("right invertibility", vec![x, y, b]));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (xy, xz, yz) = (q.op(x, y), q.op(x, z), q.op(y, z));
                    for a in 0..s {
                        for b in 0..s {
                            for c in 0..s {
                                let lhs = self.alpha(xy, z, self.alpha(x, y, a, b), c);
                                let rhs = self.alpha(xz, yz, self.alpha(x, z, a, c), self.alpha(y, z, b, c));
                                if lhs != rhs {
                                    return Some(("self-distributivity", vec![x, y, z, a, b, c]));
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

/// `(a, x) * (b, y) = (α_{x,y}(a, b), x * y)` on `S × X`.
pub fn dynamical_extension(x: &Quandle, alpha: &DynamicalCocycle) -> Result<Quandle> {
    if let Some((what, witness)) = alpha.violation(x) {
        return invalid(format!("dynamical cocycle fails {what} at {witness:?}"));
    }
    let n = x.order();
    let t = CayleyTable::from_fn(alpha.fiber * n, |i, j| {
        let (a, x1) = (i / n, i % n);
        let (b, x2) = (j / n, j % n);
        alpha.alpha(x1, x2, a, b) * n + x.op(x1, x2)
    })?;
    Quandle::verify(t)
}

/// Labels each fiber of `p` by position in ascending order and reads off `α`.
pub fn fibration_to_dynamical(e: &Quandle, x: &Quandle, p: &[usize]) -> Result<DynamicalCocycle> {
    let (fib, s) = fibers(e, x, p)?;
    let mut pos = vec![0; e.order()];
    for b in &fib {
        for (k, &i) in b.iter().enumerate() {
            pos[i] = k;
        }
    }
    let alpha = DynamicalCocycle::from_fn(x.order(), s, |x1, x2, a, b| pos[e.op(fib[x1][a], fib[x2][b])])?;
    if let Some((what, witness)) = alpha.violation(x) {
        return Err(Error::Invalid(format!("read-off cocycle fails {what} at {witness:?}")));
    }
    let rebuilt = dynamical_extension(x, &alpha)?;
    if are_isomorphic(&rebuilt, e).is_none() {
        return invalid("extension by the read-off cocycle is not isomorphic to E");
    }
    Ok(alpha)
}
