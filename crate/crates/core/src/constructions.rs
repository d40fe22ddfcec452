//! Concrete quandle and quasigroup constructions. Every constructor verifies
//! its output before returning it.

use crate::error::{invalid, Error, Result};
use crate::group::FiniteGroup;
use crate::loops::{validate_quasigroup, FiniteQuasigroup};
use crate::perm::gcd;
use crate::quandle::{verify_quandle, Quandle};
use crate::table::CayleyTable;

/// A finite abelian group `Z_{n_0} × … × Z_{n_{k-1}}`.
///
/// Elements are encoded in mixed radix with coordinate 0 least significant:
/// `x = x_0 + n_0 (x_1 + n_1 (x_2 + …))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupSpec {
    orders: Vec<usize>,
}

impl AbelianGroupSpec {
    /// Factors of order 1 are allowed and contribute nothing.
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        if orders.contains(&0) {
            return invalid("cyclic factor of order 0");
        }
        Ok(AbelianGroupSpec { orders })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.orders.len());
        let mut x = 0;
        for (c, o) in coords.iter().zip(&self.orders).rev() {
            x = x * o + c % o;
        }
        x
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|o| {
                let c = x % o;
                x /= o;
                c
            })
            .collect()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.decode(x), self.decode(y));
        let s: Vec<usize> = a.iter().zip(&b).zip(&self.orders).map(|((p, q), o)| (p + q) % o).collect();
        self.encode(&s)
    }

    pub fn neg(&self, x: usize) -> usize {
        self.scale(-1, x)
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `k·x` for any integer `k`.
    pub fn scale(&self, k: i64, x: usize) -> usize {
        let c: Vec<usize> = self
            .decode(x)
            .iter()
            .zip(&self.orders)
            .map(|(&v, &o)| (k * v as i64).rem_euclid(o as i64) as usize)
            .collect();
        self.encode(&c)
    }

    /// Addition table, for use as a group.
    pub fn group(&self) -> FiniteGroup {
        let t = CayleyTable::from_fn(self.size(), |a, b| self.add(a, b)).expect("closed");
        FiniteGroup::from_table(t).expect("abelian group")
    }
}

/// An endomorphism of an [`AbelianGroupSpec`], checked to be bijective when resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphismSpec {
    /// Multiplication by an integer.
    Unit(i64),
    /// `y_i = Σ_j m[i][j] x_j mod n_i`.
    Matrix(Vec<Vec<i64>>),
}

impl AutomorphismSpec {
    /// The induced element map, or an error if it is not a well-defined
    /// bijective homomorphism.
    pub fn to_map(&self, m: &AbelianGroupSpec) -> Result<Vec<usize>> {
        let map = self.to_map_unchecked(m)?;
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if std::mem::replace(&mut seen[v], true) {
                return invalid("endomorphism is not bijective");
            }
        }
        Ok(map)
    }

    pub(crate) fn to_map_unchecked(&self, m: &AbelianGroupSpec) -> Result<Vec<usize>> {
        match self {
            AutomorphismSpec::Unit(t) => Ok((0..m.size()).map(|x| m.scale(*t, x)).collect()),
            AutomorphismSpec::Matrix(mat) => {
                let k = m.orders.len();
                if mat.len() != k || mat.iter().any(|r| r.len() != k) {
                    return Err(Error::DegreeMismatch(mat.len(), k));
                }
                // x_j is only defined mod n_j, so n_j m[i][j] must vanish mod n_i
                for i in 0..k {
                    for j in 0..k {
                        if (mat[i][j] * m.orders[j] as i64).rem_euclid(m.orders[i] as i64) != 0 {
                            return invalid(format!("matrix entry ({i},{j}) is not a homomorphism"));
                        }
                    }
                }
                Ok((0..m.size())
                    .map(|x| {
                        let c = m.decode(x);
                        let y: Vec<usize> = (0..k)
                            .map(|i| {
                                let s: i64 = (0..k).map(|j| mat[i][j] * c[j] as i64).sum();
                                s.rem_euclid(m.orders[i] as i64) as usize
                            })
                            .collect();
                        m.encode(&y)
                    })
                    .collect())
            }
        }
    }
}

pub fn trivial(n: usize) -> Result<Quandle> {
    check_order(n)?;
    Ok(Quandle::from_verified(CayleyTable::from_fn(n, |a, _| a)?))
}

/// `R_n`: `a * b = 2b − a mod n`.
pub fn dihedral(n: usize) -> Result<Quandle> {
    check_order(n)?;
    Ok(Quandle::from_verified(CayleyTable::from_fn(n, |a, b| (2 * b + n - a) % n)?))
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OrderOutOfRange { order: 0, range: "n >= 1" });
    }
    Ok(())
}

/// `a * b = b a b⁻¹`.
pub fn conjugation(g: &FiniteGroup) -> Result<Quandle> {
    let t = CayleyTable::from_fn(g.order(), |a, b| g.mul(g.mul(b, a), g.inv(b)))?;
    verify_quandle(&t)
}

/// `x * y = y x⁻¹ y`.
pub fn core(g: &FiniteGroup) -> Result<Quandle> {
    let t = CayleyTable::from_fn(g.order(), |x, y| g.mul(g.mul(y, g.inv(x)), y))?;
    verify_quandle(&t)
}

/// `x * y = t(x − y) + y`.
pub fn alexander(m: &AbelianGroupSpec, t: &AutomorphismSpec) -> Result<Quandle> {
    let map = t.to_map(m)?;
    let q = alexander_from_map(m, &map)?;
    if !crate::quandle::is_medial(&q) {
        return invalid("Alexander quandle failed the medial law");
    }
    Ok(q)
}

pub(crate) fn alexander_table(m: &AbelianGroupSpec, map: &[usize]) -> CayleyTable {
    let n = m.size();
    let neg: Vec<usize> = (0..n).map(|x| m.neg(x)).collect();
    let add = |x: usize, y: usize| m.add(x, y);
    CayleyTable::from_fn(n, |x, y| add(map[add(x, neg[y])], y)).expect("in range")
}

fn alexander_from_map(m: &AbelianGroupSpec, map: &[usize]) -> Result<Quandle> {
    verify_quandle(&alexander_table(m, map))
}

/// The Alexander quandle `Z_q[T]/(p(T))` with `t` = multiplication by `T`.
///
/// `coeffs` lists `p` from the constant term upward and must be monic.
/// Elements are coefficient vectors `c_0 + c_1 T + …`, encoded as in
/// [`AbelianGroupSpec`] over `[q; deg p]`.
pub fn alexander_poly(q: usize, coeffs: &[i64]) -> Result<Quandle> {
    let (group, t) = poly_action(q, coeffs)?;
    alexander(&group, &t)
}

pub(crate) fn poly_action(q: usize, coeffs: &[i64]) -> Result<(AbelianGroupSpec, AutomorphismSpec)> {
    if q < 2 {
        return invalid("coefficient ring Z_q needs q >= 2");
    }
    let d = coeffs.len().saturating_sub(1);
    if d == 0 || coeffs[d].rem_euclid(q as i64) != 1 {
        return invalid("polynomial must be monic of degree >= 1");
    }
    if gcd(coeffs[0].rem_euclid(q as i64) as usize, q) != 1 {
        return invalid("T is not invertible: constant term is not a unit");
    }
    let mut mat = vec![vec![0i64; d]; d];
    for j in 0..d - 1 {
        mat[j + 1][j] = 1;
    }
    for (i, row) in mat.iter_mut().enumerate() {
        row[d - 1] = (-coeffs[i]).rem_euclid(q as i64);
    }
    Ok((AbelianGroupSpec::new(vec![q; d])?, AutomorphismSpec::Matrix(mat)))
}

/// `Hx * Hy = H φ(x y⁻¹) y` on right cosets of `h`, numbered by least element.
pub fn homogeneous(g: &FiniteGroup, h: &[usize], phi: &[usize]) -> Result<Quandle> {
    if !g.is_subgroup(h) {
        return invalid("H is not a subgroup");
    }
    if !g.is_automorphism(phi) {
        return invalid("phi is not a group automorphism");
    }
    if let Some(&x) = h.iter().find(|&&x| phi[x] != x) {
        return invalid(format!("phi does not fix element {x} of H"));
    }
    let n = g.order();
    let mut coset = vec![usize::MAX; n];
    let mut count = 0;
    for x in 0..n {
        if coset[x] == usize::MAX {
            for &y in h {
                coset[g.mul(y, x)] = count;
            }
            count += 1;
        }
    }
    let mut entries = vec![usize::MAX; count * count];
    for x in 0..n {
        for y in 0..n {
            let v = coset[g.mul(phi[g.mul(x, g.inv(y))], y)];
            let slot = &mut entries[coset[x] * count + coset[y]];
            if *slot == usize::MAX {
                *slot = v;
            } else if *slot != v {
                return invalid("operation is not well defined on cosets");
            }
        }
    }
    verify_quandle(&CayleyTable::new(count, entries)?)
}

/// Galkin's quandle on `Z_3 × A`, with `τ(1) = c1`, `τ(2) = c2`.
///
/// `(x,a) * (y,b) = (2y − x, −a + μ(x−y) b + τ(x−y))`, `μ(0) = 2`,
/// `μ(1) = μ(2) = −1`. Element `(x, a)` has index `x·|A| + a`.
pub fn galkin(a: &AbelianGroupSpec, c1: usize, c2: usize) -> Result<Quandle> {
    let s = a.size();
    if c1 >= s || c2 >= s {
        return invalid("Galkin parameters must be elements of A");
    }
    let tau = [0, c1, c2];
    let mu = [2i64, -1, -1];
    let t = CayleyTable::from_fn(3 * s, |p, r| {
        let (x, u) = (p / s, p % s);
        let (y, v) = (r / s, r % s);
        let d = (x + 3 - y) % 3;
        let fiber = a.add(a.add(a.neg(u), a.scale(mu[d], v)), tau[d]);
        ((2 * y + 3 - x) % 3) * s + fiber
    })?;
    verify_quandle(&t)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Coxeter quandle over `(Z_p)^dim`: `x * y = (2⟨x,y⟩/⟨y,y⟩) y − x` on
/// the vectors with `⟨v,v⟩ ≠ 0`, listed in mixed-radix order.
pub fn coxeter_fp(p: u64, form: &[Vec<i64>]) -> Result<Quandle> {
    if p == 2 || !is_prime(p) {
        return invalid("Coxeter quandles need an odd prime p");
    }
    let dim = form.len();
    if dim == 0 || form.iter().any(|r| r.len() != dim) {
        return invalid("form must be a non-empty square matrix");
    }
    if (0..dim).any(|i| (0..dim).any(|j| (form[i][j] - form[j][i]).rem_euclid(p as i64) != 0)) {
        return invalid("form is not symmetric");
    }
    let pi = p as i64;
    let space = AbelianGroupSpec::new(vec![p as usize; dim])?;
    let ip = |x: &[usize], y: &[usize]| -> i64 {
        let mut s = 0;
        for i in 0..dim {
            for j in 0..dim {
                s += form[i][j] * x[i] as i64 * y[j] as i64;
            }
        }
        s.rem_euclid(pi)
    };
    let vecs: Vec<Vec<usize>> = (0..space.size())
        .map(|i| space.decode(i))
        .filter(|v| ip(v, v) != 0)
        .collect();
    if vecs.is_empty() {
        return invalid("form has no anisotropic vectors");
    }
    let index: std::collections::HashMap<&[usize], usize> =
        vecs.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    let inv = |a: i64| mod_pow(a, pi - 2, pi);
    let n = vecs.len();
    let mut entries = Vec::with_capacity(n * n);
    for x in &vecs {
        for y in &vecs {
            let k = (2 * ip(x, y) % pi * inv(ip(y, y))) % pi;
            let z: Vec<usize> = (0..dim)
                .map(|i| (k * y[i] as i64 - x[i] as i64).rem_euclid(pi) as usize)
                .collect();
            match index.get(z.as_slice()) {
                Some(&v) => entries.push(v),
                None => return invalid("operation leaves the anisotropic vectors"),
            }
        }
    }
    verify_quandle(&CayleyTable::new(n, entries)?)
}

fn mod_pow(mut b: i64, mut e: i64, m: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(m);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// `x * y = f(x) + g(y) + c` for commuting automorphisms `f`, `g`.
pub fn affine_quasigroup(
    a: &AbelianGroupSpec,
    f: &AutomorphismSpec,
    g: &AutomorphismSpec,
    c: usize,
) -> Result<FiniteQuasigroup> {
    let fm = f.to_map(a)?;
    let gm = g.to_map(a)?;
    let n = a.size();
    if c >= n {
        return invalid("constant is not an element of the group");
    }
    if (0..n).any(|x| fm[gm[x]] != gm[fm[x]]) {
        return invalid("f and g do not commute");
    }
    let t = CayleyTable::from_fn(n, |x, y| a.add(a.add(fm[x], gm[y]), c))?;
    let q = validate_quasigroup(&t)?;
    if !q.is_medial() {
        return invalid("affine quasigroup failed the medial law");
    }
    Ok(q)
}
