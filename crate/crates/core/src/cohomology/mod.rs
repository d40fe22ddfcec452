//! Rack and quandle chain complexes, integral homology, and cocycle groups
//! with `Z_m` coefficients.
//!
//! `C_n` is free on `X^n`, tuples ordered lexicographically. The boundary is
//!
//! `∂_n(x_1..x_n) = Σ_{i=2..n} (-1)^i [(x_1..x̂_i..x_n) − (x_1*x_i, …, x_{i-1}*x_i, x_{i+1}, …, x_n)]`
//!
//! and `∂_n = 0` for `n ≤ 1`. The quandle complex is the quotient by the
//! degenerate subcomplex spanned by tuples with some `x_i = x_{i+1}`; its
//! basis is the non-degenerate tuples.

pub mod snf;

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::quandle::Quandle;
use snf::{smith, Matrix};

pub const DEFAULT_MAX_TUPLES: usize = 1_000_000;
/// Entries of a dense matrix handed to the normal form.
pub const MAX_DENSE_ENTRIES: usize = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theory {
    Rack,
    Quandle,
}

/// `∂_n : C_n -> C_{n-1}` stored by source column, entries `(target row, coefficient)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub order: usize,
    /// Source basis, as indices into the lexicographic list of `X^degree`.
    pub sources: Vec<usize>,
    /// Target basis, as indices into the lexicographic list of `X^(degree-1)`.
    pub targets: Vec<usize>,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn rows(&self) -> usize {
        self.targets.len()
    }

    pub fn cols(&self) -> usize {
        self.sources.len()
    }

    pub fn to_dense(&self) -> Result<Matrix> {
        check_dense(self.rows(), self.cols())?;
        let mut m = vec![vec![0i128; self.cols()]; self.rows()];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r][c] += v as i128;
            }
        }
        Ok(m)
    }

    /// Dense transpose, rows indexed by source tuples.
    pub fn transpose_dense(&self) -> Result<Matrix> {
        check_dense(self.rows(), self.cols())?;
        let mut m = vec![vec![0i128; self.rows()]; self.cols()];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[c][r] += v as i128;
            }
        }
        Ok(m)
    }

    /// Whether `self ∘ inner` vanishes (`inner` one degree higher).
    pub fn composes_to_zero(&self, inner: &BoundaryMatrix) -> bool {
        inner.columns.iter().all(|col| {
            let mut acc = vec![0i64; self.rows()];
            for &(mid, v) in col {
                for &(r, w) in &self.columns[mid] {
                    acc[r] += v * w;
                }
            }
            acc.iter().all(|&x| x == 0)
        })
    }
}

fn check_dense(rows: usize, cols: usize) -> Result<()> {
    if rows.saturating_mul(cols) > MAX_DENSE_ENTRIES {
        return Err(Error::ResourceLimit {
            what: "dense matrix entries",
            bound: MAX_DENSE_ENTRIES,
        });
    }
    Ok(())
}

fn tuple_count(n: usize, k: usize) -> Result<usize> {
    let mut c: usize = 1;
    for _ in 0..k {
        c = c.checked_mul(n).filter(|&c| c <= DEFAULT_MAX_TUPLES).ok_or(Error::ResourceLimit {
            what: "tuples in chain group",
            bound: DEFAULT_MAX_TUPLES,
        })?;
    }
    Ok(c)
}

pub(crate) fn decode_tuple(n: usize, k: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for i in (0..k).rev() {
        t[i] = idx % n;
        idx /= n;
    }
    t
}

pub(crate) fn encode_tuple(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &x| acc * n + x)
}

fn degenerate(t: &[usize]) -> bool {
    t.windows(2).any(|w| w[0] == w[1])
}

/// Basis of `C_k` as lexicographic tuple indices.
fn basis(n: usize, k: usize, theory: Theory) -> Result<Vec<usize>> {
    let total = tuple_count(n, k)?;
    Ok(match theory {
        Theory::Rack => (0..total).collect(),
        Theory::Quandle => (0..total).filter(|&i| !degenerate(&decode_tuple(n, k, i))).collect(),
    })
}

/// `∂_n` of the rack complex.
pub fn boundary_matrix(q: &Quandle, n: usize) -> Result<BoundaryMatrix> {
    boundary(q, n, Theory::Rack)
}

/// `∂_n` of the chosen complex.
pub fn boundary(q: &Quandle, n: usize, theory: Theory) -> Result<BoundaryMatrix> {
    let x = q.order();
    let sources = basis(x, n, theory)?;
    let targets = basis(x, n.saturating_sub(1), theory)?;
    let mut pos = vec![usize::MAX; tuple_count(x, n.saturating_sub(1))?];
    for (i, &t) in targets.iter().enumerate() {
        pos[t] = i;
    }
    let mut columns = Vec::with_capacity(sources.len());
    for &s in &sources {
        let mut col: Vec<(usize, i64)> = Vec::new();
        if n >= 2 {
            let t = decode_tuple(x, n, s);
            for i in 1..n {
                // 1-based index i+1, sign (-1)^(i+1)
                let sign = if i % 2 == 1 { 1 } else { -1 };
                let mut a: Vec<usize> = t[..i].to_vec();
                a.extend_from_slice(&t[i + 1..]);
                let mut b: Vec<usize> = t[..i].iter().map(|&y| q.op(y, t[i])).collect();
                b.extend_from_slice(&t[i + 1..]);
                for (v, s) in [(a, sign), (b, -sign)] {
                    let r = pos[encode_tuple(x, &v)];
                    if r != usize::MAX {
                        col.push((r, s));
                    }
                }
            }
            col.sort_unstable();
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(col.len());
            for (r, v) in col {
                match merged.last_mut() {
                    Some((lr, lv)) if *lr == r => *lv += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|&(_, v)| v != 0);
            col = merged;
        }
        columns.push(col);
    }
    Ok(BoundaryMatrix {
        degree: n,
        order: x,
        sources,
        targets,
        columns,
    })
}

/// A finitely generated abelian group `Z^rank ⊕ Z_{t_1} ⊕ …` with `t_i | t_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    /// Invariant factors with `0` standing for a free summand `Z`.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let mut v = self.torsion.clone();
        v.extend(std::iter::repeat_n(0, self.rank));
        v
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn rank_and_torsion(b: &BoundaryMatrix) -> Result<(usize, Vec<u64>)> {
    if b.columns.iter().all(|c| c.is_empty()) {
        return Ok((0, Vec::new()));
    }
    let s = smith(&b.to_dense()?, b.cols(), false)?;
    let torsion = s.diagonal[..s.rank]
        .iter()
        .filter(|&&d| d > 1)
        .map(|&d| u64::try_from(d).map_err(|_| Error::Invalid("torsion coefficient too large".into())))
        .collect::<Result<Vec<u64>>>()?;
    Ok((s.rank, torsion))
}

/// `H_n = ker ∂_n / im ∂_{n+1}` for `n ≤ 3`.
pub fn homology(q: &Quandle, n: usize, theory: Theory) -> Result<AbelianInvariants> {
    if n > 3 {
        return Err(Error::OrderOutOfRange {
            order: n,
            range: "homology degree 0..=3",
        });
    }
    let dn = boundary(q, n, theory)?;
    let dn1 = boundary(q, n + 1, theory)?;
    let (rank_n, _) = rank_and_torsion(&dn)?;
    let (rank_n1, torsion) = rank_and_torsion(&dn1)?;
    Ok(AbelianInvariants {
        rank: dn.cols() - rank_n - rank_n1,
        torsion,
    })
}

/// A `Z_m`-valued function on `X^degree`, stored lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CocycleTable {
    pub degree: usize,
    pub modulus: u64,
    pub order: usize,
    values: Vec<u64>,
}

impl CocycleTable {
    pub fn zero(order: usize, degree: usize, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return invalid("modulus must be at least 2");
        }
        Ok(CocycleTable {
            degree,
            modulus,
            order,
            values: vec![0; tuple_count(order, degree)?],
        })
    }

    pub fn from_fn(order: usize, degree: usize, modulus: u64, mut f: impl FnMut(&[usize]) -> i64) -> Result<Self> {
        let mut c = Self::zero(order, degree, modulus)?;
        for i in 0..c.values.len() {
            c.values[i] = f(&decode_tuple(order, degree, i)).rem_euclid(modulus as i64) as u64;
        }
        Ok(c)
    }

    /// Sum of characteristic functions `χ_t` of the given tuples.
    pub fn characteristic(order: usize, modulus: u64, tuples: &[&[usize]]) -> Result<Self> {
        let degree = tuples.first().map_or(2, |t| t.len());
        let mut c = Self::zero(order, degree, modulus)?;
        for t in tuples {
            if t.len() != degree || t.iter().any(|&x| x >= order) {
                return invalid(format!("tuple {t:?} does not fit"));
            }
            let i = encode_tuple(order, t);
            c.values[i] = (c.values[i] + 1) % modulus;
        }
        Ok(c)
    }

    pub fn get(&self, t: &[usize]) -> u64 {
        self.values[encode_tuple(self.order, t)]
    }

    pub fn set(&mut self, t: &[usize], v: i64) {
        let i = encode_tuple(self.order, t);
        self.values[i] = v.rem_euclid(self.modulus as i64) as u64;
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn add(&self, other: &CocycleTable) -> Result<CocycleTable> {
        if (self.degree, self.modulus, self.order) != (other.degree, other.modulus, other.order) {
            return invalid("cochains of different shapes");
        }
        let mut c = self.clone();
        for (a, b) in c.values.iter_mut().zip(&other.values) {
            *a = (*a + b) % self.modulus;
        }
        Ok(c)
    }

    pub fn sub(&self, other: &CocycleTable) -> Result<CocycleTable> {
        let mut neg = other.clone();
        for v in &mut neg.values {
            *v = (self.modulus - *v) % self.modulus;
        }
        self.add(&neg)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Lines `x y -> v` for the non-zero values.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, &v) in self.values.iter().enumerate() {
            if v != 0 {
                let t = decode_tuple(self.order, self.degree, i);
                let t: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                s.push_str(&format!("{} -> {v}\n", t.join(" ")));
            }
        }
        s
    }

    /// Reads `x y -> v` (or `x y z -> v`) lines; absent tuples are 0, `#` starts a comment.
    pub fn parse(text: &str, order: usize, modulus: u64) -> Result<CocycleTable> {
        let mut entries: Vec<(Vec<usize>, i64)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: ln + 1,
                msg: msg.into(),
            };
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| err("expected 'x y -> v'"))?;
            let t: Vec<usize> = lhs
                .split_whitespace()
                .map(|w| w.parse::<usize>().map_err(|_| err("bad element")))
                .collect::<Result<_>>()?;
            let v: i64 = rhs.trim().parse().map_err(|_| err("bad value"))?;
            if t.iter().any(|&x| x >= order) {
                return Err(err("element out of range"));
            }
            if let Some((first, _)) = entries.first() {
                if first.len() != t.len() {
                    return Err(err("inconsistent tuple length"));
                }
            }
            entries.push((t, v));
        }
        let degree = entries.first().map_or(2, |(t, _)| t.len());
        if !(1..=3).contains(&degree) {
            return invalid("cocycle degree must be 1, 2 or 3");
        }
        let mut c = Self::zero(order, degree, modulus)?;
        for (t, v) in entries {
            c.set(&t, c.get(&t) as i64 + v);
        }
        Ok(c)
    }
}

/// First tuple violating the cocycle or normalization conditions, if any.
pub fn cocycle_violation(q: &Quandle, c: &CocycleTable) -> Option<Vec<usize>> {
    let n = q.order();
    assert_eq!(c.order, n, "cochain order differs from the quandle");
    let m = c.modulus as i64;
    let g = |t: &[usize]| c.get(t) as i64;
    let o = |a, b| q.op(a, b);
    match c.degree {
        2 => {
            if let Some(x) = (0..n).find(|&x| g(&[x, x]) != 0) {
                return Some(vec![x, x]);
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = g(&[x, y]) + g(&[o(x, y), z]);
                        let rhs = g(&[x, z]) + g(&[o(x, z), o(y, z)]);
                        if (lhs - rhs).rem_euclid(m) != 0 {
                            return Some(vec![x, y, z]);
                        }
                    }
                }
            }
            None
        }
        3 => {
            for x in 0..n {
                for y in 0..n {
                    if g(&[x, x, y]) != 0 {
                        return Some(vec![x, x, y]);
                    }
                    if g(&[x, y, y]) != 0 {
                        return Some(vec![x, y, y]);
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for w in 0..n {
                            let lhs = g(&[x, y, z]) + g(&[x, z, w]) + g(&[o(x, z), o(y, z), w]);
                            let rhs = g(&[o(x, y), z, w]) + g(&[o(x, w), o(y, w), o(z, w)]) + g(&[x, y, w]);
                            if (lhs - rhs).rem_euclid(m) != 0 {
                                return Some(vec![x, y, z, w]);
                            }
                        }
                    }
                }
            }
            None
        }
        _ => Some(Vec::new()),
    }
}

pub fn is_cocycle(q: &Quandle, c: &CocycleTable) -> bool {
    cocycle_violation(q, c).is_none()
}

/// `δψ = ψ ∘ ∂`: raises degree by one.
pub fn coboundary(q: &Quandle, psi: &CocycleTable) -> Result<CocycleTable> {
    let b = boundary(q, psi.degree + 1, Theory::Rack)?;
    let mut out = CocycleTable::zero(q.order(), psi.degree + 1, psi.modulus)?;
    let m = psi.modulus as i64;
    for (ci, col) in b.columns.iter().enumerate() {
        let mut s = 0i64;
        for &(r, v) in col {
            s += v * psi.values[b.targets[r]] as i64;
        }
        out.values[b.sources[ci]] = s.rem_euclid(m) as u64;
    }
    Ok(out)
}

/// Cocycles, coboundaries and their quotient for `Z_m` coefficients.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    pub degree: usize,
    pub modulus: u64,
    /// Generators of the cocycle group with their additive orders.
    pub cocycle_generators: Vec<(CocycleTable, u64)>,
    /// Generators of the coboundary group.
    pub coboundary_generators: Vec<CocycleTable>,
    /// Non-trivial invariant factors of `Z / B`.
    pub cohomology: Vec<u64>,
}

impl CocycleSpace {
    /// Orders of the cyclic summands of the cocycle group.
    pub fn cocycle_invariants(&self) -> Vec<u64> {
        self.cocycle_generators.iter().map(|(_, o)| *o).collect()
    }

    /// `|Z|` as a product of the summand orders.
    pub fn cocycle_count(&self) -> u128 {
        self.cocycle_generators.iter().map(|(_, o)| *o as u128).product()
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i128(b, a % b)
    }
}

/// Quandle `degree`-cocycles (degree 2 or 3) over `Z_m` and `H^degree = Z / B`.
pub fn cocycle_space(q: &Quandle, degree: usize, m: u64) -> Result<CocycleSpace> {
    if !(2..=3).contains(&degree) {
        return invalid("cocycle degree must be 2 or 3");
    }
    if m < 2 {
        return invalid("modulus must be at least 2");
    }
    let x = q.order();
    let mi = m as i128;
    // φ ∘ ∂_{degree+1} = 0 on non-degenerate tuples
    let up = boundary(q, degree + 1, Theory::Quandle)?;
    let down = boundary(q, degree, Theory::Quandle)?;
    let cols = up.rows();
    let cond = up.transpose_dense()?;
    let s = smith(&cond, cols, true)?;
    let qm = s.q.as_ref().unwrap();
    let qinv = s.q_inv.as_ref().unwrap();
    // cocycles are Q y with d_i y_i ≡ 0, so y_i ∈ c_i Z_m
    let c: Vec<i128> = (0..cols)
        .map(|i| if i < s.rank { mi / gcd_i128(s.diagonal[i], mi) } else { 1 })
        .collect();
    let to_table = |v: &[i128]| -> CocycleTable {
        let mut t = CocycleTable::zero(x, degree, m).expect("sized earlier");
        for (i, &val) in v.iter().enumerate() {
            t.values[up.targets[i]] = val.rem_euclid(mi) as u64;
        }
        t
    };
    let mut cocycle_generators = Vec::new();
    for i in 0..cols {
        let order = (mi / c[i]) as u64;
        if order > 1 {
            let v: Vec<i128> = (0..cols).map(|r| qm[r][i] * c[i]).collect();
            cocycle_generators.push((to_table(&v), order));
        }
    }
    // coboundaries δψ = ∂^T ψ, one per basis (degree-1)-tuple
    let kt = down.transpose_dense()?;
    let mut coboundary_generators = Vec::new();
    let mut relations: Vec<Vec<i128>> = Vec::new();
    for j in 0..down.rows() {
        let b: Vec<i128> = (0..cols).map(|r| kt[r][j]).collect();
        if b.iter().all(|&v| v.rem_euclid(mi) == 0) {
            continue;
        }
        coboundary_generators.push(to_table(&b));
        let y: Vec<i128> = (0..cols)
            .map(|i| (0..cols).map(|k| qinv[i][k] * b[k]).sum::<i128>().rem_euclid(mi))
            .collect();
        relations.push((0..cols).map(|i| y[i] / c[i]).collect());
    }
    for i in 0..cols {
        let mut e = vec![0i128; cols];
        e[i] = mi / c[i];
        relations.push(e);
    }
    // relations as columns
    let rel: Matrix = (0..cols).map(|i| relations.iter().map(|r| r[i]).collect()).collect();
    let rs = smith(&rel, relations.len(), false)?;
    let cohomology = rs.diagonal[..rs.rank].iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    Ok(CocycleSpace {
        degree,
        modulus: m,
        cocycle_generators,
        coboundary_generators,
        cohomology,
    })
}

/// Whether `c` is a coboundary `δψ` of a quandle cochain one degree lower.
pub fn is_coboundary(q: &Quandle, c: &CocycleTable) -> Result<bool> {
    let down = boundary(q, c.degree, Theory::Quandle)?;
    if c.values.iter().enumerate().any(|(i, &v)| v != 0 && !down.sources.contains(&i)) {
        return Ok(false);
    }
    let mi = c.modulus as i128;
    let kt = down.transpose_dense()?;
    let rows = kt.len();
    let s = smith(&kt, down.rows(), true)?;
    let p = s.p.as_ref().unwrap();
    let target: Vec<i128> = down.sources.iter().map(|&t| c.values[t] as i128).collect();
    // P K Q = D, so K z = t (mod m) is solvable iff D w = P t (mod m) is
    for i in 0..rows {
        let pt: i128 = (0..rows).map(|k| p[i][k] * target[k]).sum::<i128>().rem_euclid(mi);
        let d = if i < s.rank { gcd_i128(s.diagonal[i], mi) } else { mi };
        if pt % d != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether two cocycles differ by a coboundary.
pub fn cohomologous(q: &Quandle, a: &CocycleTable, b: &CocycleTable) -> Result<bool> {
    is_coboundary(q, &a.sub(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alexander_poly, dihedral, trivial};
    use crate::enumeration::{enumerate_quandles, Filter};
    use rand::{Rng, SeedableRng};

    fn all_small() -> Vec<Quandle> {
        (1..=4)
            .flat_map(|n| enumerate_quandles(n, Filter::All).unwrap().tables)
            .map(|t| Quandle::verify(t).unwrap())
            .collect()
    }

    #[test]
    fn boundary_examples() {
        let r3 = dihedral(3).unwrap();
        assert!(boundary_matrix(&r3, 1).unwrap().columns.iter().all(|c| c.is_empty()));
        assert!(boundary_matrix(&trivial(3).unwrap(), 2).unwrap().columns.iter().all(|c| c.is_empty()));
        // ∂_2(0,1) = (0) − (0*1) = (0) − (2)
        let d2 = boundary_matrix(&r3, 2).unwrap();
        assert_eq!(d2.columns[encode_tuple(3, &[0, 1])], vec![(0, 1), (2, -1)]);
        let d3 = boundary_matrix(&dihedral(5).unwrap(), 3).unwrap();
        assert!(boundary_matrix(&dihedral(5).unwrap(), 2).unwrap().composes_to_zero(&d3));
        assert!(boundary_matrix(&trivial(200).unwrap(), 3).is_err());
    }

    #[test]
    fn boundary_squares_to_zero() {
        for q in all_small() {
            for theory in [Theory::Rack, Theory::Quandle] {
                for n in 2..=4 {
                    let outer = boundary(&q, n - 1, theory).unwrap();
                    let inner = boundary(&q, n, theory).unwrap();
                    assert!(outer.composes_to_zero(&inner), "{q:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn first_homology_counts_orbits() {
        for k in 1..=5 {
            let h = homology(&trivial(k).unwrap(), 1, Theory::Quandle).unwrap();
            assert_eq!(h, AbelianInvariants { rank: k, torsion: vec![] });
        }
        for q in all_small() {
            let h = homology(&q, 1, Theory::Quandle).unwrap();
            assert_eq!(h.rank, crate::quandle::orbit_count(&q));
            assert!(h.torsion.is_empty());
        }
    }

    #[test]
    fn dihedral_three_homology() {
        // H_2^Q(R_3) = 0 and H_3^Q(R_3) = Z_3
        let r3 = dihedral(3).unwrap();
        assert_eq!(homology(&r3, 2, Theory::Quandle).unwrap().to_string(), "0");
        assert_eq!(homology(&r3, 3, Theory::Quandle).unwrap().to_string(), "Z_3");
        // rack homology of R_3: H_2^R = Z
        assert_eq!(homology(&r3, 2, Theory::Rack).unwrap().to_string(), "Z");
    }

    fn brute_cocycle_count(q: &Quandle, degree: usize, m: u64) -> u64 {
        let n = q.order();
        let slots: Vec<Vec<usize>> = (0..n.pow(degree as u32))
            .map(|i| decode_tuple(n, degree, i))
            .filter(|t| !degenerate(t))
            .collect();
        let total = m.pow(slots.len() as u32);
        let mut count = 0;
        for code in 0..total {
            let mut c = CocycleTable::zero(n, degree, m).unwrap();
            let mut k = code;
            for t in &slots {
                c.set(t, (k % m) as i64);
                k /= m;
            }
            if is_cocycle(q, &c) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn cocycle_counts_match_brute_force() {
        let qs: Vec<Quandle> = (1..=3)
            .flat_map(|n| enumerate_quandles(n, Filter::All).unwrap().tables)
            .map(|t| Quandle::verify(t).unwrap())
            .collect();
        for q in &qs {
            for m in [2u64, 3] {
                let s = cocycle_space(q, 2, m).unwrap();
                assert_eq!(s.cocycle_count(), brute_cocycle_count(q, 2, m) as u128, "{q:?} m={m}");
                for (g, _) in &s.cocycle_generators {
                    assert!(is_cocycle(q, g));
                }
            }
            let s3 = cocycle_space(q, 3, 2).unwrap();
            assert_eq!(s3.cocycle_count(), brute_cocycle_count(q, 3, 2) as u128, "{q:?} degree 3");
        }
    }

    #[test]
    fn trivial_quandle_cocycles() {
        for n in 1..=4 {
            let s = cocycle_space(&trivial(n).unwrap(), 2, 5).unwrap();
            assert_eq!(s.cocycle_invariants(), vec![5; n * (n - 1)]);
            assert!(s.coboundary_generators.is_empty());
        }
    }

    fn r4_explicit() -> CocycleTable {
        let pairs: [&[usize]; 8] = [&[0, 2], &[0, 3], &[1, 0], &[1, 3], &[2, 0], &[2, 3], &[3, 0], &[3, 1]];
        CocycleTable::characteristic(4, 2, &pairs).unwrap()
    }

    #[test]
    fn dihedral_four_classes() {
        let r4 = dihedral(4).unwrap();
        let phi = r4_explicit();
        assert!(is_cocycle(&r4, &phi));
        assert!(!is_coboundary(&r4, &phi).unwrap());
        let s = cocycle_space(&r4, 2, 2).unwrap();
        assert!(!s.cohomology.is_empty());
    }

    #[test]
    fn example_cocycles() {
        let q = alexander_poly(2, &[1, 1, 1]).unwrap();
        // {0, 1, T+1} = {0, 1, 3}
        let pairs: [&[usize]; 6] = [&[0, 1], &[0, 3], &[1, 0], &[1, 3], &[3, 0], &[3, 1]];
        let phi = CocycleTable::characteristic(4, 2, &pairs).unwrap();
        assert!(is_cocycle(&q, &phi));
        let r3 = dihedral(3).unwrap();
        let chi = CocycleTable::characteristic(3, 2, &[&[0, 1]]).unwrap();
        assert!(cocycle_violation(&r3, &chi).is_some());
        for d in [2, 3] {
            assert!(is_cocycle(&r3, &CocycleTable::zero(3, d, 2).unwrap()));
        }
    }

    #[test]
    fn third_cocycle_identity_matches_boundary() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let q = dihedral(3).unwrap();
        let d4 = boundary(&q, 4, Theory::Quandle).unwrap();
        for _ in 0..200 {
            let mut c = CocycleTable::zero(3, 3, 3).unwrap();
            for &t in &d4.targets {
                c.values[t] = rng.gen_range(0..3);
            }
            let by_matrix = d4.columns.iter().all(|col| {
                col.iter().map(|&(r, v)| v * c.values[d4.targets[r]] as i64).sum::<i64>().rem_euclid(3) == 0
            });
            assert_eq!(by_matrix, is_cocycle(&q, &c));
        }
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for q in all_small() {
            for m in [2u64, 3] {
                for _ in 0..5 {
                    let lam = CocycleTable::from_fn(q.order(), 1, m, |_| rng.gen_range(0..m as i64)).unwrap();
                    let d = coboundary(&q, &lam).unwrap();
                    assert!(is_cocycle(&q, &d));
                    assert!(is_coboundary(&q, &d).unwrap());
                }
            }
        }
    }

    #[test]
    fn universal_coefficients() {
        // H^2(X; Z_m) ≅ Hom(H_2, Z_m) ⊕ Ext(H_1, Z_m) as group orders
        for q in all_small().into_iter().chain([dihedral(5).unwrap(), alexander_poly(2, &[1, 1, 1]).unwrap()]) {
            for m in [2u64, 3, 4] {
                let h1 = homology(&q, 1, Theory::Quandle).unwrap();
                let h2 = homology(&q, 2, Theory::Quandle).unwrap();
                let g = |a: u64, b: u64| crate::perm::gcd(a as usize, b as usize) as u128;
                let hom: u128 = (m as u128).pow(h2.rank as u32) * h2.torsion.iter().map(|&t| g(t, m)).product::<u128>();
                let ext: u128 = h1.torsion.iter().map(|&t| g(t, m)).product();
                let s = cocycle_space(&q, 2, m).unwrap();
                let order: u128 = s.cohomology.iter().map(|&d| d as u128).product();
                assert_eq!(order, hom * ext, "{q:?} m={m}");
            }
        }
    }

    #[test]
    fn cocycle_text_round_trip() {
        let phi = r4_explicit();
        let back = CocycleTable::parse(&phi.to_text(), 4, 2).unwrap();
        assert_eq!(back, phi);
        assert!(CocycleTable::parse("0 1 -> x", 4, 2).is_err());
        assert!(CocycleTable::parse("0 7 -> 1", 4, 2).is_err());
    }
}
