//! Oriented knot diagrams, quandle colorings and the state-sum invariant.
//!
//! A diagram is a list of crossings `X o_in o_out u_in u_out s`, where the
//! labels name edges (segments between consecutive crossings) and `s` is `+`
//! or `-`. The two over edges of a crossing belong to the same arc.
//!
//! Coloring rule: the under edge on the right of the over strand is the
//! source and the other under edge the target, with
//! `color(target) = color(source) * color(over)`. At a positive crossing the
//! source is `u_in`; at a negative one it is `u_out`. The Boltzmann weight is
//! `t^(ε·φ(source, over))`.

use std::collections::BTreeMap;
use std::fmt;

use crate::cohomology::{cocycle_violation, CocycleTable};
use crate::error::{invalid, Error, Result};
use crate::perm::UnionFind;
use crate::quandle::Quandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

/// A validated single-component diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    crossings: Vec<Crossing>,
    /// Edge labels in order of first appearance.
    edges: Vec<usize>,
    /// Arc index of each edge, parallel to `edges`.
    arc_of: Vec<usize>,
    arcs: usize,
}

impl KnotDiagram {
    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self> {
        if crossings.is_empty() {
            return Ok(KnotDiagram {
                crossings,
                edges: Vec::new(),
                arc_of: Vec::new(),
                arcs: 1,
            });
        }
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        let mut edges = Vec::new();
        // (times used as incoming, times used as outgoing)
        let mut uses: Vec<(usize, usize)> = Vec::new();
        let mut id = |label: usize, edges: &mut Vec<usize>, uses: &mut Vec<(usize, usize)>| {
            *index.entry(label).or_insert_with(|| {
                edges.push(label);
                uses.push((0, 0));
                edges.len() - 1
            })
        };
        let mut ids = Vec::with_capacity(crossings.len());
        for c in &crossings {
            if c.sign != 1 && c.sign != -1 {
                return invalid(format!("crossing sign {} is not ±1", c.sign));
            }
            let oi = id(c.over_in, &mut edges, &mut uses);
            let oo = id(c.over_out, &mut edges, &mut uses);
            let ui = id(c.under_in, &mut edges, &mut uses);
            let uo = id(c.under_out, &mut edges, &mut uses);
            uses[oi].0 += 1;
            uses[ui].0 += 1;
            uses[oo].1 += 1;
            uses[uo].1 += 1;
            ids.push((oi, oo, ui, uo));
        }
        for (k, &(i, o)) in uses.iter().enumerate() {
            if i + o > 2 {
                return invalid(format!("edge {} is used more than twice", edges[k]));
            }
            if (i, o) != (1, 1) {
                return invalid(format!("edge {} is dangling", edges[k]));
            }
        }
        // one component: follow outgoing -> incoming
        let mut next = vec![usize::MAX; edges.len()];
        for &(oi, oo, ui, uo) in &ids {
            next[oi] = oo;
            next[ui] = uo;
        }
        let mut seen = 0;
        let mut e = 0;
        loop {
            seen += 1;
            e = next[e];
            if e == 0 {
                break;
            }
            if seen > edges.len() {
                return invalid("edges do not close up");
            }
        }
        if seen != edges.len() {
            return invalid("diagram has more than one component");
        }
        let mut uf = UnionFind::new(edges.len());
        for &(oi, oo, _, _) in &ids {
            uf.union(oi, oo);
        }
        let blocks = uf.blocks();
        let mut arc_of = vec![0; edges.len()];
        for (a, b) in blocks.iter().enumerate() {
            for &e in b {
                arc_of[e] = a;
            }
        }
        let crossings = ids
            .iter()
            .zip(&crossings)
            .map(|(&(oi, oo, ui, uo), c)| Crossing {
                over_in: oi,
                over_out: oo,
                under_in: ui,
                under_out: uo,
                sign: c.sign,
            })
            .collect();
        Ok(KnotDiagram {
            crossings,
            edges,
            arc_of,
            arcs: blocks.len(),
        })
    }

    /// Closure of a braid on `strands` strands; `σ_i` is `i`, `σ_i⁻¹` is `-i`.
    ///
    /// Strands run downward; in `σ_i` the strand moving left passes over, which
    /// is a positive crossing.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self> {
        if strands == 0 {
            return invalid("a braid needs at least one strand");
        }
        let mut pos: Vec<usize> = (0..strands).collect();
        let mut fresh = strands;
        let mut raw = Vec::new();
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if i == 0 || i >= strands {
                return invalid(format!("generator {g} out of range for {strands} strands"));
            }
            let (l, r) = (pos[i - 1], pos[i]);
            let (nl, nr) = (fresh, fresh + 1);
            fresh += 2;
            // the left strand ends at position i, the right one at i - 1
            let c = if g > 0 {
                Crossing {
                    over_in: r,
                    over_out: nl,
                    under_in: l,
                    under_out: nr,
                    sign: 1,
                }
            } else {
                Crossing {
                    over_in: l,
                    over_out: nr,
                    under_in: r,
                    under_out: nl,
                    sign: -1,
                }
            };
            raw.push(c);
            pos[i - 1] = nl;
            pos[i] = nr;
        }
        // close up: the final edge at position j is the initial edge j
        let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
        for (j, &e) in pos.iter().enumerate() {
            if e != j {
                rename.insert(e, j);
            }
        }
        if pos.iter().enumerate().any(|(j, &e)| e == j) {
            return invalid("braid closure has a strand without crossings");
        }
        let r = |e: usize| *rename.get(&e).unwrap_or(&e);
        let crossings = raw
            .into_iter()
            .map(|c| Crossing {
                over_in: r(c.over_in),
                over_out: r(c.over_out),
                under_in: r(c.under_in),
                under_out: r(c.under_out),
                sign: c.sign,
            })
            .collect();
        Self::from_crossings(crossings)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// `(source arc, target arc, over arc, sign)` per crossing; a coloring `c`
    /// must satisfy `c[target] = c[source] * c[over]`.
    pub fn relations(&self) -> Vec<(usize, usize, usize, i8)> {
        self.crossings
            .iter()
            .map(|c| {
                let (s, t) = if c.sign > 0 {
                    (c.under_in, c.under_out)
                } else {
                    (c.under_out, c.under_in)
                };
                (self.arc_of[s], self.arc_of[t], self.arc_of[c.over_in], c.sign)
            })
            .collect()
    }

    /// PD text with the original edge labels.
    pub fn to_text(&self) -> String {
        self.crossings
            .iter()
            .map(|c| {
                let s = if c.sign > 0 { '+' } else { '-' };
                let l = |e: usize| self.edges[e];
                format!("X {} {} {} {} {s}\n", l(c.over_in), l(c.over_out), l(c.under_in), l(c.under_out))
            })
            .collect()
    }
}

/// Parses `X o_in o_out u_in u_out s` lines; `#` starts a comment.
pub fn parse_pd(text: &str) -> Result<KnotDiagram> {
    let mut crossings = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: ln + 1, msg };
        let w: Vec<&str> = line.split_whitespace().collect();
        if w.len() != 6 || w[0] != "X" {
            return Err(err("expected 'X o_in o_out u_in u_out s'".into()));
        }
        let mut v = [0usize; 4];
        for k in 0..4 {
            v[k] = w[k + 1].parse().map_err(|_| err(format!("bad edge label '{}'", w[k + 1])))?;
        }
        let sign = match w[5] {
            "+" | "+1" => 1,
            "-" | "−" | "-1" => -1,
            s => return Err(err(format!("bad sign '{s}'"))),
        };
        crossings.push(Crossing {
            over_in: v[0],
            over_out: v[1],
            under_in: v[2],
            under_out: v[3],
            sign,
        });
    }
    KnotDiagram::from_crossings(crossings)
}

/// Arc colors, indexed by arc.
pub type Coloring = Vec<usize>;

/// All colorings, in lexicographic order of the color vectors.
pub fn colorings(k: &KnotDiagram, q: &Quandle) -> Vec<Coloring> {
    let n = q.order();
    let rel = k.relations();
    // right division: x with x * y = v
    let mut div = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            div[q.op(x, y) * n + y] = x;
        }
    }
    let mut out = Vec::new();
    let color = vec![usize::MAX; k.arcs];
    search(0, &color, &rel, q, &div, &mut out);
    out
}

fn propagate(color: &mut [usize], rel: &[(usize, usize, usize, i8)], q: &Quandle, div: &[usize]) -> bool {
    let n = q.order();
    let un = usize::MAX;
    loop {
        let mut changed = false;
        for &(s, t, o, _) in rel {
            let (cs, ct, co) = (color[s], color[t], color[o]);
            if co == un {
                continue;
            }
            match (cs == un, ct == un) {
                (false, false) => {
                    if q.op(cs, co) != ct {
                        return false;
                    }
                }
                (false, true) => {
                    color[t] = q.op(cs, co);
                    changed = true;
                }
                (true, false) => {
                    color[s] = div[ct * n + co];
                    changed = true;
                }
                (true, true) => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(
    arc: usize,
    color: &[usize],
    rel: &[(usize, usize, usize, i8)],
    q: &Quandle,
    div: &[usize],
    out: &mut Vec<Coloring>,
) {
    let Some(a) = (arc..color.len()).find(|&a| color[a] == usize::MAX) else {
        out.push(color.to_vec());
        return;
    };
    for v in 0..q.order() {
        let mut c = color.to_vec();
        c[a] = v;
        if propagate(&mut c, rel, q, div) {
            search(a + 1, &c, rel, q, div, out);
        }
    }
}

/// `Σ c_k t^k` in `Z[Z_m]`, exponents in `0..m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    pub modulus: u64,
    pub coefficients: Vec<u64>,
}

impl GroupRingElement {
    pub fn zero(modulus: u64) -> Self {
        GroupRingElement {
            modulus,
            coefficients: vec![0; modulus as usize],
        }
    }

    pub fn coefficient_sum(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn constant(&self) -> u64 {
        self.coefficients[0]
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (k, 1) => format!("t^{k}"),
                (k, c) => format!("{c}t^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `Φ_φ(K) = Σ_C Π_τ t^(ε(τ)·φ(x, y))`.
pub fn cocycle_invariant(k: &KnotDiagram, q: &Quandle, phi: &CocycleTable) -> Result<GroupRingElement> {
    if phi.degree != 2 || phi.order != q.order() {
        return invalid("need a degree-2 cocycle on the coloring quandle");
    }
    if let Some(witness) = cocycle_violation(q, phi) {
        return Err(Error::NotACocycle { witness });
    }
    let m = phi.modulus as i64;
    let rel = k.relations();
    let mut out = GroupRingElement::zero(phi.modulus);
    for c in colorings(k, q) {
        let e: i64 = rel
            .iter()
            .map(|&(s, _, o, sign)| sign as i64 * phi.get(&[c[s], c[o]]) as i64)
            .sum();
        out.coefficients[e.rem_euclid(m) as usize] += 1;
    }
    Ok(out)
}

/// Whether two diagrams agree on coloring count and state sum.
pub fn reidemeister_equivalence_check(k1: &KnotDiagram, k2: &KnotDiagram, q: &Quandle, phi: &CocycleTable) -> Result<bool> {
    Ok(colorings(k1, q).len() == colorings(k2, q).len()
        && cocycle_invariant(k1, q, phi)? == cocycle_invariant(k2, q, phi)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::coboundary;
    use crate::constructions::{alexander_poly, dihedral};
    use crate::enumeration::{enumerate_quandles, Filter};
    use rand::{Rng, SeedableRng};

    const TREFOIL: &str = "X 4 5 1 2 +\nX 6 1 3 4 +\nX 2 3 5 6 +\n";
    const FIGURE8: &str = "X 1 2 4 5 +\nX 5 6 8 1 +\nX 3 4 6 7 -\nX 7 8 2 3 -\n";

    fn chi6() -> CocycleTable {
        let pairs: [&[usize]; 6] = [&[0, 1], &[0, 3], &[1, 0], &[1, 3], &[3, 0], &[3, 1]];
        CocycleTable::characteristic(4, 2, &pairs).unwrap()
    }

    fn brute(k: &KnotDiagram, q: &Quandle) -> usize {
        let n = q.order();
        let rel = k.relations();
        (0..n.pow(k.arcs as u32))
            .filter(|&code| {
                let c: Vec<usize> = (0..k.arcs).map(|a| code / n.pow(a as u32) % n).collect();
                rel.iter().all(|&(s, t, o, _)| q.op(c[s], c[o]) == c[t])
            })
            .count()
    }

    #[test]
    fn parse_examples() {
        let u = parse_pd("").unwrap();
        assert_eq!((u.crossing_count(), u.arc_count()), (0, 1));
        let t = parse_pd(TREFOIL).unwrap();
        assert_eq!((t.crossing_count(), t.arc_count()), (3, 3));
        assert_eq!(parse_pd(&t.to_text()).unwrap(), t);
        let f = parse_pd(FIGURE8).unwrap();
        assert_eq!((f.crossing_count(), f.arc_count(), f.writhe()), (4, 4, 0));
        assert!(parse_pd("X 1 1 1 2 +\nX 2 3 3 1 +\n").is_err());
        assert!(parse_pd("X 1 2 3 +").is_err());
        assert!(parse_pd("X 1 2 3 4 *").is_err());
        assert!(matches!(parse_pd("# c\nX 4 5 1 2 +\nX 6 1 3 4\n"), Err(Error::Parse { line: 3, .. })));
        // edge 7 never comes back
        assert!(parse_pd("X 4 5 1 2 +\nX 6 1 3 4 +\nX 2 3 5 7 +\n").is_err());
    }

    #[test]
    fn braids_match_tables() {
        let t = KnotDiagram::from_braid(2, &[1, 1, 1]).unwrap();
        let f = KnotDiagram::from_braid(3, &[1, -2, 1, -2]).unwrap();
        for q in [dihedral(3).unwrap(), dihedral(5).unwrap(), alexander_poly(2, &[1, 1, 1]).unwrap()] {
            assert_eq!(colorings(&t, &q).len(), colorings(&parse_pd(TREFOIL).unwrap(), &q).len());
            assert_eq!(colorings(&f, &q).len(), colorings(&parse_pd(FIGURE8).unwrap(), &q).len());
        }
        assert!(KnotDiagram::from_braid(3, &[1, 1]).is_err());
        assert!(KnotDiagram::from_braid(2, &[2]).is_err());
    }

    #[test]
    fn coloring_counts() {
        let unknot = parse_pd("").unwrap();
        let t = parse_pd(TREFOIL).unwrap();
        let f = parse_pd(FIGURE8).unwrap();
        let r3 = dihedral(3).unwrap();
        let a4 = alexander_poly(2, &[1, 1, 1]).unwrap();
        assert_eq!(colorings(&unknot, &r3).len(), 3);
        assert_eq!(colorings(&t, &r3).len(), 9);
        assert_eq!(colorings(&f, &r3).len(), 3);
        assert_eq!(colorings(&t, &a4).len(), 16);
        assert_eq!(colorings(&f, &a4).len(), 16);
        assert_eq!(colorings(&f, &dihedral(5).unwrap()).len(), 25);
    }

    #[test]
    fn colorings_match_brute_force() {
        let diagrams: Vec<KnotDiagram> = [
            (2, vec![1, 1, 1]),
            (2, vec![-1, -1, -1]),
            (3, vec![1, -2, 1, -2]),
            (3, vec![1, 1, 1, 2]),
            (3, vec![1, 2]),
            (2, vec![1]),
        ]
        .into_iter()
        .map(|(s, w)| KnotDiagram::from_braid(s, &w).unwrap())
        .collect();
        for n in 1..=4 {
            for t in enumerate_quandles(n, Filter::All).unwrap().tables {
                let q = Quandle::verify(t).unwrap();
                for k in &diagrams {
                    let c = colorings(k, &q);
                    assert_eq!(c.len(), brute(k, &q));
                    // monochromatic ones are always there
                    for x in 0..n {
                        assert!(c.contains(&vec![x; k.arc_count()]));
                    }
                }
            }
        }
    }

    #[test]
    fn state_sums() {
        let a4 = alexander_poly(2, &[1, 1, 1]).unwrap();
        let phi = chi6();
        for text in [TREFOIL, FIGURE8] {
            let v = cocycle_invariant(&parse_pd(text).unwrap(), &a4, &phi).unwrap();
            assert_eq!(v.to_string(), "4 + 12t");
        }
        let k85 = KnotDiagram::from_braid(3, &[1, 1, 1, -2, 1, 1, 1, -2]).unwrap();
        let v = cocycle_invariant(&k85, &a4, &phi).unwrap();
        assert_eq!(v.to_string(), "16");
        let z = cocycle_invariant(&parse_pd(TREFOIL).unwrap(), &a4, &CocycleTable::zero(4, 2, 2).unwrap()).unwrap();
        assert_eq!(z.to_string(), "16");
        let r3 = dihedral(3).unwrap();
        let bad = CocycleTable::characteristic(3, 2, &[&[0, 1]]).unwrap();
        assert!(cocycle_invariant(&parse_pd(TREFOIL).unwrap(), &r3, &bad).is_err());
    }

    #[test]
    fn display() {
        let mut g = GroupRingElement::zero(5);
        assert_eq!(g.to_string(), "0");
        g.coefficients = vec![0, 1, 2, 0, 1];
        assert_eq!(g.to_string(), "t + 2t^2 + t^4");
    }

    #[test]
    fn stabilized_diagrams_agree() {
        let a4 = alexander_poly(2, &[1, 1, 1]).unwrap();
        let r4 = dihedral(4).unwrap();
        let r4phi = {
            let pairs: [&[usize]; 8] = [&[0, 2], &[0, 3], &[1, 0], &[1, 3], &[2, 0], &[2, 3], &[3, 0], &[3, 1]];
            CocycleTable::characteristic(4, 2, &pairs).unwrap()
        };
        let t = KnotDiagram::from_braid(2, &[1, 1, 1]).unwrap();
        let kinked = KnotDiagram::from_braid(3, &[1, 1, 1, 2]).unwrap();
        let kinked_neg = KnotDiagram::from_braid(3, &[1, 1, 1, -2]).unwrap();
        let r2 = KnotDiagram::from_braid(2, &[1, 1, -1, 1, 1]).unwrap();
        // σ1σ1σ2σ1 = σ1σ2σ1σ2 is a third move
        let before_r3 = KnotDiagram::from_braid(3, &[1, 1, 2, 1]).unwrap();
        let after_r3 = KnotDiagram::from_braid(3, &[1, 2, 1, 2]).unwrap();
        assert_eq!(kinked.crossing_count(), 4);
        assert_eq!(r2.crossing_count(), 5);
        for (q, phi) in [(&a4, chi6()), (&r4, r4phi)] {
            for k in [&kinked, &kinked_neg, &r2, &before_r3, &after_r3, &parse_pd(TREFOIL).unwrap()] {
                assert!(reidemeister_equivalence_check(&t, k, q, &phi).unwrap());
            }
        }
        let f = parse_pd(FIGURE8).unwrap();
        let r3 = dihedral(3).unwrap();
        assert!(!reidemeister_equivalence_check(&t, &f, &r3, &CocycleTable::zero(3, 2, 2).unwrap()).unwrap());
    }

    #[test]
    fn coboundary_shift_invariance() {
        let r4 = dihedral(4).unwrap();
        let t = parse_pd(TREFOIL).unwrap();
        let pairs: [&[usize]; 8] = [&[0, 2], &[0, 3], &[1, 0], &[1, 3], &[2, 0], &[2, 3], &[3, 0], &[3, 1]];
        let phi = CocycleTable::characteristic(4, 2, &pairs).unwrap();
        let base = cocycle_invariant(&t, &r4, &phi).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let lam = CocycleTable::from_fn(4, 1, 2, |_| rng.gen_range(0..2)).unwrap();
            let shifted = phi.add(&coboundary(&r4, &lam).unwrap()).unwrap();
            assert_eq!(cocycle_invariant(&t, &r4, &shifted).unwrap(), base);
        }
        assert_eq!(base.coefficient_sum() as usize, colorings(&t, &r4).len());
        assert!(base.constant() >= 4);
    }
}
