//! Quandles of a given order up to isomorphism, and Alexander quandles.
//!
//! A quandle on `{0..n-1}` is a family of column permutations `R_b` with
//! `R_b(b) = b` and `R_c R_b R_c⁻¹ = R_{R_c(b)}`. The search fixes element 0
//! to carry a column of the largest cycle type `λ` present, with `R_0` a fixed
//! permutation of type `λ`, and requires every other column to have type at
//! most `λ`. Each free column is chosen by backtracking on its entries; the
//! conjugation rule then fills in every column it forces. Leaves are reduced
//! to canonical form and deduplicated.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::constructions::{alexander_table, AbelianGroupSpec, AutomorphismSpec};
use crate::error::{invalid, Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::quandle::{canonical_labeling, classify, verify_quandle, Quandle};
use crate::table::CayleyTable;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    Connected,
    Latin,
    Medial,
    Kei,
}

impl Filter {
    pub fn matches(self, q: &Quandle) -> bool {
        match self {
            Filter::All => true,
            Filter::Connected => classify::is_connected(q),
            Filter::Latin => classify::is_latin(q),
            Filter::Medial => classify::is_medial(q),
            Filter::Kei => classify::is_kei(q),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::Connected => "connected",
            Filter::Latin => "latin",
            Filter::Medial => "medial",
            Filter::Kei => "kei",
        })
    }
}

impl std::str::FromStr for Filter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Filter::All,
            "connected" => Filter::Connected,
            "latin" => Filter::Latin,
            "medial" => Filter::Medial,
            "kei" => Filter::Kei,
            _ => return invalid(format!("unknown filter '{s}'")),
        })
    }
}

/// Canonical representatives, sorted by their flattened tables.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub order: usize,
    pub filter: String,
    pub tables: Vec<CayleyTable>,
    pub count: usize,
}

#[derive(Clone, Debug, Default)]
pub struct EnumerationOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Permits order 9.
    pub allow_long: bool,
    /// Reports each finished cycle type on stderr.
    pub progress: bool,
}

pub fn enumerate_quandles(n: usize, filter: Filter) -> Result<EnumerationResult> {
    enumerate_quandles_with(n, filter, &EnumerationOptions::default())
}

pub fn enumerate_quandles_with(n: usize, filter: Filter, opts: &EnumerationOptions) -> Result<EnumerationResult> {
    let max = if opts.allow_long { 9 } else { 8 };
    if n == 0 || n > max {
        return Err(Error::OrderOutOfRange {
            order: n,
            range: if opts.allow_long { "1..=9" } else { "1..=8 (9 with the long-running flag)" },
        });
    }
    let run = || {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for lambda in cycle_types(n) {
            let found = search_type(n, &lambda);
            if opts.progress {
                eprintln!("order {n}: cycle type {lambda:?} done, {} classes", found.len());
            }
            all.extend(found);
        }
        all
    };
    let all = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Invalid(e.to_string()))?
            .install(run),
        None => run(),
    };
    let tables: Vec<CayleyTable> = all
        .into_iter()
        .map(|e| CayleyTable::new(n, e).expect("in range"))
        .filter(|t| filter.matches(&Quandle::from_verified(t.clone())))
        .collect();
    Ok(EnumerationResult {
        order: n,
        filter: filter.to_string(),
        count: tables.len(),
        tables,
    })
}

pub fn count_connected(n: usize) -> Result<usize> {
    Ok(enumerate_quandles(n, Filter::Connected)?.count)
}

/// Partitions of `n` with at least one part equal to 1, descending.
fn cycle_types(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.retain(|l| l.last() == Some(&1));
    out
}

/// Fixes 0, then lays out the non-trivial cycles on `1, 2, …` in order.
fn canonical_perm(n: usize, lambda: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut next = 1;
    for &len in lambda.iter().filter(|&&l| l > 1) {
        for k in 0..len {
            p[next + k] = next + (k + 1) % len;
        }
        next += len;
    }
    p
}

fn cycle_type(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut t = Vec::new();
    for s in 0..n {
        if !seen[s] {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
                len += 1;
            }
            t.push(len);
        }
    }
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

#[derive(Clone)]
struct State {
    n: usize,
    cols: Vec<Option<Vec<usize>>>,
}

impl State {
    /// Adds column `b` and everything it forces; false on a contradiction.
    fn add(&mut self, b: usize, col: Vec<usize>, lambda: &[usize]) -> bool {
        let mut queue = vec![(b, col)];
        while let Some((b, col)) = queue.pop() {
            match &self.cols[b] {
                Some(existing) => {
                    if *existing != col {
                        return false;
                    }
                    continue;
                }
                None => {
                    if cycle_type(&col).as_slice() > lambda {
                        return false;
                    }
                    self.cols[b] = Some(col);
                }
            }
            let rb = self.cols[b].clone().unwrap();
            for c in 0..self.n {
                let Some(rc) = self.cols[c].clone() else { continue };
                // R_c R_b R_c^-1 = R_{R_c(b)} and R_b R_c R_b^-1 = R_{R_b(c)}
                for (outer, inner, at) in [(&rc, &rb, rc[b]), (&rb, &rc, rb[c])] {
                    let mut conj = vec![0; self.n];
                    for x in 0..self.n {
                        conj[outer[x]] = outer[inner[x]];
                    }
                    match &self.cols[at] {
                        Some(e) if *e != conj => return false,
                        Some(_) => {}
                        None => queue.push((at, conj)),
                    }
                }
            }
        }
        true
    }
}

/// Column permutations `π` with `π(b) = b` compatible with the known columns:
/// whenever `π(c) = d` with `R_c`, `R_d` known, `π R_c = R_d π`.
fn column_candidates(st: &State, b: usize, lambda: &[usize]) -> Vec<Vec<usize>> {
    let n = st.n;
    let mut pi = vec![NONE; n];
    let mut used = vec![false; n];
    pi[b] = b;
    used[b] = true;
    let mut out = Vec::new();
    if propagate_column(st, &mut pi, &mut used, &mut Vec::new()) {
        column_rec(st, lambda, &mut pi, &mut used, &mut out);
    }
    out
}

fn column_rec(
    st: &State,
    lambda: &[usize],
    pi: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let Some(x) = pi.iter().position(|&v| v == NONE) else {
        if cycle_type(pi).as_slice() <= lambda {
            out.push(pi.to_vec());
        }
        return;
    };
    for y in 0..st.n {
        if used[y] {
            continue;
        }
        let mut trail = Vec::new();
        pi[x] = y;
        used[y] = true;
        trail.push(x);
        if propagate_column(st, pi, used, &mut trail) {
            column_rec(st, lambda, pi, used, out);
        }
        for z in trail {
            used[pi[z]] = false;
            pi[z] = NONE;
        }
    }
}

/// Closes `π` under `π(R_c(x)) = R_d(π(x))` for known `R_c`, `R_d` with `π(c) = d`.
fn propagate_column(st: &State, pi: &mut [usize], used: &mut [bool], trail: &mut Vec<usize>) -> bool {
    let n = st.n;
    loop {
        let mut changed = false;
        for c in 0..n {
            let d = pi[c];
            if d == NONE {
                continue;
            }
            let (Some(rc), Some(rd)) = (&st.cols[c], &st.cols[d]) else { continue };
            for x in 0..n {
                let y = pi[x];
                if y == NONE {
                    continue;
                }
                let (u, v) = (rc[x], rd[y]);
                if pi[u] == NONE {
                    if used[v] {
                        return false;
                    }
                    pi[u] = v;
                    used[v] = true;
                    trail.push(u);
                    changed = true;
                } else if pi[u] != v {
                    return false;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn to_table(st: &State) -> CayleyTable {
    let n = st.n;
    CayleyTable::from_fn(n, |a, b| st.cols[b].as_ref().unwrap()[a]).expect("in range")
}

fn explore(st: State, lambda: &[usize], out: &mut HashSet<Vec<usize>>) {
    let Some(b) = st.cols.iter().position(|c| c.is_none()) else {
        let t = to_table(&st);
        debug_assert!(verify_quandle(&t).is_ok());
        out.insert(canonical_labeling(&t).table.entries().to_vec());
        return;
    };
    for cand in column_candidates(&st, b, lambda) {
        let mut next = st.clone();
        if next.add(b, cand, lambda) {
            explore(next, lambda, out);
        }
    }
}

fn search_type(n: usize, lambda: &[usize]) -> HashSet<Vec<usize>> {
    let mut root = State {
        n,
        cols: vec![None; n],
    };
    if !root.add(0, canonical_perm(n, lambda), lambda) {
        return HashSet::new();
    }
    // fan out over the first free column, then over the second
    let mut frontier = vec![root];
    for _ in 0..2 {
        let mut next = Vec::new();
        let mut leaves = Vec::new();
        for st in frontier {
            match st.cols.iter().position(|c| c.is_none()) {
                None => leaves.push(st),
                Some(b) => {
                    for cand in column_candidates(&st, b, lambda) {
                        let mut s = st.clone();
                        if s.add(b, cand, lambda) {
                            next.push(s);
                        }
                    }
                }
            }
        }
        next.extend(leaves);
        frontier = next;
    }
    frontier
        .into_par_iter()
        .fold(HashSet::new, |mut acc, st| {
            explore(st, lambda, &mut acc);
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Abelian groups of order `n` as lists of prime-power cyclic orders.
pub fn abelian_groups(n: usize) -> Vec<AbelianGroupSpec> {
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in factors {
        let parts = cycle_types_free(e);
        let mut next = Vec::new();
        for g in &groups {
            for part in &parts {
                let mut h = g.clone();
                h.extend(part.iter().map(|&k| p.pow(k as u32)));
                next.push(h);
            }
        }
        groups = next;
    }
    groups
        .into_iter()
        .map(|o| AbelianGroupSpec::new(if o.is_empty() { vec![1] } else { o }).expect("valid"))
        .collect()
}

fn cycle_types_free(e: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

/// Every automorphism of `m`, found by choosing generator images `y_j` with
/// `n_j y_j = 0` and keeping the bijective maps.
pub fn abelian_automorphisms(m: &AbelianGroupSpec) -> Vec<Vec<usize>> {
    let orders = m.orders().to_vec();
    let size = m.size();
    let killed: Vec<Vec<usize>> = orders
        .iter()
        .map(|&o| (0..size).filter(|&y| m.scale(o as i64, y) == 0).collect())
        .collect();
    let mut out = Vec::new();
    let mut images = vec![0; orders.len()];
    fn rec(
        m: &AbelianGroupSpec,
        killed: &[Vec<usize>],
        j: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if j == killed.len() {
            let map: Vec<usize> = (0..m.size())
                .map(|x| {
                    m.decode(x)
                        .iter()
                        .zip(images.iter())
                        .fold(0, |acc, (&c, &y)| m.add(acc, m.scale(c as i64, y)))
                })
                .collect();
            let mut seen = vec![false; map.len()];
            if map.iter().all(|&v| !std::mem::replace(&mut seen[v], true)) {
                out.push(map);
            }
            return;
        }
        for &y in &killed[j] {
            images[j] = y;
            rec(m, killed, j + 1, images, out);
        }
    }
    rec(m, &killed, 0, &mut images, &mut out);
    out
}

/// One automorphism per conjugacy class of the group they form; `t` and
/// `g t g⁻¹` give isomorphic Alexander quandles (via `g`).
fn conjugacy_representatives(autos: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    if autos.is_empty() {
        return autos;
    }
    let degree = autos[0].len();
    let perms: Vec<Permutation> = autos.iter().map(|a| Permutation::from_images_unchecked(a.clone())).collect();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closure = PermGroup::trivial(degree);
    for p in &perms {
        if closure.order() == perms.len() {
            break;
        }
        if !closure.contains(p) {
            gens.push(p.clone());
            closure = PermGroup::generate(&gens, degree).expect("bounded by the automorphism count");
        }
    }
    let inverses: Vec<Permutation> = gens.iter().map(|g| g.inverse()).collect();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for p in perms {
        if seen.contains(&p) {
            continue;
        }
        reps.push(p.images().to_vec());
        seen.insert(p.clone());
        let mut stack = vec![p];
        while let Some(t) = stack.pop() {
            for (g, gi) in gens.iter().zip(&inverses) {
                let c = g.compose_unchecked(&t.compose_unchecked(gi));
                if seen.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
    }
    reps
}

pub const ALEXANDER_MAX_ORDER: usize = 16;

/// Isomorphism classes of Alexander quandles of order `n`.
pub fn enumerate_alexander(n: usize) -> Result<EnumerationResult> {
    Ok(enumerate_alexander_tagged(n)?.0)
}

/// As [`enumerate_alexander`], also returning one `(group, automorphism)` per class.
pub fn enumerate_alexander_tagged(
    n: usize,
) -> Result<(EnumerationResult, Vec<(AbelianGroupSpec, AutomorphismSpec)>)> {
    if n == 0 || n > ALEXANDER_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order: n,
            range: "1..=16",
        });
    }
    let mut found: Vec<(Vec<usize>, AbelianGroupSpec, Vec<usize>)> = Vec::new();
    for m in abelian_groups(n) {
        let reps = conjugacy_representatives(abelian_automorphisms(&m));
        let canon: Vec<(Vec<usize>, Vec<usize>)> = reps
            .into_par_iter()
            .map(|map| {
                let t = alexander_table(&m, &map);
                (canonical_labeling(&t).table.entries().to_vec(), map)
            })
            .collect();
        found.extend(canon.into_iter().map(|(c, map)| (c, m.clone(), map)));
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.dedup_by(|a, b| a.0 == b.0);
    let mut tables = Vec::new();
    let mut tags = Vec::new();
    for (c, m, map) in found {
        tables.push(CayleyTable::new(n, c).expect("in range"));
        tags.push((m.clone(), automorphism_matrix(&m, &map)));
    }
    Ok((
        EnumerationResult {
            order: n,
            filter: "alexander".into(),
            count: tables.len(),
            tables,
        },
        tags,
    ))
}

/// Matrix form of an automorphism: column `j` is the image of generator `j`.
fn automorphism_matrix(m: &AbelianGroupSpec, map: &[usize]) -> AutomorphismSpec {
    let k = m.orders().len();
    let mut mat = vec![vec![0i64; k]; k];
    for j in 0..k {
        let mut e = vec![0; k];
        e[j] = 1;
        let img = m.decode(map[m.encode(&e)]);
        for i in 0..k {
            mat[i][j] = img[i] as i64;
        }
    }
    AutomorphismSpec::Matrix(mat)
}

/// Checks that `f: q -> p` is a surjective homomorphism and reports whether
/// all fibers have equal size, which always holds when `p` is connected.
pub fn divisibility_check(q: &Quandle, p: &Quandle, f: &[usize]) -> Result<bool> {
    if !q.is_homomorphism_to(p, f) {
        return invalid("map is not a quandle homomorphism");
    }
    let mut fiber = vec![0usize; p.order()];
    for &v in f {
        fiber[v] += 1;
    }
    if fiber.contains(&0) {
        return invalid("map is not surjective");
    }
    let equal = fiber.iter().all(|&s| s == fiber[0]);
    if equal {
        assert_eq!(q.order() % p.order(), 0);
    }
    Ok(equal)
}
