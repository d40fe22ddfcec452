//! Permutations of `0..n` and explicitly materialized permutation groups.
//!
//! Composition applies the right operand first: `p.compose(&q)` maps `i` to
//! `p(q(i))`. With this convention the right translations of a quandle
//! satisfy `R_c ∘ R_b = R_{b*c} ∘ R_c`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{invalid, Error, Result};

/// Default cap on the number of elements a closure may produce.
pub const DEFAULT_MAX_CLOSURE: usize = 10_000_000;

/// Current closure bound, overridable through `QF_MAX_CLOSURE`.
pub fn closure_bound() -> usize {
    std::env::var("QF_MAX_CLOSURE")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CLOSURE)
}

/// A bijection of `{0, .., n-1}` stored by its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return invalid(format!("{images:?} is not a permutation of 0..{n}"));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n || touched[x] {
                    return invalid(format!("cycles {cycles:?} are not disjoint on 0..{n}"));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Non-trivial cycles, each starting at its least element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Cycle notation with labels shifted by `offset` (use 1 for 1-indexed display).
    pub fn cycle_string(&self, offset: usize) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return format!("({offset})");
        }
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|x| (x + offset).to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        f.write_str(&self.cycle_string(0))
    }
}

/// `p ∘ q` (apply `q` first).
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A permutation group with every element materialized.
///
/// Elements are kept sorted lexicographically by image list, so iteration
/// order is reproducible.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Closure of `gens` under composition, bounded by [`closure_bound`].
    pub fn generate(gens: &[Permutation], degree: usize) -> Result<Self> {
        Self::generate_with_bound(gens, degree, closure_bound())
    }

    pub fn generate_with_bound(gens: &[Permutation], degree: usize, bound: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
        }
        let mut generators: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        generators.sort();
        generators.dedup();

        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose_unchecked(&x);
                if !seen.contains(&y) {
                    if seen.len() >= bound {
                        return Err(Error::ResourceLimit {
                            what: "permutation group closure",
                            bound,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Wraps an element list already known to be closed; picks a small generating set.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let mut generators = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::new();
        span.insert(Permutation::identity(degree));
        for e in &elements {
            if span.contains(e) {
                continue;
            }
            generators.push(e.clone());
            // re-close the span with the new generator
            let mut queue: VecDeque<Permutation> = span.iter().cloned().collect();
            while let Some(x) = queue.pop_front() {
                for g in &generators {
                    let y = g.compose_unchecked(&x);
                    if span.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        debug_assert_eq!(span.len(), elements.len());
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    /// Position of `p` in [`elements`](Self::elements).
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// Orbit partition of `0..degree`, blocks sorted internally and by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for i in 0..self.degree {
                uf.union(i, g.apply(i));
            }
        }
        uf.blocks()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let elems = self
            .elements
            .iter()
            .filter(|g| g.apply(point) == point)
            .cloned()
            .collect();
        PermGroup::from_closed_elements(self.degree, elems)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    /// Conjugation-closed inside `g`; checked on generators, which suffices.
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        if !self.is_subgroup_of(g) {
            return false;
        }
        g.generators.iter().all(|x| {
            let xi = x.inverse();
            self.generators
                .iter()
                .all(|h| self.contains(&x.compose_unchecked(h).compose_unchecked(&xi)))
        })
    }

    /// Whether the coset group `self / n` is cyclic.
    pub fn quotient_is_cyclic(&self, n: &PermGroup) -> Result<bool> {
        quotient_is_cyclic(self, n)
    }
}

/// Whether `g / n` is cyclic. Fails unless `n` is a normal subgroup of `g`.
pub fn quotient_is_cyclic(g: &PermGroup, n: &PermGroup) -> Result<bool> {
    if !n.is_subgroup_of(g) {
        return invalid("quotient_is_cyclic: n is not a subgroup of g");
    }
    if !n.is_normal_in(g) {
        return invalid("quotient_is_cyclic: n is not normal in g");
    }
    let index = g.order() / n.order();
    if index == 1 {
        return Ok(true);
    }
    // the coset xN has order index iff x^k ∉ N for 0 < k < index
    let id = Permutation::identity(g.degree());
    'outer: for x in g.elements() {
        let mut p = x.clone();
        for _ in 1..index {
            if n.contains(&p) {
                continue 'outer;
            }
            p = x.compose_unchecked(&p);
        }
        debug_assert!(n.contains(&p) || p == id);
        return Ok(true);
    }
    Ok(false)
}

/// Plain union-find over `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two classes were distinct.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so the representative is the class minimum
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    pub(crate) fn blocks(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            let r = self.find(i);
            by_root[r].push(i);
        }
        by_root.into_iter().filter(|b| !b.is_empty()).collect()
    }
}
