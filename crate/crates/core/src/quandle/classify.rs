use crate::error::Result;
use crate::perm::UnionFind;

use super::Quandle;

/// Structural flags of a quandle. `simple` is `None` above order 8.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub kei: bool,
    pub latin: bool,
    pub medial: bool,
    pub connected: bool,
    pub faithful: bool,
    pub simple: Option<bool>,
    pub inner_order: usize,
    pub transvection_order: usize,
}

pub const SIMPLE_CHECK_MAX_ORDER: usize = 8;

pub fn classify(q: &Quandle) -> Result<ClassificationReport> {
    let inner = q.inner_group()?;
    let transv = q.transvection_group()?;
    Ok(ClassificationReport {
        kei: is_kei(q),
        latin: is_latin(q),
        medial: is_medial(q),
        connected: inner.is_transitive(),
        faithful: is_faithful(q),
        simple: is_simple(q),
        inner_order: inner.order(),
        transvection_order: transv.order(),
    })
}

impl Quandle {
    pub fn classify(&self) -> Result<ClassificationReport> {
        classify(self)
    }
}

pub fn is_kei(q: &Quandle) -> bool {
    let n = q.order();
    (0..n).all(|a| (0..n).all(|b| q.op(q.op(a, b), b) == a))
}

pub fn is_latin(q: &Quandle) -> bool {
    (0..q.order()).all(|a| {
        let mut seen = vec![false; q.order()];
        q.table().row(a).iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    })
}

pub fn is_medial(q: &Quandle) -> bool {
    let n = q.order();
    for a in 0..n {
        for b in 0..n {
            let ab = q.op(a, b);
            for c in 0..n {
                let ac = q.op(a, c);
                for d in 0..n {
                    if q.op(ab, q.op(c, d)) != q.op(ac, q.op(b, d)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn is_left_distributive(q: &Quandle) -> bool {
    let n = q.order();
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| q.op(a, q.op(b, c)) == q.op(q.op(a, b), q.op(a, c))))
    })
}

pub fn is_faithful(q: &Quandle) -> bool {
    let mut cols: Vec<Vec<usize>> = (0..q.order()).map(|b| q.table().column(b)).collect();
    cols.sort();
    cols.windows(2).all(|w| w[0] != w[1])
}

pub fn is_connected(q: &Quandle) -> bool {
    orbit_count(q) <= 1
}

/// Number of `Inn`-orbits, via union-find on `a ~ a*b`.
pub fn orbit_count(q: &Quandle) -> usize {
    let mut uf = UnionFind::new(q.order());
    for a in 0..q.order() {
        for b in 0..q.order() {
            uf.union(a, q.op(a, b));
        }
    }
    uf.blocks().len()
}

/// Simple iff the only congruences are equality and the full relation.
/// Decided by enumerating set partitions; `None` above order 8.
pub fn is_simple(q: &Quandle) -> Option<bool> {
    let n = q.order();
    if n > SIMPLE_CHECK_MAX_ORDER {
        return None;
    }
    if n <= 1 {
        return Some(true);
    }
    // restricted growth strings: class[0] = 0, class[i] <= 1 + max(class[..i])
    let mut class = vec![0usize; n];
    let mut found_proper = false;
    rgs(q, &mut class, 1, 0, &mut found_proper);
    Some(!found_proper)
}

fn rgs(q: &Quandle, class: &mut [usize], i: usize, max: usize, found: &mut bool) {
    if *found {
        return;
    }
    let n = class.len();
    if i == n {
        let blocks = max + 1;
        if blocks > 1 && blocks < n && is_congruence(q, class) {
            *found = true;
        }
        return;
    }
    for c in 0..=max + 1 {
        class[i] = c;
        rgs(q, class, i + 1, max.max(c), found);
    }
}

pub(crate) fn is_congruence(q: &Quandle, class: &[usize]) -> bool {
    let n = q.order();
    for a in 0..n {
        for a2 in 0..n {
            if class[a] != class[a2] {
                continue;
            }
            for b in 0..n {
                for b2 in 0..n {
                    if class[b] == class[b2] && class[q.op(a, b)] != class[q.op(a2, b2)] {
                        return false;
                    }
                }
            }
        }
    }
    true
}
