use crate::error::{Error, Result};
use crate::perm::UnionFind;

use super::Quandle;

/// A subquandle together with the original elements it was induced on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquandle {
    /// Original element indices, ascending; element `i` of `quandle` is `elements[i]`.
    pub elements: Vec<usize>,
    pub quandle: Quandle,
}

fn induced(q: &Quandle, elements: Vec<usize>) -> Subquandle {
    let table = q.table().restrict(&elements).expect("block is closed");
    Subquandle {
        elements,
        quandle: Quandle::from_verified(table),
    }
}

/// Orbits of `Inn(q)`, each returned as an induced subquandle.
pub fn orbit_decomposition(q: &Quandle) -> Vec<Subquandle> {
    let n = q.order();
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        for b in 0..n {
            uf.union(a, q.op(a, b));
        }
    }
    uf.blocks().into_iter().map(|b| induced(q, b)).collect()
}

pub const NELSON_WONG_MAX_ORDER: usize = 16;

fn closed(q: &Quandle, mask: u32) -> bool {
    let n = q.order();
    for a in 0..n {
        if mask >> a & 1 == 0 {
            continue;
        }
        for b in 0..n {
            if mask >> b & 1 == 1 && mask >> q.op(a, b) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// Minimal `X`-complemented subquandles (a subquandle whose complement is
/// also a subquandle, the empty set included), found by exhaustive subset
/// search. Blocks are sorted by least element.
pub fn nelson_wong_decomposition(q: &Quandle) -> Result<Vec<Subquandle>> {
    let n = q.order();
    if n > NELSON_WONG_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order: n,
            range: "1..=16",
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let closed_sets: Vec<bool> = (0..=full).map(|m| closed(q, m)).collect();
    let complemented: Vec<u32> = (1..=full)
        .filter(|&m| closed_sets[m as usize] && closed_sets[(full & !m) as usize])
        .collect();
    let minimal: Vec<u32> = complemented
        .iter()
        .copied()
        .filter(|&m| !complemented.iter().any(|&s| s != m && s & m == s))
        .collect();
    let mut covered = 0u32;
    for &m in &minimal {
        if covered & m != 0 {
            return Err(Error::Invalid(
                "minimal complemented subquandles overlap".into(),
            ));
        }
        covered |= m;
    }
    debug_assert_eq!(covered, full);
    let mut blocks: Vec<Vec<usize>> = minimal
        .into_iter()
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    blocks.sort();
    Ok(blocks.into_iter().map(|b| induced(q, b)).collect())
}
