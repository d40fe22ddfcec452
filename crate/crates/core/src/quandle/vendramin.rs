use crate::constructions::homogeneous;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

use super::{are_isomorphic, classify::is_connected, Quandle};

pub const VENDRAMIN_MAX_ORDER: usize = 8;

/// Rebuilds a connected quandle as the homogeneous quandle `(G, H, I_z)` with
/// `G = Inn(q)`, `H` the stabilizer of element 0 and `I_z` conjugation by
/// `z = R_0`, then tests isomorphism with `q`.
pub fn verify_vendramin(q: &Quandle) -> Result<bool> {
    if q.order() > VENDRAMIN_MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order: q.order(),
            range: "1..=8",
        });
    }
    if !is_connected(q) {
        return Err(Error::Invalid("quandle is not connected".into()));
    }
    let inn = q.inner_group()?;
    let g = FiniteGroup::from_perm_group(&inn);
    let h: Vec<usize> = inn
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, p)| p.apply(0) == 0)
        .map(|(i, _)| i)
        .collect();
    let z = inn.index_of(&q.right_map(0)?).expect("R_0 lies in Inn");
    if h.iter().any(|&x| g.mul(z, x) != g.mul(x, z)) {
        return Ok(false);
    }
    let phi = g.conjugation_by(z);
    let rebuilt = homogeneous(&g, &h, &phi)?;
    Ok(are_isomorphic(q, &rebuilt).is_some())
}
