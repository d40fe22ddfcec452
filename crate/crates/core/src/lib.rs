//! Finite quandles, racks, quasigroups and Moufang loops: constructions,
//! enumeration up to isomorphism, (co)homology, abelian and dynamical
//! extensions, and state-sum knot invariants.
//!
//! Cayley tables use `get(a, b) = a * b`; the column of `b` is the right
//! translation `R_b`. Permutations compose right to left.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod cohomology;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod extensions;
pub mod group;
pub mod knots;
pub mod loops;
pub mod perm;
pub mod quandle;
pub mod table;

pub use error::{Error, Result};
pub use perm::{PermGroup, Permutation};
pub use quandle::Quandle;
pub use table::CayleyTable;
