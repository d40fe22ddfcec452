use std::fmt;

use thiserror::Error;

/// Which defining identity a table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `a * a = a`
    Idempotency,
    /// every right translation `x -> x * b` is a bijection
    RightInvertibility,
    /// every left translation `x -> a * x` is a bijection
    LeftInvertibility,
    /// `(a * b) * c = (a * c) * (b * c)`
    SelfDistributivity,
    Associativity,
    Identity,
    Inverse,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Idempotency => "idempotency",
            Axiom::RightInvertibility => "right invertibility",
            Axiom::LeftInvertibility => "left invertibility",
            Axiom::SelfDistributivity => "right self-distributivity",
            Axiom::Associativity => "associativity",
            Axiom::Identity => "identity",
            Axiom::Inverse => "inverses",
        };
        f.write_str(s)
    }
}

/// A failed axiom together with the elements that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("{what} exceeds the configured bound of {bound}")]
    ResourceLimit { what: &'static str, bound: usize },

    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("not a quandle: {}", join(.0))]
    NotAQuandle(Vec<Violation>),

    #[error("not a quasigroup: {}", join(.0))]
    NotAQuasigroup(Vec<Violation>),

    #[error("not a group: {}", join(.0))]
    NotAGroup(Vec<Violation>),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("order {order} is outside the supported range {range}")]
    OrderOutOfRange { order: usize, range: &'static str },

    #[error("not a cocycle: condition fails at {witness:?}")]
    NotACocycle { witness: Vec<usize> },

    #[error("{0}")]
    Invalid(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
