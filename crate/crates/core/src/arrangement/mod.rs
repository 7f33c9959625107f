//! Central hyperplane arrangements over the rationals and their
//! intersection lattices.

mod delres;
mod families;
mod hyperplane;
mod lattice;
mod parse;

pub use delres::deletion_restriction;
pub use families::{builtin_family, parse_family_spec, Family};
pub use hyperplane::{canonicalize_hyperplane, Arrangement, Hyperplane};
pub use lattice::{build_lattice, Flat, IntersectionLattice, DEFAULT_MAX_FLATS};
pub use parse::{arrangement_to_json, parse_arrangement, parse_arrangement_json, parse_arrangement_text};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("hyperplane normal is the zero vector")]
    ZeroNormal,
    #[error("hyperplane has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("hyperplanes {0} and {1} coincide; the divisor must be reduced")]
    DuplicateHyperplane(usize, usize),
    #[error("hyperplane on line {line} has nonzero constant term {constant}; only central arrangements are supported")]
    NonCentral { line: usize, constant: String },
    #[error("malformed arrangement input: {0}")]
    Malformed(String),
    #[error("intersection lattice exceeds the limit of {0} flats")]
    FlatLimit(usize),
    #[error("invalid builtin family: {0}")]
    InvalidFamily(String),
    #[error("hyperplane index {index} out of range for {d} hyperplanes")]
    InvalidIndex { index: usize, d: usize },
}
