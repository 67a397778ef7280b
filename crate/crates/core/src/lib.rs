//! Finite ordered semigroups: validation, order ideals, Green's relations,
//! semilattice congruences and decompositions, witnessed property deciders,
//! the finite power-set construction, and exhaustive enumeration of small
//! structures for counterexample search.
//!
//! Everything operates on an immutable [`OrderedSemigroup`], a Cayley table
//! over `n` elements (0-based indices) together with a compatible partial
//! order. All operations are pure functions of their inputs.

pub mod constructions;
pub mod corpus;
pub mod decompose;
mod error;
pub mod partition;
pub mod properties;
pub mod relations;
pub mod search;
pub mod structure;
mod subset;
mod verdict;

pub use error::Error;
pub use partition::Partition;
pub use properties::{check, PropertyId, TheoremId, TheoremReport};
pub use structure::{
    OrderedSemigroup, RawStructure, Side, ValidationError, ValidationErrorKind, MAX_ELEMENTS,
};
pub use subset::Subset;
pub use verdict::{Verdict, Witness};

pub type Result<T, E = Error> = std::result::Result<T, E>;
