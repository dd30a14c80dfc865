//! Finite rings given by structure constants, their centers and radicals,
//! exterior algebras over them, and executable checks of the structure
//! theory of centrally essential rings.

// index loops mirror the tensor indices of the structure constants
#![allow(clippy::needless_range_loop)]

pub mod central;
pub mod corpus;
pub mod criteria;
pub mod error;
pub mod exterior;
pub mod finring;
pub mod linalg;

pub use central::{
    center, commutator, cyclic_c_submodule, is_centrally_essential, is_essential_c_submodule,
    socle_c_module, CenterData, Essentiality,
};
pub use error::{LawViolation, Result, RingError};
pub use exterior::{
    build_exterior, exterior_mul, sign, ExteriorAlgebra, ExteriorElement, Sign, SubsetIndex,
};
pub use finring::{
    annihilator_of_int, ideal_closure, idempotents, jacobson_radical, prime_radical, quotient_ring,
    socle_right, structural_predicates, Element, ElementSet, Encoding, Limits, PredicateRecord,
    Ring, RingSpec, Submodule, SubmoduleKind,
};
