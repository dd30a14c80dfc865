//! Finite rings: representation, arithmetic, ideals, radicals, quotients and
//! structural predicates.

mod predicates;
mod quotient;
mod radical;
mod ring;
mod set;
mod socle;
mod submodule;

pub use predicates::{
    is_commutative, regular_witness, semiprime_witness, singular_witness, square_zero_witness,
    structural_predicates, zero_divisor_witness, PredicateRecord,
};
pub use quotient::{quotient_ring, subring};
pub use radical::{
    ideal_product, idempotents, is_local, is_nilpotent, is_unit, jacobson_radical,
    nilpotency_index, prime_radical, units,
};
pub use ring::{Coords, Element, Encoding, Limits, Ring, RingSpec, MAX_MODULUS, MAX_TABLE_SIZE};
pub use set::ElementSet;
pub use socle::socle_right;
pub use submodule::{annihilator_of_int, ideal_closure, Submodule, SubmoduleKind};

pub(crate) use socle::{check_socle_cap, socle_by_cyclic};
pub(crate) use submodule::{close, Action};
