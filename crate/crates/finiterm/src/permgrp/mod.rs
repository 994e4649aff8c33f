//! Permutation groups: exact orders via stabilizer chains, transitivity and
//! primitivity, derived series, composition-factor signatures, solvability
//! and k-solvability, stabilizers and monodromy pairs.

mod group;
mod perm;
mod series;
pub mod simple_table;

pub use group::{MonodromyPair, PermutationGroup};
pub use perm::Permutation;
pub use series::{
    composition_factor_signature, derived_series, derived_subgroup, is_almost_solvable_finite,
    is_k_solvable, is_solvable, normal_closure, CompositionFactor, FactorSignature,
};

use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order {order} exceeds the computation cap")]
    OrderTooLarge { order: BigUint },
    #[error("operation requires a transitive group")]
    NotTransitive,
    #[error("nonabelian simple factor of order {order} is not in the bundled table")]
    UnidentifiedSimpleFactor { order: u64 },
}
