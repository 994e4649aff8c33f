//! Ritt decomposition of polynomials, recognition of power and Chebyshev
//! components up to linear changes, and invertibility by radicals and
//! k-radicals via the monodromy of the inverse function.

mod classify;
mod decompose;
mod recognize;

pub use classify::{
    inverse_monodromy, invertible_by_k_radicals, invertible_by_radicals, KRadicalReport,
    RadicalReport,
};
pub use decompose::{decompose, is_primitive, split_once, ComponentTag, Decomposition};
pub use recognize::{chebyshev_poly, recognize_chebyshev, recognize_power, LinearChange};

use crate::algmono::AlgError;
use crate::permgrp::GroupError;

#[derive(Debug, thiserror::Error)]
pub enum RittError {
    #[error("recognizers require a primitive (indecomposable) polynomial")]
    NotPrimitiveInput,
    #[error("inverse monodromy has no full cycle at infinity; input is not a polynomial inverse")]
    InfinityNotFullCycle,
    #[error("structural classification ({structural}) contradicts group solvability ({solvable}); both certificates attached to the report")]
    CrossCheckMismatch { structural: bool, solvable: bool },
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
