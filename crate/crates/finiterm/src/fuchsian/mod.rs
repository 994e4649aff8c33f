//! Monodromy of Fuchsian systems Y′ = Σ Aᵢ/(x−aᵢ) · Y: transfer matrices
//! along the petal skeleton, Lie-algebra solvability of the residues,
//! simultaneous triangularization, and the representability verdicts that
//! hinge on it.

mod classify;
mod lie;
mod system;

pub use classify::{classify_fuchsian, generic_stabilizer_probe, FuchsianClassification, StabilizerProbe};
pub use lie::{is_simultaneously_triangularizable, lie_closure, LieClosure};
pub use system::{fuchsian_monodromy, FuchsianSystem, MonodromyMatrices};

use crate::numkernel::NumError;

#[derive(Debug, thiserror::Error)]
pub enum FuchsError {
    #[error("poles must be pairwise distinct")]
    DuplicatePoles,
    #[error("all residue matrices must be square and share one dimension")]
    DimensionMismatch,
    #[error("rank decision ambiguous: residual {residual:.3e} within a factor 10 of threshold {threshold:.3e}; tighten tolerances")]
    RankThresholdAmbiguous { residual: f64, threshold: f64 },
    #[error("triangularization witness failed verification: sub-diagonal mass {subdiagonal_mass:.3e}")]
    WitnessVerificationFailed { subdiagonal_mass: f64 },
    #[error("no common eigenvector found for a solvable residue algebra")]
    NoCommonEigenvector,
    #[error(transparent)]
    Num(#[from] NumError),
}
