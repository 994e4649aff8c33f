//! Monodromy of algebraic functions y(x) defined by f(x, y) = 0: branch
//! points from the discriminant, a petal loop skeleton, numerical sheet
//! tracking, and representability verdicts from the group structure.

mod branch;
mod report;
mod skeleton;
mod track;

pub use branch::{branch_points, BranchData};
pub use report::{classify_algebraic, monodromy, AlgebraicClassification, AlgebraicMonodromyReport};
pub use skeleton::{build_skeleton, skeleton_for_punctures, LoopSkeleton};
pub use track::{sheet_roots, track_loop};

use num_complex::Complex64;

use crate::numkernel::NumError;
use crate::permgrp::GroupError;

#[derive(Debug, thiserror::Error)]
pub enum AlgError {
    #[error("polynomial has a repeated factor in y (vanishing discriminant)")]
    NotSquarefree,
    #[error("leading coefficient in y must be a nonzero constant")]
    NotMonicInY,
    #[error("sheets collide near x = {x}: minimal root gap {gap:.3e}")]
    SheetCollision { x: Complex64, gap: f64 },
    #[error("tracking step underflow at x = {x}")]
    StepUnderflow { x: Complex64 },
    #[error("could not match tracked sheets back to the initial sheets")]
    SheetMatchFailed,
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
