//! Numeric and exact-arithmetic substrate: rational polynomials, all-roots
//! solving, resultants, small dense complex linear algebra, and linear-ODE
//! transfer matrices along paths.

pub mod matrix;
pub mod ode;
pub mod path;
pub mod poly;
pub mod resultant;
pub mod roots;

pub use matrix::{
    eigen, frobenius, identity, inverse, matrix_exp, null_space, rank, singular_values, CMatrix,
    CVector,
};
pub use ode::integrate_linear_ode;
pub use path::{circle_polyline, PathPolyline};
pub use poly::{rat, rat_to_f64, ratio, BiPoly, CPoly, Rational, UniPoly};
pub use resultant::{discriminant_in_y, resultant_in_y, sylvester_determinant};
pub use roots::{roots_all, roots_all_complex};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Every floating tolerance in one place; the single knob for the
/// refinement-stability tests.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Root-finding residual tolerance.
    pub root: f64,
    /// ODE local error per unit arclength.
    pub ode: f64,
    /// Clustering radius factor base for roots and eigenvalues.
    pub cluster: f64,
    /// Singular-value rank threshold for Lie-closure decisions.
    pub rank: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            root: 1e-10,
            ode: 1e-10,
            cluster: 1e-9,
            rank: 1e-9,
        }
    }
}

impl ToleranceConfig {
    /// All tolerances tightened by the given factor (> 1 tightens).
    pub fn tightened(&self, factor: f64) -> ToleranceConfig {
        ToleranceConfig {
            root: (self.root / factor).max(1e-13),
            ode: (self.ode / factor).max(1e-13),
            cluster: (self.cluster / factor).max(1e-13),
            rank: (self.rank / factor).max(1e-13),
        }
    }
}

#[derive(Debug, Error)]
pub enum NumError {
    #[error("iteration cap hit without convergence")]
    NonConvergence,
    #[error("coefficients overflow floating range")]
    OverflowingCoefficients,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial has y-degree zero")]
    ConstantInY,
    #[error("leading y-coefficient vanishes identically; deflate first")]
    DegenerateLeadingCoefficient,
    #[error("path passes too close to pole {pole} (distance {distance})")]
    PathTooClose { pole: Complex64, distance: f64 },
    #[error("step size underflow near {position} (stiffness)")]
    StepUnderflow { position: Complex64 },
    #[error("matrix is singular")]
    SingularMatrix,
}
