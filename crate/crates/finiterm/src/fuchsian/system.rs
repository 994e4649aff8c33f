//! Fuchsian systems and their numerical monodromy matrices.

use num_complex::Complex64;

use super::FuchsError;
use crate::algmono::{skeleton_for_punctures, LoopSkeleton};
use crate::numkernel::{
    frobenius, identity, integrate_linear_ode, inverse, CMatrix, ToleranceConfig,
};

#[derive(Clone, Debug)]
pub struct FuchsianSystem {
    pub poles: Vec<Complex64>,
    pub residues: Vec<CMatrix>,
}

impl FuchsianSystem {
    pub fn new(poles: Vec<Complex64>, residues: Vec<CMatrix>) -> Result<Self, FuchsError> {
        if poles.is_empty() || poles.len() != residues.len() {
            return Err(FuchsError::DimensionMismatch);
        }
        for i in 0..poles.len() {
            for j in i + 1..poles.len() {
                if poles[i] == poles[j] {
                    return Err(FuchsError::DuplicatePoles);
                }
            }
        }
        let n = residues[0].nrows();
        if residues.iter().any(|a| a.nrows() != n || a.ncols() != n) {
            return Err(FuchsError::DimensionMismatch);
        }
        Ok(FuchsianSystem { poles, residues })
    }

    pub fn dim(&self) -> usize {
        self.residues[0].nrows()
    }

    /// Sum of residues; zero means the system is regular at infinity.
    pub fn residue_sum(&self) -> CMatrix {
        let mut acc = CMatrix::zeros(self.dim(), self.dim());
        for a in &self.residues {
            acc += a;
        }
        acc
    }
}

#[derive(Clone, Debug)]
pub struct MonodromyMatrices {
    pub skeleton: LoopSkeleton,
    /// One transfer matrix per skeleton loop, in skeleton order.
    pub matrices: Vec<CMatrix>,
    /// Inverse of the ordered product of the loop matrices.
    pub infinity_matrix: CMatrix,
    /// ‖ordered product · infinity_matrix − I‖ (numerical inversion error).
    pub product_residual: f64,
}

impl MonodromyMatrices {
    pub fn dim(&self) -> usize {
        self.infinity_matrix.nrows()
    }

    /// Ordered product M_m ⋯ M_1: continuation along loop 1 first.
    pub fn ordered_product(&self) -> CMatrix {
        self.matrices
            .iter()
            .fold(identity(self.dim()), |acc, m| m * acc)
    }
}

/// Integrates Y′ = A(x)Y around each petal loop of the pole skeleton.
pub fn fuchsian_monodromy(
    sys: &FuchsianSystem,
    tol: &ToleranceConfig,
) -> Result<MonodromyMatrices, FuchsError> {
    let skeleton = skeleton_for_punctures(&sys.poles);
    let matrices: Vec<CMatrix> = skeleton
        .loops
        .iter()
        .map(|path| integrate_linear_ode(&sys.poles, &sys.residues, path, tol.ode))
        .collect::<Result<_, _>>()?;
    let n = sys.dim();
    let product = matrices.iter().fold(identity(n), |acc, m| m * acc);
    let infinity_matrix = inverse(&product)?;
    let product_residual = frobenius(&(&product * &infinity_matrix - identity(n)));
    Ok(MonodromyMatrices {
        skeleton,
        matrices,
        infinity_matrix,
        product_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::matrix_exp;
    use nalgebra::dmatrix;
    use num_complex::Complex64 as C;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    pub(crate) fn sl2_system(eps: f64) -> FuchsianSystem {
        // Non-commuting nilpotent pair spanning sl2, scaled by eps.
        let e = dmatrix![c(0.0,0.0), c(eps,0.0); c(0.0,0.0), c(0.0,0.0)];
        let f = dmatrix![c(0.0,0.0), c(0.0,0.0); c(eps,0.0), c(0.0,0.0)];
        FuchsianSystem::new(vec![c(0.0, 0.0), c(1.0, 0.0)], vec![e, f]).unwrap()
    }

    #[test]
    fn single_pole_scalar_monodromy() {
        let lambda = c(0.3, 0.1);
        let sys = FuchsianSystem::new(vec![c(0.0, 0.0)], vec![dmatrix![lambda]]).unwrap();
        let mon = fuchsian_monodromy(&sys, &ToleranceConfig::default()).unwrap();
        let expected = (C::new(0.0, 2.0 * std::f64::consts::PI) * lambda).exp();
        assert_eq!(mon.matrices.len(), 1);
        assert!((mon.matrices[0][(0, 0)] - expected).norm() < 1e-8);
    }

    #[test]
    fn triangular_residues_give_triangular_monodromy() {
        let a = dmatrix![c(0.25,0.0), c(1.0,0.0); c(0.0,0.0), c(-0.5,0.0)];
        let b = dmatrix![c(0.1,0.0), c(-2.0,0.0); c(0.0,0.0), c(0.4,0.0)];
        let sys = FuchsianSystem::new(vec![c(0.0, 0.0), c(1.0, 0.0)], vec![a, b]).unwrap();
        let tol = ToleranceConfig::default();
        let mon = fuchsian_monodromy(&sys, &tol).unwrap();
        for m in &mon.matrices {
            assert!(m[(1, 0)].norm() < 10.0 * 1e-8, "lower entry {:?}", m[(1, 0)]);
        }
    }

    #[test]
    fn determinant_equals_exp_trace() {
        let sys = sl2_system(0.5);
        let tol = ToleranceConfig::default();
        let mon = fuchsian_monodromy(&sys, &tol).unwrap();
        for (k, m) in mon.matrices.iter().enumerate() {
            let i = mon.skeleton.targets[k];
            let tr: C = sys.residues[i].trace();
            let expected = (C::new(0.0, 2.0 * std::f64::consts::PI) * tr).exp();
            let det = m.determinant();
            assert!((det - expected).norm() < 1e-7, "loop {k}: det {det} vs {expected}");
        }
    }

    #[test]
    fn zero_residue_sum_gives_identity_product() {
        let a = dmatrix![c(0.2,0.0), c(0.7,0.0); c(-0.3,0.0), c(-0.2,0.0)];
        let sys = FuchsianSystem::new(
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![a.clone(), -a.clone()],
        )
        .unwrap();
        assert!(frobenius(&sys.residue_sum()) < 1e-15);
        let mon = fuchsian_monodromy(&sys, &ToleranceConfig::default()).unwrap();
        let product = mon.ordered_product();
        let dev = frobenius(&(&product - identity(2)));
        assert!(dev < 1e-7, "product deviates from identity by {dev}");
    }

    #[test]
    fn small_residues_approach_exponentials_quadratically() {
        let tol = ToleranceConfig::default();
        let errs: Vec<f64> = [2e-2, 1e-2, 5e-3]
            .iter()
            .map(|&eps| {
                let sys = sl2_system(eps);
                let mon = fuchsian_monodromy(&sys, &tol).unwrap();
                mon.matrices
                    .iter()
                    .enumerate()
                    .map(|(k, m)| {
                        let i = mon.skeleton.targets[k];
                        let ex = matrix_exp(&(sys.residues[i].clone()
                            * C::new(0.0, 2.0 * std::f64::consts::PI)));
                        frobenius(&(m - ex))
                    })
                    .fold(0.0, f64::max)
            })
            .collect();
        for w in errs.windows(2) {
            let ratio = w[0] / w[1];
            assert!(
                (2.0..8.0).contains(&ratio),
                "expected quadratic decay, got ratio {ratio} from {errs:?}"
            );
        }
    }

    #[test]
    fn constructor_rejects_bad_input() {
        let a = dmatrix![c(0.0,0.0)];
        assert!(matches!(
            FuchsianSystem::new(vec![c(0.0, 0.0), c(0.0, 0.0)], vec![a.clone(), a.clone()]),
            Err(FuchsError::DuplicatePoles)
        ));
        let b = dmatrix![c(0.0,0.0), c(0.0,0.0); c(0.0,0.0), c(0.0,0.0)];
        assert!(matches!(
            FuchsianSystem::new(vec![c(0.0, 0.0), c(1.0, 0.0)], vec![a, b]),
            Err(FuchsError::DimensionMismatch)
        ));
    }
}
