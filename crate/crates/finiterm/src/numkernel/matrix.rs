//! Small dense complex linear algebra: eigen decomposition by Schur plus
//! null-space extraction, rank decisions by singular value, and the matrix
//! exponential used for monodromy cross-checks.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::NumError;

/// Square complex matrix; entries are expected finite.
pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

pub fn is_finite(m: &CMatrix) -> bool {
    m.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Eigenvalues grouped at clustering radius 10·tol, each with an orthonormal
/// eigenspace basis (null space of A - λI at singular-value threshold).
pub fn eigen(m: &CMatrix, tol: f64) -> Result<Vec<(Complex64, Vec<CVector>)>, NumError> {
    assert!(m.is_square());
    let n = m.nrows();
    if !is_finite(m) {
        return Err(NumError::OverflowingCoefficients);
    }
    let schur = nalgebra::linalg::Schur::try_new(m.clone(), 1e-14, 10_000)
        .ok_or(NumError::NonConvergence)?;
    let t = schur.unpack().1;
    let mut values: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    values.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    // Cluster eigenvalues at radius 10*tol (relative to matrix scale).
    let scale = frobenius(m).max(1.0);
    let radius = 10.0 * tol * scale;
    let mut groups: Vec<(Complex64, usize)> = Vec::new();
    for v in values {
        match groups.last_mut() {
            Some((center, count)) if (v - *center).norm() <= radius => {
                *center = (*center * *count as f64 + v) / (*count as f64 + 1.0);
                *count += 1;
            }
            _ => groups.push((v, 1)),
        }
    }
    let mut out = Vec::new();
    for (lambda, _) in groups {
        let shifted = m - CMatrix::identity(n, n) * lambda;
        let basis = null_space(&shifted, tol);
        if basis.is_empty() {
            // The clustered center can sit slightly off every exact
            // eigenvalue; retry with a looser threshold before giving up.
            let basis = null_space(&shifted, tol * 100.0);
            if basis.is_empty() {
                return Err(NumError::NonConvergence);
            }
            out.push((lambda, basis));
        } else {
            out.push((lambda, basis));
        }
    }
    Ok(out)
}

/// Orthonormal basis of the null space at singular-value threshold
/// tol·max(1, largest singular value).
pub fn null_space(m: &CMatrix, tol: f64) -> Vec<CVector> {
    let svd = m.clone().svd(true, true);
    let v_t = svd.v_t.expect("svd requested with vectors");
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let threshold = tol * smax.max(1.0);
    let mut basis = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s <= threshold {
            basis.push(v_t.row(i).transpose().map(|c| c.conj()));
        }
    }
    // Square matrices with fewer singular values than columns should not
    // occur here (m is square in all callers), but keep the count honest.
    basis
}

/// Numerical rank at singular-value threshold tol·scale.
pub fn rank(m: &CMatrix, tol: f64, scale: f64) -> usize {
    let svd = m.clone().svd(false, false);
    let threshold = tol * scale.max(1.0);
    svd.singular_values.iter().filter(|&&s| s > threshold).count()
}

pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let svd = m.clone().svd(false, false);
    svd.singular_values.iter().cloned().collect()
}

/// Matrix exponential by scaling and squaring with a Taylor core; adequate
/// for the small residue matrices handled here.
pub fn matrix_exp(m: &CMatrix) -> CMatrix {
    let n = m.nrows();
    let norm = frobenius(m);
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m.map(|c| c / 2f64.powi(s as i32));
    let mut term = CMatrix::identity(n, n);
    let mut acc = CMatrix::identity(n, n);
    for k in 1..30 {
        term = &term * &scaled / Complex64::new(k as f64, 0.0);
        acc += &term;
        if frobenius(&term) < 1e-18 {
            break;
        }
    }
    for _ in 0..s {
        acc = &acc * &acc;
    }
    acc
}

pub fn inverse(m: &CMatrix) -> Result<CMatrix, NumError> {
    m.clone().try_inverse().ok_or(NumError::SingularMatrix)
}
