//! Lie-algebra closure of the residues and the solvability /
//! triangularization test behind the Theorem-19-style classification.

use num_complex::Complex64;

use super::FuchsError;
use crate::numkernel::{frobenius, identity, null_space, CMatrix, CVector, ToleranceConfig};

fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

fn flatten(m: &CMatrix) -> CVector {
    CVector::from_iterator(m.nrows() * m.ncols(), m.iter().cloned())
}

fn unflatten(v: &CVector, n: usize) -> CMatrix {
    CMatrix::from_iterator(n, n, v.iter().cloned())
}

/// Incremental orthonormal span with an explicit decision band: residuals
/// within a factor 10 of the threshold are refused as ambiguous.
struct Span {
    basis: Vec<CVector>,
    threshold: f64,
}

impl Span {
    fn new(threshold: f64) -> Self {
        Span {
            basis: Vec::new(),
            threshold,
        }
    }

    /// Adds the vector if independent. Ok(true) = added.
    fn try_add(&mut self, v: &CVector) -> Result<bool, FuchsError> {
        let mut r = v.clone();
        for b in &self.basis {
            let coeff = b.dotc(&r);
            r -= b * coeff;
        }
        let norm = r.norm();
        if norm <= 0.1 * self.threshold {
            return Ok(false);
        }
        if norm < 10.0 * self.threshold {
            return Err(FuchsError::RankThresholdAmbiguous {
                residual: norm,
                threshold: self.threshold,
            });
        }
        self.basis.push(r / Complex64::from(norm));
        Ok(true)
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct LieClosure {
    /// Orthonormal basis of the generated Lie algebra, in matrix form.
    pub basis: Vec<CMatrix>,
    /// Dimensions of the derived series of the algebra, starting with the
    /// closure itself, until 0 or stable.
    pub derived_dims: Vec<usize>,
}

impl LieClosure {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Solvable iff the derived series of the algebra reaches dimension 0.
    pub fn is_solvable(&self) -> bool {
        self.derived_dims.last() == Some(&0)
    }
}

fn span_dim_of_brackets(
    mats: &[CMatrix],
    threshold: f64,
) -> Result<Vec<CMatrix>, FuchsError> {
    let mut span = Span::new(threshold);
    let mut out = Vec::new();
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let c = commutator(&mats[i], &mats[j]);
            if span.try_add(&flatten(&c))? {
                out.push(unflatten(span.basis.last().unwrap(), c.nrows()));
            }
        }
    }
    Ok(out)
}

/// Smallest Lie algebra containing the residues, by repeated bracketing,
/// together with the derived series dimensions of that algebra.
pub fn lie_closure(residues: &[CMatrix], tol: &ToleranceConfig) -> Result<LieClosure, FuchsError> {
    assert!(!residues.is_empty());
    let n = residues[0].nrows();
    let scale = residues.iter().map(frobenius).fold(1.0, f64::max);
    let threshold = tol.rank * scale;
    let mut span = Span::new(threshold);
    let mut basis: Vec<CMatrix> = Vec::new();
    for a in residues {
        if span.try_add(&flatten(a))? {
            basis.push(unflatten(span.basis.last().unwrap(), n));
        }
    }
    // Close under brackets: bracket every pair until nothing new appears.
    let mut frontier = basis.clone();
    while !frontier.is_empty() && span.dim() < n * n {
        let mut fresh = Vec::new();
        for f in &frontier {
            for b in basis.clone() {
                let c = commutator(f, &b);
                if span.try_add(&flatten(&c))? {
                    let new = unflatten(span.basis.last().unwrap(), n);
                    basis.push(new.clone());
                    fresh.push(new);
                }
            }
        }
        frontier = fresh;
    }
    // Derived series dimensions of the closed algebra.
    let mut derived_dims = vec![basis.len()];
    let mut current = basis.clone();
    loop {
        let next = span_dim_of_brackets(&current, threshold)?;
        let d = next.len();
        derived_dims.push(d);
        if d == 0 || d == current.len() {
            break;
        }
        current = next;
    }
    Ok(LieClosure {
        basis,
        derived_dims,
    })
}

/// Orthonormal basis vectors of `subspace` columns restricted to the
/// eigenspace of `a` for eigenvalue `lambda`: null space of (a−λ)·Q.
fn eigenspace_intersection(
    a: &CMatrix,
    lambda: Complex64,
    q: &CMatrix,
    tol: f64,
) -> Option<CMatrix> {
    let n = a.nrows();
    let shifted = a - identity(n) * lambda;
    let restricted = &shifted * q;
    let kernel = null_space(&restricted, tol);
    if kernel.is_empty() {
        return None;
    }
    let mut cols = CMatrix::zeros(n, kernel.len());
    for (j, w) in kernel.iter().enumerate() {
        cols.set_column(j, &(q * w));
    }
    // Re-orthonormalize (q orthonormal × orthonormal kernel is already
    // orthonormal; guard numerically anyway).
    let qr = cols.qr();
    Some(qr.q())
}

/// Common eigenvector of all matrices, if one exists: backtracking over
/// the eigenvalues of each matrix compressed to the current subspace.
fn common_eigenvector(mats: &[CMatrix], tol: &ToleranceConfig) -> Option<CVector> {
    let n = mats[0].nrows();
    fn recurse(mats: &[CMatrix], q: &CMatrix, tol: &ToleranceConfig) -> Option<CVector> {
        let Some((a, rest)) = mats.split_first() else {
            return Some(q.column(0).into_owned());
        };
        let compressed = q.adjoint() * a * q;
        let eigens = crate::numkernel::eigen(&compressed, tol.cluster).ok()?;
        for (lambda, _) in eigens {
            if let Some(q2) = eigenspace_intersection(a, lambda, q, tol.rank) {
                if let Some(v) = recurse(rest, &q2, tol) {
                    return Some(v);
                }
            }
        }
        None
    }
    recurse(mats, &identity(n), tol)
}

/// Unitary matrix whose first column is `v` (assumed unit norm).
fn unitary_with_first_column(v: &CVector) -> CMatrix {
    let n = v.len();
    let mut cols = CMatrix::zeros(n, n);
    cols.set_column(0, v);
    // Complete with the best-conditioned standard basis vectors.
    let mut fill = 1;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| v[i].norm().partial_cmp(&v[j].norm()).unwrap());
    for &i in &order {
        if fill == n {
            break;
        }
        let mut e = CVector::zeros(n);
        e[i] = Complex64::new(1.0, 0.0);
        cols.set_column(fill, &e);
        fill += 1;
    }
    let qr = cols.qr();
    let mut q = qr.q();
    // QR may flip the first column's phase; restore it.
    let phase = q.column(0).dotc(v);
    let mut first = q.column(0).into_owned();
    first *= phase / Complex64::from(phase.norm().max(f64::MIN_POSITIVE));
    q.set_column(0, &first);
    q
}

/// Decides simultaneous triangularizability via solvability of the Lie
/// closure; when solvable, constructs and verifies a unitary witness basis
/// by recursive common-eigenvector deflation.
pub fn is_simultaneously_triangularizable(
    residues: &[CMatrix],
    tol: &ToleranceConfig,
) -> Result<(bool, Option<CMatrix>), FuchsError> {
    let closure = lie_closure(residues, tol)?;
    if !closure.is_solvable() {
        return Ok((false, None));
    }
    let n = residues[0].nrows();
    let mut transform = identity(n);
    let mut current: Vec<CMatrix> = residues.to_vec();
    for level in 0..n.saturating_sub(1) {
        let m = n - level;
        let blocks: Vec<CMatrix> = current
            .iter()
            .map(|a| a.view((level, level), (m, m)).into_owned())
            .collect();
        let v = common_eigenvector(&blocks, tol).ok_or(FuchsError::NoCommonEigenvector)?;
        let u = unitary_with_first_column(&v);
        let mut embedded = identity(n);
        embedded.view_mut((level, level), (m, m)).copy_from(&u);
        current = current
            .iter()
            .map(|a| embedded.adjoint() * a * &embedded)
            .collect();
        transform = transform * &embedded;
    }
    // Verify: sub-diagonal mass of every conjugated residue.
    let scale = residues.iter().map(frobenius).fold(1.0, f64::max);
    let mut worst = 0.0f64;
    for a in &current {
        let mut mass = 0.0;
        for i in 0..n {
            for j in 0..i {
                mass += a[(i, j)].norm_sqr();
            }
        }
        worst = worst.max(mass.sqrt());
    }
    if worst > 100.0 * tol.rank * scale {
        return Err(FuchsError::WitnessVerificationFailed {
            subdiagonal_mass: worst,
        });
    }
    Ok((true, Some(transform)))
}
