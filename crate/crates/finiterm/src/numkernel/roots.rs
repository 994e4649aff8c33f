//! All-roots polynomial solving: simultaneous Aberth–Ehrlich iteration with
//! Newton polishing, plus multiplicity detection.

use num_complex::Complex64;

use super::poly::{CPoly, UniPoly};
use super::NumError;

/// Scale factor for the residual acceptance test: max coefficient magnitude
/// times max(1, |r|)^deg.
fn residual_scale(p: &CPoly, r: Complex64) -> f64 {
    p.max_coeff_norm() * r.norm().max(1.0).powi(p.degree() as i32)
}

/// All roots of a complex-coefficient polynomial, with multiplicities decided
/// by clustering at radius 10·tol.
pub fn roots_all_complex(p: &CPoly, tol: f64) -> Result<Vec<(Complex64, usize)>, NumError> {
    if !p.is_finite() {
        return Err(NumError::OverflowingCoefficients);
    }
    if p.degree() == 0 {
        return Err(NumError::ConstantPolynomial);
    }
    let simple = aberth(p, tol)?;
    Ok(cluster(&simple, 10.0 * tol))
}

/// All roots of an exact rational polynomial. The multiplicity structure is
/// taken from the exact squarefree decomposition, so repeated roots come out
/// with their exact multiplicities and the numeric solve only ever sees
/// squarefree factors; clustering at 10·tol is still applied as a final merge
/// across factors.
pub fn roots_all(p: &UniPoly, tol: f64) -> Result<Vec<(Complex64, usize)>, NumError> {
    if p.is_constant() {
        return Err(NumError::ConstantPolynomial);
    }
    let mut weighted: Vec<(Complex64, usize)> = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        if factor.degree() == 0 {
            continue;
        }
        let cp = factor.to_cpoly();
        if !cp.is_finite() {
            return Err(NumError::OverflowingCoefficients);
        }
        for root in aberth(&cp, tol)? {
            weighted.push((root, mult));
        }
    }
    weighted.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(cluster_weighted(&weighted, 10.0 * tol))
}

fn cluster(roots: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let weighted: Vec<(Complex64, usize)> = roots.iter().map(|&r| (r, 1)).collect();
    cluster_weighted(&weighted, radius)
}

/// Single-linkage clustering; each cluster is reported at the
/// multiplicity-weighted centroid.
fn cluster_weighted(roots: &[(Complex64, usize)], radius: f64) -> Vec<(Complex64, usize)> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i].0 - roots[j].0).norm() <= radius {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<(Complex64, usize)> = groups
        .values()
        .map(|idxs| {
            let total: usize = idxs.iter().map(|&i| roots[i].1).sum();
            let mut c = Complex64::new(0.0, 0.0);
            for &i in idxs {
                c += roots[i].0 * roots[i].1 as f64;
            }
            (c / total as f64, total)
        })
        .collect();
    out.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

/// Aberth–Ehrlich simultaneous iteration. Returns deg(p) root approximations
/// (unclustered). Retries internally with perturbed starting points before
/// reporting non-convergence.
pub fn aberth(p: &CPoly, tol: f64) -> Result<Vec<Complex64>, NumError> {
    let n = p.degree();
    if n == 0 {
        return Err(NumError::ConstantPolynomial);
    }
    // Exact zero roots: strip trailing zero coefficients first so the
    // iteration never has to resolve a cluster at the origin.
    let mut low = 0usize;
    while low < n && p.coeffs()[low].norm() == 0.0 {
        low += 1;
    }
    let deflated = CPoly::new(p.coeffs()[low..].to_vec());
    let mut roots = vec![Complex64::new(0.0, 0.0); low];
    if deflated.degree() == 0 {
        return Ok(roots);
    }
    for attempt in 0..4 {
        match aberth_core(&deflated, tol, attempt) {
            Ok(mut r) => {
                roots.append(&mut r);
                return Ok(roots);
            }
            Err(NumError::NonConvergence) if attempt < 3 => continue,
            Err(e) => return Err(e),
        }
    }
    Err(NumError::NonConvergence)
}

fn aberth_core(p: &CPoly, tol: f64, attempt: usize) -> Result<Vec<Complex64>, NumError> {
    let n = p.degree();
    let dp = p.derivative();
    let lead = p.leading();
    // Cauchy-style inclusion radius.
    let radius = 1.0
        + p.coeffs()[..n]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let offset = 0.37 + 0.71 * attempt as f64;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + offset;
            Complex64::from_polar(radius * (0.5 + 0.3 * ((k % 3) as f64) / 3.0), theta)
        })
        .collect();

    let max_iter = 300;
    for _ in 0..max_iter {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let pv = p.eval(z[i]);
            let dv = dp.eval(z[i]);
            if !pv.is_finite() || !dv.is_finite() {
                return Err(NumError::OverflowingCoefficients);
            }
            let newton = if dv.norm() == 0.0 {
                Complex64::new(tol, tol)
            } else {
                pv / dv
            };
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 1e-300 {
                        sum += 1.0 / d;
                    }
                }
            }
            let denom = 1.0 - newton * sum;
            let step = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            z[i] -= step;
            max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
        }
        if max_step < tol * 1e-2 {
            break;
        }
    }
    // Newton polishing.
    for zi in z.iter_mut() {
        for _ in 0..5 {
            let pv = p.eval(*zi);
            let dv = dp.eval(*zi);
            if dv.norm() == 0.0 {
                break;
            }
            let step = pv / dv;
            if !step.is_finite() {
                break;
            }
            *zi -= step;
            if step.norm() <= 1e-16 * zi.norm().max(1.0) {
                break;
            }
        }
    }
    for &zi in &z {
        if p.eval(zi).norm() > tol * residual_scale(p, zi) {
            return Err(NumError::NonConvergence);
        }
    }
    Ok(z)
}
