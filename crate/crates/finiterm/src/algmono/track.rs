//! Sheet tracking: analytic continuation of all n roots of f(x, ·) along a
//! path by predictor–corrector Newton steps, yielding the sheet
//! permutation of a closed loop.

use num_complex::Complex64;

use super::branch::BranchData;
use super::AlgError;
use crate::numkernel::{roots_all_complex, BiPoly, CPoly, PathPolyline, ToleranceConfig};
use crate::permgrp::Permutation;

const MAX_NEWTON_ITERS: usize = 60;
const MIN_STEP: f64 = 1e-10;
/// A corrected root may move at most this fraction of the minimal pairwise
/// root distance per step; larger moves halve the step.
const MOVE_FRACTION: f64 = 0.3;

/// Roots of f(x₀, y) = 0 sorted lexicographically by (re, im): the sheet
/// indexing at the base point.
pub fn sheet_roots(f: &BiPoly, x0: Complex64, tol: &ToleranceConfig) -> Result<Vec<Complex64>, AlgError> {
    let p = f.eval_x_complex(x0);
    let mut roots: Vec<Complex64> = roots_all_complex(&p, tol.root)?
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(roots)
}

fn min_pairwise(roots: &[Complex64]) -> f64 {
    let mut d = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            d = d.min((roots[i] - roots[j]).norm());
        }
    }
    d
}

fn collision_threshold(roots: &[Complex64]) -> f64 {
    let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
    100.0 * f64::EPSILON * scale
}

/// Newton-corrects every root of `p` starting from its previous position.
/// Fails (→ step halving) on divergence or non-convergence.
fn correct_all(p: &CPoly, previous: &[Complex64]) -> Option<Vec<Complex64>> {
    let dp = p.derivative();
    let mut out = Vec::with_capacity(previous.len());
    for &start in previous {
        let mut y = start;
        let mut converged = false;
        for _ in 0..MAX_NEWTON_ITERS {
            let d = dp.eval(y);
            if d.norm() == 0.0 {
                return None;
            }
            let delta = p.eval(y) / d;
            y -= delta;
            if !y.is_finite() {
                return None;
            }
            if delta.norm() <= 1e-13 * y.norm().max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return None;
        }
        out.push(y);
    }
    Some(out)
}

/// Continues all sheets along a closed loop from the base point and
/// returns the induced permutation: sheet i continues into sheet
/// `images[i]`.
pub fn track_loop(
    f: &BiPoly,
    branch: &BranchData,
    path: &PathPolyline,
    tol: &ToleranceConfig,
) -> Result<Permutation, AlgError> {
    assert!(path.is_closed(), "loop must be closed");
    debug_assert_eq!(branch.n_sheets, f.deg_y());
    let initial = sheet_roots(f, path.start(), tol)?;
    let initial_gap = min_pairwise(&initial);
    if initial_gap < collision_threshold(&initial) {
        return Err(AlgError::SheetCollision {
            x: path.start(),
            gap: initial_gap,
        });
    }
    let mut current = initial.clone();
    for (a, b) in path.segments() {
        let seg = b - a;
        let mut t = 0.0;
        let mut dt: f64 = 0.25;
        while t < 1.0 {
            let step = dt.min(1.0 - t);
            let x_new = a + seg * (t + step);
            let p = f.eval_x_complex(x_new);
            let gap = min_pairwise(&current);
            if gap < collision_threshold(&current) {
                return Err(AlgError::SheetCollision { x: x_new, gap });
            }
            let accepted = correct_all(&p, &current).filter(|next| {
                let max_move = current
                    .iter()
                    .zip(next)
                    .map(|(c, n)| (c - n).norm())
                    .fold(0.0, f64::max);
                max_move < MOVE_FRACTION * gap && min_pairwise(next) > 0.5 * MOVE_FRACTION * gap
            });
            match accepted {
                Some(next) => {
                    current = next;
                    t += step;
                    dt = (step * 1.7).min(0.25);
                }
                None => {
                    if step <= MIN_STEP {
                        return Err(AlgError::StepUnderflow { x: x_new });
                    }
                    dt = step * 0.5;
                }
            }
        }
    }
    // Match final positions back to the initial sheet list.
    let mut images = vec![usize::MAX; initial.len()];
    let mut used = vec![false; initial.len()];
    for (i, y) in current.iter().enumerate() {
        let (j, dist) = initial
            .iter()
            .enumerate()
            .map(|(j, r)| (j, (y - r).norm()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        if dist > 0.5 * initial_gap || used[j] {
            return Err(AlgError::SheetMatchFailed);
        }
        used[j] = true;
        images[i] = j;
    }
    Ok(Permutation::new(images))
}
