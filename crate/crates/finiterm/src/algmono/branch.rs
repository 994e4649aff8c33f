//! Branch points of y(x) as roots of the y-discriminant, and a base point
//! from which every straight stem to a branch circle stays clear of the
//! other branch disks.

use num_complex::Complex64;

use super::AlgError;
use crate::numkernel::path::point_segment_distance;
use crate::numkernel::{discriminant_in_y, roots_all, BiPoly, ToleranceConfig, UniPoly};

/// Radius factor for the petal circles relative to the nearest other
/// branch point.
pub(crate) const LOOP_RADIUS_FACTOR: f64 = 0.4;

#[derive(Clone, Debug)]
pub struct BranchData {
    /// Distinct branch points, sorted lexicographically by (re, im).
    pub branch_points: Vec<Complex64>,
    pub discriminant: UniPoly,
    pub base_point: Complex64,
    pub n_sheets: usize,
}

impl BranchData {
    /// Minimal pairwise distance between branch points, or 1 when there
    /// are fewer than two.
    pub fn gap(&self) -> f64 {
        min_gap(&self.branch_points)
    }

    /// Petal circle radius around branch point `i`.
    pub fn loop_radius(&self, i: usize) -> f64 {
        LOOP_RADIUS_FACTOR * nearest_other_distance(&self.branch_points, i)
    }
}

fn min_gap(points: &[Complex64]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            gap = gap.min((points[i] - points[j]).norm());
        }
    }
    if gap.is_finite() {
        gap
    } else {
        1.0
    }
}

pub(crate) fn nearest_other_distance(points: &[Complex64], i: usize) -> f64 {
    let mut d = f64::INFINITY;
    for (j, p) in points.iter().enumerate() {
        if j != i {
            d = d.min((points[i] - p).norm());
        }
    }
    if d.is_finite() {
        d
    } else {
        1.0
    }
}

/// Picks a base point of modulus max|bᵢ| + 2·gap. The first candidate is on
/// the positive real axis; if some straight stem from there would pass
/// through another branch disk (e.g. collinear branch points), the
/// direction is rotated until all stems are clear.
pub(crate) fn choose_base(points: &[Complex64], start_index: usize) -> Complex64 {
    let gap = min_gap(points);
    let max_norm = points.iter().map(|b| b.norm()).fold(0.0, f64::max);
    let radius = max_norm + 2.0 * gap;
    if points.len() <= 1 {
        let angle = 2.0 * std::f64::consts::PI * start_index as f64 / 720.0;
        return Complex64::from_polar(radius, angle);
    }
    let clear: Vec<f64> = (0..points.len())
        .map(|i| LOOP_RADIUS_FACTOR * nearest_other_distance(points, i))
        .collect();
    let mut best = Complex64::new(radius, 0.0);
    let mut best_margin = f64::NEG_INFINITY;
    for k in 0..720 {
        let angle = 2.0 * std::f64::consts::PI * ((start_index + k) % 720) as f64 / 720.0;
        let base = Complex64::from_polar(radius, angle);
        let mut margin = f64::INFINITY;
        for (i, &b) in points.iter().enumerate() {
            let dir = (base - b) / (base - b).norm();
            let entry = b + dir * clear[i];
            for (j, &c) in points.iter().enumerate() {
                if j == i {
                    continue;
                }
                let d = point_segment_distance(c, base, entry);
                // Stems may cross other petal circles (homotopically
                // irrelevant) but must stay half a loop radius away from
                // the branch points themselves for safe tracking.
                margin = margin.min(d - 0.55 * clear[j]);
            }
        }
        if margin > 0.0 {
            return base;
        }
        if margin > best_margin {
            best_margin = margin;
            best = base;
        }
    }
    // No direction fully clears; fall back to the least obstructed one.
    best
}

/// Branch points of f(x, y) = 0 as distinct roots of Res_y(f, ∂f/∂y).
pub fn branch_points(f: &BiPoly, tol: &ToleranceConfig) -> Result<BranchData, AlgError> {
    if !f.leading_y().is_constant() || f.leading_y().is_zero() {
        return Err(AlgError::NotMonicInY);
    }
    let discriminant = discriminant_in_y(f)?;
    if discriminant.is_zero() {
        return Err(AlgError::NotSquarefree);
    }
    let mut points: Vec<Complex64> = if discriminant.is_constant() {
        Vec::new()
    } else {
        roots_all(&discriminant, tol.root)?
            .into_iter()
            .map(|(r, _)| r)
            .collect()
    };
    points.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let base_point = if points.is_empty() {
        Complex64::new(0.0, 0.0)
    } else {
        choose_base(&points, 0)
    };
    Ok(BranchData {
        branch_points: points,
        discriminant,
        base_point,
        n_sheets: f.deg_y(),
    })
}
