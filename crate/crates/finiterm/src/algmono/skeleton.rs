//! Petal loop skeleton: one segment–circle–segment loop per branch point,
//! ordered by the argument of (branch point − base point) so the ordered
//! composite is homotopic to a loop around infinity.

use num_complex::Complex64;

use super::branch::BranchData;
use crate::numkernel::{circle_polyline, PathPolyline};

const MIN_CIRCLE_SAMPLES: usize = 64;

#[derive(Clone, Debug)]
pub struct LoopSkeleton {
    pub base_point: Complex64,
    /// Petal loops in composite order (ascending argument seen from base).
    pub loops: Vec<PathPolyline>,
    /// `targets[i]` is the index into `branch_points` encircled by loop i.
    pub targets: Vec<usize>,
}

/// Builds the petal around one branch point: out along the stem, once
/// counterclockwise around the circle, back along the stem.
fn petal(base: Complex64, center: Complex64, radius: f64) -> PathPolyline {
    let dir = (base - center) / (base - center).norm();
    let circle = circle_polyline(center, radius, dir.arg(), MIN_CIRCLE_SAMPLES);
    let mut vertices = vec![base];
    vertices.extend_from_slice(circle.vertices());
    vertices.push(base);
    PathPolyline::new(vertices)
}

fn assemble(base: Complex64, points: &[Complex64], radii: &[f64]) -> LoopSkeleton {
    let mut targets: Vec<usize> = (0..points.len()).collect();
    // Angles are measured relative to the inward direction (base → centroid
    // of the punctures) so the fan of stem directions never straddles the
    // ±π cut of arg.
    let centroid = points.iter().sum::<Complex64>() / points.len().max(1) as f64;
    let inward = if (centroid - base).norm() > 0.0 {
        (centroid - base) / (centroid - base).norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let rel_angle = |i: usize| ((points[i] - base) / inward).arg();
    targets.sort_by(|&i, &j| {
        rel_angle(i)
            .partial_cmp(&rel_angle(j))
            .unwrap()
            .then_with(|| {
                let di = (points[i] - base).norm();
                let dj = (points[j] - base).norm();
                di.partial_cmp(&dj).unwrap()
            })
    });
    let loops = targets
        .iter()
        .map(|&i| petal(base, points[i], radii[i]))
        .collect();
    LoopSkeleton {
        base_point: base,
        loops,
        targets,
    }
}

pub fn build_skeleton(branch: &BranchData) -> LoopSkeleton {
    let radii: Vec<f64> = (0..branch.branch_points.len())
        .map(|i| branch.loop_radius(i))
        .collect();
    assemble(branch.base_point, &branch.branch_points, &radii)
}

/// Skeleton for an arbitrary puncture set: Fuchsian poles reuse the same
/// base-point choice and homotopy convention as algebraic branch points.
pub fn skeleton_for_punctures(points: &[Complex64]) -> LoopSkeleton {
    use super::branch::{choose_base, nearest_other_distance, LOOP_RADIUS_FACTOR};
    let base = choose_base(points, 0);
    let radii: Vec<f64> = (0..points.len())
        .map(|i| LOOP_RADIUS_FACTOR * nearest_other_distance(points, i))
        .collect();
    assemble(base, points, &radii)
}
