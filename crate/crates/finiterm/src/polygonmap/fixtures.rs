//! Canonical polygons, one per classification outcome, plus a Möbius
//! transport used by the invariance checks.

use nalgebra::Matrix2;
use num_complex::Complex64;

use super::geom::GenCircle;
use super::polygon::{PolygonSpec, Side};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn line_side(p: Complex64, q: Complex64) -> Side {
    Side {
        circle: GenCircle::line_through(p, q),
        endpoints: (p, q),
    }
}

fn arc_side(center: Complex64, radius: f64, from: Complex64, to: Complex64) -> Side {
    Side {
        circle: GenCircle::circle(center, radius),
        endpoints: (from, to),
    }
}

/// Unit square: all sides straight, common point ∞ (case 1).
pub fn straight_quadrilateral() -> PolygonSpec {
    let v = [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)];
    PolygonSpec::new(vec![
        line_side(v[0], v[1]),
        line_side(v[1], v[2]),
        line_side(v[2], v[3]),
        line_side(v[3], v[0]),
    ])
    .unwrap()
}

/// Two concentric arcs joined by radial segments: symmetric in (0, ∞)
/// (case 2).
pub fn annular_quadrilateral() -> PolygonSpec {
    let o = c(0.0, 0.0);
    PolygonSpec::new(vec![
        arc_side(o, 1.0, c(1.0, 0.0), c(0.0, 1.0)),
        line_side(c(0.0, 1.0), c(0.0, 2.0)),
        arc_side(o, 2.0, c(0.0, 2.0), c(2.0, 0.0)),
        line_side(c(2.0, 0.0), c(1.0, 0.0)),
    ])
    .unwrap()
}

/// Spherical 2-3-3 triangle: the two diagonals through 0 and the
/// stereographic image of a tetrahedral mirror circle (case 3, net of the
/// tetrahedron).
pub fn tetrahedral_triangle() -> PolygonSpec {
    let a = (1.0 + 3.0f64.sqrt()) / 2.0;
    let v1 = c(a, a);
    let v2 = c(a, -a);
    PolygonSpec::new(vec![
        line_side(c(0.0, 0.0), v1),
        arc_side(c(1.0, 0.0), 2.0f64.sqrt(), v1, v2),
        line_side(v2, c(0.0, 0.0)),
    ])
    .unwrap()
}

/// Three mutually tangent circles: all angles vanish, the reflection group
/// is infinite, and no case applies.
pub fn vanishing_angle_triangle() -> PolygonSpec {
    let m1 = c(0.0, 0.0);
    let m2 = c(2.0, 0.0);
    let m3 = c(1.0, 3.0f64.sqrt());
    let t12 = c(1.0, 0.0);
    let t13 = (m1 + m3) / 2.0;
    let t23 = (m2 + m3) / 2.0;
    PolygonSpec::new(vec![
        arc_side(m1, 1.0, t13, t12),
        arc_side(m2, 1.0, t12, t23),
        arc_side(m3, 1.0, t23, t13),
    ])
    .unwrap()
}

/// Applies z ↦ (t₀₀z + t₀₁)/(t₁₀z + t₁₁) to the whole polygon. None when a
/// vertex lands too close to ∞ for a finite endpoint list.
pub fn transform_polygon(poly: &PolygonSpec, t: &Matrix2<Complex64>) -> Option<PolygonSpec> {
    let map = |z: Complex64| -> Option<Complex64> {
        let den = t[(1, 0)] * z + t[(1, 1)];
        if den.norm() < 0.05 * (1.0 + z.norm()) {
            return None;
        }
        Some((t[(0, 0)] * z + t[(0, 1)]) / den)
    };
    // Adjugate: a positive real multiple of the inverse, which is all the
    // Hermitian congruence needs.
    let adj = Matrix2::new(t[(1, 1)], -t[(0, 1)], -t[(1, 0)], t[(0, 0)]);
    let mut sides = Vec::with_capacity(poly.sides.len());
    for s in &poly.sides {
        let circle = s.circle.transformed_by_inverse_of(&adj).ok()?;
        let endpoints = (map(s.endpoints.0)?, map(s.endpoints.1)?);
        sides.push(Side { circle, endpoints });
    }
    PolygonSpec::new(sides).ok()
}
