//! Polyline paths in the complex plane: the loops along which sheets and
//! solutions are continued.

use num_complex::Complex64;

/// Piecewise-linear path; closed iff first vertex equals the last.
#[derive(Clone, Debug, PartialEq)]
pub struct PathPolyline {
    vertices: Vec<Complex64>,
}

impl PathPolyline {
    /// Consecutive duplicate vertices are dropped; at least two distinct
    /// vertices are required.
    pub fn new(vertices: Vec<Complex64>) -> Self {
        let mut v: Vec<Complex64> = Vec::with_capacity(vertices.len());
        for p in vertices {
            if v.last().map_or(true, |&q| (p - q).norm() > 0.0) {
                v.push(p);
            }
        }
        assert!(v.len() >= 2 || v.len() == 1, "path needs at least one vertex");
        if v.len() == 1 {
            // Zero-length path: keep the duplicate so start/end are defined.
            let p = v[0];
            v.push(p);
        }
        PathPolyline { vertices: v }
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn start(&self) -> Complex64 {
        self.vertices[0]
    }

    pub fn end(&self) -> Complex64 {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        (self.start() - self.end()).norm() == 0.0
    }

    pub fn length(&self) -> f64 {
        self.vertices
            .windows(2)
            .map(|w| (w[1] - w[0]).norm())
            .sum()
    }

    pub fn segments(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn reversed(&self) -> PathPolyline {
        let mut v = self.vertices.clone();
        v.reverse();
        PathPolyline { vertices: v }
    }

    /// Concatenation; panics unless `self` ends where `other` starts.
    pub fn then(&self, other: &PathPolyline) -> PathPolyline {
        assert!(
            (self.end() - other.start()).norm() < 1e-12,
            "paths do not join"
        );
        let mut v = self.vertices.clone();
        v.extend_from_slice(&other.vertices[1..]);
        PathPolyline { vertices: v }
    }

    /// Minimum distance from a point to the polyline.
    pub fn distance_to(&self, p: Complex64) -> f64 {
        self.segments()
            .map(|(a, b)| point_segment_distance(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn point_segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Counterclockwise circle polyline around `center` with `samples` vertices
/// starting and ending at angle `start_angle`.
pub fn circle_polyline(
    center: Complex64,
    radius: f64,
    start_angle: f64,
    samples: usize,
) -> PathPolyline {
    let mut v = Vec::with_capacity(samples + 1);
    for k in 0..=samples {
        let theta = start_angle + 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
        v.push(center + Complex64::from_polar(radius, theta));
    }
    // Close exactly.
    let first = v[0];
    *v.last_mut().unwrap() = first;
    PathPolyline::new(v)
}
