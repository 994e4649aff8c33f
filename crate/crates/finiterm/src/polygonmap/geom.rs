//! Circles and lines on the Riemann sphere in the Hermitian form
//! A|z|² + 2Re(B̄z) + C = 0, closed under fractional linear maps.

use nalgebra::Matrix2;
use num_complex::Complex64;

use super::PolygonError;

/// Below this (after max-norm normalization) the A coefficient is treated
/// as zero and the locus as a straight line.
const LINE_EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CPoint {
    Finite(Complex64),
    Infinity,
}

impl CPoint {
    pub fn approx_eq(&self, other: &CPoint, tol: f64) -> bool {
        match (self, other) {
            (CPoint::Infinity, CPoint::Infinity) => true,
            (CPoint::Finite(a), CPoint::Finite(b)) => {
                (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
            }
            _ => false,
        }
    }
}

impl std::fmt::Display for CPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CPoint::Finite(z) => write!(f, "{z}"),
            CPoint::Infinity => write!(f, "∞"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GenCircle {
    pub a: f64,
    pub b: Complex64,
    pub c: f64,
}

impl GenCircle {
    pub fn new(a: f64, b: Complex64, c: f64) -> Result<Self, PolygonError> {
        let scale = a.abs().max(b.norm()).max(c.abs());
        if scale == 0.0 {
            return Err(PolygonError::DegenerateCircle);
        }
        let (a, b, c) = (a / scale, b / scale, c / scale);
        if b.norm_sqr() - a * c <= 0.0 {
            return Err(PolygonError::DegenerateCircle);
        }
        Ok(GenCircle { a, b, c })
    }

    pub fn circle(center: Complex64, radius: f64) -> Self {
        GenCircle::new(1.0, -center, center.norm_sqr() - radius * radius)
            .expect("positive radius")
    }

    pub fn line_through(p: Complex64, q: Complex64) -> Self {
        let b = Complex64::i() * (q - p);
        let c = -2.0 * (b.conj() * p).re;
        GenCircle::new(0.0, b, c).expect("distinct points")
    }

    pub fn is_line(&self) -> bool {
        self.a.abs() <= LINE_EPS
    }

    pub fn center(&self) -> Complex64 {
        -self.b / self.a
    }

    pub fn radius(&self) -> f64 {
        ((self.b.norm_sqr() - self.a * self.c) / (self.a * self.a)).sqrt()
    }

    pub fn eval(&self, z: Complex64) -> f64 {
        self.a * z.norm_sqr() + 2.0 * (self.b.conj() * z).re + self.c
    }

    /// Magnitude of the terms entering eval, for relative residual tests.
    fn eval_scale(&self, z: Complex64) -> f64 {
        (self.a.abs() * z.norm_sqr() + 2.0 * self.b.norm() * z.norm() + self.c.abs()).max(1.0)
    }

    pub fn contains(&self, p: CPoint, tol: f64) -> bool {
        match p {
            CPoint::Finite(z) => self.eval(z).abs() <= tol * self.eval_scale(z),
            CPoint::Infinity => self.is_line(),
        }
    }

    /// Pullback under z = (t₀₀w + t₀₁)/(t₁₀w + t₁₁): congruence of the
    /// Hermitian matrix [[A, B], [B̄, C]] by t.
    pub fn transformed_by_inverse_of(&self, t: &Matrix2<Complex64>) -> Result<Self, PolygonError> {
        let h = Matrix2::new(
            Complex64::new(self.a, 0.0),
            self.b,
            self.b.conj(),
            Complex64::new(self.c, 0.0),
        );
        let hp = t.adjoint() * h * t;
        GenCircle::new(hp[(0, 0)].re, hp[(0, 1)], hp[(1, 1)].re)
    }
}

/// Inversion in a circle or mirror reflection in a line.
pub fn reflect(circle: &GenCircle, z: Complex64) -> Result<Complex64, PolygonError> {
    if circle.is_line() {
        Ok(z - circle.eval(z) / circle.b.norm_sqr() * circle.b)
    } else {
        let m = circle.center();
        let d = z - m;
        if d.norm() <= 1e-13 * (1.0 + m.norm()) {
            return Err(PolygonError::PoleOfInversion);
        }
        Ok(m + circle.radius().powi(2) / d.conj())
    }
}

/// Reflection as a total map on the sphere.
pub fn reflect_sphere(circle: &GenCircle, p: CPoint) -> CPoint {
    match p {
        CPoint::Infinity => {
            if circle.is_line() {
                CPoint::Infinity
            } else {
                CPoint::Finite(circle.center())
            }
        }
        CPoint::Finite(z) => match reflect(circle, z) {
            Ok(w) => CPoint::Finite(w),
            Err(_) => CPoint::Infinity,
        },
    }
}

/// Intersection points of two full circles/lines on the sphere: 0, 1, or 2
/// points, with ∞ included exactly when both loci are lines.
pub fn circle_intersections(c1: &GenCircle, c2: &GenCircle, tol: f64) -> Vec<CPoint> {
    if c1.is_line() && c2.is_line() {
        let mut out = Vec::new();
        // Normals b1, b2: solve 2Re(b̄ᵢz) + cᵢ = 0 as a real 2×2 system.
        let det = c1.b.re * c2.b.im - c1.b.im * c2.b.re;
        if det.abs() > tol {
            let x = (-0.5 * c1.c * c2.b.im + 0.5 * c2.c * c1.b.im) / det;
            let y = (-0.5 * c2.c * c1.b.re + 0.5 * c1.c * c2.b.re) / det;
            out.push(CPoint::Finite(Complex64::new(x, y)));
        }
        out.push(CPoint::Infinity);
        return out;
    }
    let (circ, other) = if c1.is_line() { (c2, c1) } else { (c1, c2) };
    // Radical line: a_circ·other − a_other·circ has no |z|² term.
    let lb = circ.a * other.b - other.a * circ.b;
    let lc = circ.a * other.c - other.a * circ.c;
    if lb.norm() <= tol {
        return Vec::new(); // concentric
    }
    let m = circ.center();
    let r = circ.radius();
    let n = lb / lb.norm();
    // Signed distance from the center to the line 2Re(l̄b z) + lc = 0.
    let s = ((lb.conj() * m).re + 0.5 * lc) / lb.norm();
    let foot = m - s * n;
    let h2 = r * r - s * s;
    let scale = r.max(m.norm()).max(1.0);
    if h2 < -tol * scale * scale {
        return Vec::new();
    }
    if h2 <= tol * scale * scale {
        return vec![CPoint::Finite(foot)]; // tangency
    }
    let dir = Complex64::i() * n;
    let h = h2.sqrt();
    vec![CPoint::Finite(foot - h * dir), CPoint::Finite(foot + h * dir)]
}
