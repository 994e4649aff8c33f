//! Adaptive integration of linear ODE systems Y' = A(x)Y along polyline
//! paths, where A(x) is a sum of simple-pole residue terms. Produces the
//! transfer matrix of the path.

use num_complex::Complex64;

use super::matrix::{is_finite, CMatrix};
use super::path::{point_segment_distance, PathPolyline};
use super::NumError;

/// Right-hand side A(x) = sum_i residues[i] / (x - poles[i]).
fn rhs(poles: &[Complex64], residues: &[CMatrix], x: Complex64) -> CMatrix {
    let n = residues[0].nrows();
    let mut a = CMatrix::zeros(n, n);
    for (p, r) in poles.iter().zip(residues.iter()) {
        let d = x - p;
        a += r.map(|c| c / d);
    }
    a
}

fn min_pole_gap(poles: &[Complex64]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..poles.len() {
        for j in i + 1..poles.len() {
            gap = gap.min((poles[i] - poles[j]).norm());
        }
    }
    if gap.is_finite() {
        gap
    } else {
        1.0
    }
}

/// Transfer matrix T of Y' = A(x)Y along `path`, with Y(start) = I, so the
/// columns of T are the solutions at the path end. Dormand–Prince 5(4)
/// stepping with mixed absolute/relative local error per unit arclength
/// bounded by tol (floor 1e-13).
pub fn integrate_linear_ode(
    poles: &[Complex64],
    residues: &[CMatrix],
    path: &PathPolyline,
    tol: f64,
) -> Result<CMatrix, NumError> {
    assert_eq!(poles.len(), residues.len());
    assert!(!residues.is_empty());
    let n = residues[0].nrows();
    let gap = min_pole_gap(poles);
    for &p in poles {
        for (a, b) in path.segments() {
            if point_segment_distance(p, a, b) < gap / 10.0 * (1.0 - 1e-9) {
                return Err(NumError::PathTooClose {
                    pole: p,
                    distance: point_segment_distance(p, a, b),
                });
            }
        }
    }
    let mut y = CMatrix::identity(n, n);
    for (a, b) in path.segments() {
        y = integrate_segment(poles, residues, a, b, tol, y)?;
    }
    if !is_finite(&y) {
        return Err(NumError::OverflowingCoefficients);
    }
    Ok(y)
}

// Dormand-Prince 5(4) tableau.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 35.0 / 384.0 - 5179.0 / 57600.0;
const E3: f64 = 500.0 / 1113.0 - 7571.0 / 16695.0;
const E4: f64 = 125.0 / 192.0 - 393.0 / 640.0;
const E5: f64 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
const E6: f64 = 11.0 / 84.0 - 187.0 / 2100.0;
const E7: f64 = -1.0 / 40.0;

fn integrate_segment(
    poles: &[Complex64],
    residues: &[CMatrix],
    a: Complex64,
    b: Complex64,
    tol: f64,
    y0: CMatrix,
) -> Result<CMatrix, NumError> {
    let dir = b - a;
    let seg_len = dir.norm();
    if seg_len == 0.0 {
        return Ok(y0);
    }
    // Parameterize by t in [0,1]; dY/dt = dir * A(a + t dir) Y.
    let f = |t: f64, y: &CMatrix| -> CMatrix {
        let x = a + dir * t;
        rhs(poles, residues, x) * y * dir
    };
    let mut t = 0.0f64;
    let mut h = 0.1f64;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut steps = 0usize;
    while t < 1.0 {
        steps += 1;
        if steps > 1_000_000 {
            return Err(NumError::StepUnderflow { position: a + dir * t });
        }
        if t + h > 1.0 {
            h = 1.0 - t;
        }
        let k2 = f(t + A21 * h, &(&y + &k1 * Complex64::from(A21 * h)));
        let k3 = f(
            t + 0.3 * h,
            &(&y + &k1 * Complex64::from(A31 * h) + &k2 * Complex64::from(A32 * h)),
        );
        let k4 = f(
            t + 0.8 * h,
            &(&y + &k1 * Complex64::from(A41 * h)
                + &k2 * Complex64::from(A42 * h)
                + &k3 * Complex64::from(A43 * h)),
        );
        let k5 = f(
            t + 8.0 / 9.0 * h,
            &(&y + &k1 * Complex64::from(A51 * h)
                + &k2 * Complex64::from(A52 * h)
                + &k3 * Complex64::from(A53 * h)
                + &k4 * Complex64::from(A54 * h)),
        );
        let y6 = &y
            + &k1 * Complex64::from(A61 * h)
            + &k2 * Complex64::from(A62 * h)
            + &k3 * Complex64::from(A63 * h)
            + &k4 * Complex64::from(A64 * h)
            + &k5 * Complex64::from(A65 * h);
        let k6 = f(t + h, &y6);
        let y_next = &y
            + &k1 * Complex64::from(B1 * h)
            + &k3 * Complex64::from(B3 * h)
            + &k4 * Complex64::from(B4 * h)
            + &k5 * Complex64::from(B5 * h)
            + &k6 * Complex64::from(B6 * h);
        let k7 = f(t + h, &y_next);
        let err_mat = &k1 * Complex64::from(E1 * h)
            + &k3 * Complex64::from(E3 * h)
            + &k4 * Complex64::from(E4 * h)
            + &k5 * Complex64::from(E5 * h)
            + &k6 * Complex64::from(E6 * h)
            + &k7 * Complex64::from(E7 * h);
        let err = super::matrix::frobenius(&err_mat);
        let y_scale = super::matrix::frobenius(&y_next).max(1.0);
        // Local error per unit arclength, mixed absolute/relative, floored.
        let allowed = (tol * h * seg_len * y_scale).max(1e-13);
        if !err.is_finite() {
            return Err(NumError::OverflowingCoefficients);
        }
        if err <= allowed {
            t += h;
            y = y_next;
            k1 = k7;
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            0.9 * (allowed / err).powf(0.2)
        };
        h *= factor.clamp(0.2, 5.0);
        if h < 1e-12 {
            return Err(NumError::StepUnderflow { position: a + dir * t });
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::matrix::frobenius;
    use crate::numkernel::path::circle_polyline;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one_by_one(v: Complex64) -> CMatrix {
        CMatrix::from_row_slice(1, 1, &[v])
    }

    #[test]
    fn scalar_pole_segment() {
        // y' = y/x along [1, 2]: solution c*x, transfer 2/1 = 2.
        let t = integrate_linear_ode(
            &[c(0.0, 0.0)],
            &[one_by_one(c(1.0, 0.0))],
            &PathPolyline::new(vec![c(1.0, 0.0), c(2.0, 0.0)]),
            1e-10,
        )
        .unwrap();
        assert!((t[(0, 0)] - c(2.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn zero_length_path_is_identity() {
        let t = integrate_linear_ode(
            &[c(0.0, 0.0)],
            &[one_by_one(c(1.0, 0.0))],
            &PathPolyline::new(vec![c(1.0, 0.0), c(1.0, 0.0)]),
            1e-10,
        )
        .unwrap();
        assert!((t[(0, 0)] - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn full_circle_gives_exponential() {
        // y' = (lambda/x) y around |x| = 1: transfer exp(2 pi i lambda).
        let lambda = c(0.25, 0.1);
        let loop_path = circle_polyline(c(0.0, 0.0), 1.0, 0.0, 128);
        let t = integrate_linear_ode(&[c(0.0, 0.0)], &[one_by_one(lambda)], &loop_path, 1e-11)
            .unwrap();
        let expected = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * lambda).exp();
        assert!((t[(0, 0)] - expected).norm() < 1e-8, "{} vs {}", t[(0, 0)], expected);
    }

    #[test]
    fn reverse_path_inverts() {
        let poles = [c(0.0, 0.0), c(1.0, 0.0)];
        let residues = [
            CMatrix::from_row_slice(2, 2, &[c(0.1, 0.0), c(0.2, 0.0), c(0.0, 0.0), c(-0.1, 0.0)]),
            CMatrix::from_row_slice(2, 2, &[c(0.0, 0.1), c(0.0, 0.0), c(0.3, 0.0), c(0.05, 0.0)]),
        ];
        let tol = 1e-10;
        let path = PathPolyline::new(vec![c(2.0, 0.5), c(2.5, 1.5), c(1.5, 2.0)]);
        let fwd = integrate_linear_ode(&poles, &residues, &path, tol).unwrap();
        let back = integrate_linear_ode(&poles, &residues, &path.reversed(), tol).unwrap();
        let prod = &back * &fwd;
        let dev = frobenius(&(prod - CMatrix::identity(2, 2)));
        assert!(dev < 10.0 * 1e-8, "deviation {}", dev);
    }

    #[test]
    fn transfer_matrices_compose() {
        let poles = [c(0.0, 0.0)];
        let residues = [CMatrix::from_row_slice(
            2,
            2,
            &[c(0.2, 0.0), c(0.5, 0.0), c(0.0, 0.3), c(-0.2, 0.0)],
        )];
        let tol = 1e-10;
        let p1 = PathPolyline::new(vec![c(1.0, 0.0), c(1.0, 1.0)]);
        let p2 = PathPolyline::new(vec![c(1.0, 1.0), c(-1.0, 1.0)]);
        let t1 = integrate_linear_ode(&poles, &residues, &p1, tol).unwrap();
        let t2 = integrate_linear_ode(&poles, &residues, &p2, tol).unwrap();
        let t12 = integrate_linear_ode(&poles, &residues, &p1.then(&p2), tol).unwrap();
        let dev = frobenius(&(&t2 * &t1 - t12));
        assert!(dev < 10.0 * 1e-8, "deviation {}", dev);
    }

    #[test]
    fn too_close_path_rejected() {
        let r = integrate_linear_ode(
            &[c(0.0, 0.0), c(1.0, 0.0)],
            &[one_by_one(c(1.0, 0.0)), one_by_one(c(1.0, 0.0))],
            &PathPolyline::new(vec![c(0.01, 0.0), c(0.01, 1.0)]),
            1e-10,
        );
        assert!(matches!(r, Err(NumError::PathTooClose { .. })));
    }

    #[test]
    fn abel_liouville_determinant() {
        // det T(loop around pole j) = exp(2 pi i tr A_j).
        let poles = [c(0.0, 0.0), c(3.0, 0.0)];
        let a0 = CMatrix::from_row_slice(2, 2, &[c(0.1, 0.0), c(0.4, 0.0), c(0.2, 0.0), c(-0.3, 0.1)]);
        let a1 = CMatrix::from_row_slice(2, 2, &[c(0.0, 0.2), c(0.1, 0.0), c(0.0, 0.0), c(0.2, 0.0)]);
        let residues = [a0.clone(), a1];
        let tol = 1e-10;
        let loop0 = circle_polyline(c(0.0, 0.0), 1.0, 0.0, 96);
        let t = integrate_linear_ode(&poles, &residues, &loop0, tol).unwrap();
        let det = t[(0, 0)] * t[(1, 1)] - t[(0, 1)] * t[(1, 0)];
        let tr = a0[(0, 0)] + a0[(1, 1)];
        let expected = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tr).exp();
        assert!((det - expected).norm() < 100.0 * 1e-8, "{} vs {}", det, expected);
    }
}
