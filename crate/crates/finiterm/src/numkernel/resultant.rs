//! Exact resultants of bivariate polynomials with respect to y, computed by
//! evaluation at rational sample points and exact interpolation. Branch-point
//! computation downstream must not miss or invent roots, so nothing here is
//! floating point.

use num_traits::{One, Zero};

use super::poly::{rat, BiPoly, Rational, UniPoly};
use super::NumError;

/// Sylvester determinant of two univariate rational polynomials, by exact
/// Gaussian elimination.
pub fn sylvester_determinant(f: &UniPoly, g: &UniPoly) -> Rational {
    let n = f.degree();
    let m = g.degree();
    if n == 0 && m == 0 {
        return Rational::one();
    }
    let size = n + m;
    let mut mat = vec![vec![Rational::zero(); size]; size];
    for row in 0..m {
        for k in 0..=n {
            mat[row][row + k] = f.coeff(n - k);
        }
    }
    for row in 0..n {
        for k in 0..=m {
            mat[m + row][row + k] = g.coeff(m - k);
        }
    }
    let mut det = Rational::one();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !mat[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return Rational::zero(),
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = -det;
        }
        let pv = mat[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pv;
            for c in col..size {
                let t = &factor * &mat[col][c];
                mat[r][c] -= t;
            }
        }
    }
    det
}

/// Res_y(f, g) as an exact polynomial in x.
///
/// Evaluates the Sylvester determinant at bound+1 rational sample points where
/// neither leading y-coefficient vanishes, then interpolates exactly
/// (bound = degY(f)·degX(g) + degY(g)·degX(f)).
pub fn resultant_in_y(f: &BiPoly, g: &BiPoly) -> Result<UniPoly, NumError> {
    if f.deg_y() == 0 || g.deg_y() == 0 {
        return Err(NumError::ConstantInY);
    }
    if f.leading_y().is_zero() || g.leading_y().is_zero() {
        return Err(NumError::DegenerateLeadingCoefficient);
    }
    let bound = f.deg_y() * g.deg_x() + g.deg_y() * f.deg_x();
    let mut nodes: Vec<Rational> = Vec::with_capacity(bound + 1);
    let mut values: Vec<Rational> = Vec::with_capacity(bound + 1);
    let mut t = 0i64;
    while nodes.len() < bound + 1 {
        let x = rat(t);
        // Alternate 0, 1, -1, 2, -2, ...
        t = if t > 0 { -t } else { -t + 1 };
        if f.leading_y().eval(&x).is_zero() || g.leading_y().eval(&x).is_zero() {
            continue;
        }
        let fv = f.eval_x(&x);
        let gv = g.eval_x(&x);
        values.push(sylvester_determinant(&fv, &gv));
        nodes.push(x);
    }
    Ok(lagrange_interpolate(&nodes, &values))
}

/// Exact Lagrange interpolation through distinct rational nodes.
pub fn lagrange_interpolate(nodes: &[Rational], values: &[Rational]) -> UniPoly {
    assert_eq!(nodes.len(), values.len());
    let mut acc = UniPoly::zero();
    for (i, xi) in nodes.iter().enumerate() {
        if values[i].is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = Rational::one();
        for (j, xj) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UniPoly::new(vec![-xj.clone(), Rational::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(&values[i] / &denom)));
    }
    acc
}

/// Discriminant-style singular set polynomial: Res_y(f, df/dy).
pub fn discriminant_in_y(f: &BiPoly) -> Result<UniPoly, NumError> {
    resultant_in_y(f, &f.derivative_y())
}
