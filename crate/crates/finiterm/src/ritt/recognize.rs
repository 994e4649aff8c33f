//! Recognition of power and Chebyshev polynomials up to rational linear
//! changes, by exact coefficient matching against the model polynomial.

use num_traits::{One, Signed, Zero};

use super::decompose::is_primitive;
use super::RittError;
use crate::numkernel::{rat, Rational, UniPoly};

/// z ↦ a·z + b with a ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    pub a: Rational,
    pub b: Rational,
}

impl LinearChange {
    pub fn as_poly(&self) -> UniPoly {
        UniPoly::new(vec![self.b.clone(), self.a.clone()])
    }
}

/// Chebyshev polynomial Tₙ from the recurrence T₀=1, T₁=z,
/// Tₙ = 2z·Tₙ₋₁ − Tₙ₋₂.
pub fn chebyshev_poly(n: usize) -> UniPoly {
    let mut t0 = UniPoly::one();
    let mut t1 = UniPoly::from_i64(&[0, 1]);
    if n == 0 {
        return t0;
    }
    let two_z = UniPoly::from_i64(&[0, 2]);
    for _ in 1..n {
        let next = two_z.mul(&t1).sub(&t0);
        t0 = t1;
        t1 = next;
    }
    t1
}

/// p = outer ∘ zⁿ ∘ inner? p must be α(z−β)ⁿ + γ, i.e. p′ a perfect
/// (n−1)-th power of a linear polynomial.
pub(crate) fn recognize_power_unchecked(p: &UniPoly) -> Option<(usize, LinearChange, LinearChange)> {
    let n = p.degree();
    if n < 2 {
        return None;
    }
    // Candidate β from the derivative: p′ = nα(z−β)^(n−1) forces
    // β = −c_{n−2}/( (n−1)·c_{n−1} ) of the monic derivative.
    let dp = p.derivative();
    let lead = dp.leading().clone();
    let beta = -(dp.coeff(n - 2) / (&lead * rat((n - 1) as i64)));
    let alpha = p.leading().clone();
    let gamma = p.eval(&beta);
    let shifted = UniPoly::new(vec![-beta.clone(), Rational::one()]); // z − β
    let model = shifted.pow(n).scale(&alpha).add(&UniPoly::constant(gamma.clone()));
    if &model != p {
        return None;
    }
    // p(z) = α·wⁿ + γ with w = z − β.
    Some((
        n,
        LinearChange { a: alpha, b: gamma },
        LinearChange {
            a: Rational::one(),
            b: -beta,
        },
    ))
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() || r.is_zero() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    let cand = Rational::new(num.clone(), den.clone());
    if &(&cand * &cand) == r {
        Some(cand)
    } else {
        None
    }
}

/// p = outer ∘ Tₙ ∘ inner with rational linear changes? Solved from the
/// three top coefficients and verified by exact composition.
pub(crate) fn recognize_chebyshev_unchecked(
    p: &UniPoly,
) -> Option<(usize, LinearChange, LinearChange)> {
    let n = p.degree();
    if n < 2 {
        return None;
    }
    let t = chebyshev_poly(n);
    let a_n = t.coeff(n); // 2^(n−1)
    let b_n = t.coeff(n - 2);
    let pn = p.coeff(n);
    // p = s·Tₙ(uz+v) + t₀. Matching degrees n−1 and n−2:
    //   ρ := v/u = p_{n−1} / (n·pₙ)
    //   u² = (bₙ/aₙ) / (p_{n−2}/pₙ − C(n,2)·ρ²)
    let rho = p.coeff(n - 1) / (&pn * rat(n as i64));
    let binom2 = rat((n * (n - 1) / 2) as i64);
    let denom = p.coeff(n - 2) / &pn - &binom2 * &rho * &rho;
    if denom.is_zero() {
        return None;
    }
    let u_sq = (&b_n / &a_n) / denom;
    let u = rational_sqrt(&u_sq)?;
    for u in [u.clone(), -u] {
        let v = &rho * &u;
        let u_pow_n = num_traits::pow::pow(u.clone(), n);
        let s = &pn / (&a_n * u_pow_n);
        let inner = UniPoly::new(vec![v.clone(), u.clone()]);
        let t_of_inner = t.compose(&inner);
        let t0 = p.coeff(0) - &s * t_of_inner.coeff(0);
        let model = t_of_inner.scale(&s).add(&UniPoly::constant(t0.clone()));
        if &model == p {
            return Some((
                n,
                LinearChange { a: s, b: t0 },
                LinearChange { a: u, b: v },
            ));
        }
    }
    None
}

pub fn recognize_power(p: &UniPoly) -> Result<Option<(usize, LinearChange, LinearChange)>, RittError> {
    if p.degree() >= 2 && !is_primitive(p) {
        return Err(RittError::NotPrimitiveInput);
    }
    Ok(recognize_power_unchecked(p))
}

pub fn recognize_chebyshev(
    p: &UniPoly,
) -> Result<Option<(usize, LinearChange, LinearChange)>, RittError> {
    if p.degree() >= 2 && !is_primitive(p) {
        return Err(RittError::NotPrimitiveInput);
    }
    Ok(recognize_chebyshev_unchecked(p))
}
