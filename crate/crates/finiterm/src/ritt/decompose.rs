//! Exact functional decomposition p = q ∘ r over the rationals.
//!
//! For each divisor d of deg p the candidate right component is the unique
//! monic degree-d polynomial with r(0) = 0 whose e-th power matches the top
//! coefficients of p; the left component is read off the r-adic expansion
//! and the factorization is verified by exact composition.

use num_traits::{One, Zero};

use crate::numkernel::{rat, Rational, UniPoly};

use super::recognize::{recognize_chebyshev_unchecked, recognize_power_unchecked};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentTag {
    Linear,
    PowerUpToLinear(usize),
    ChebyshevUpToLinear(usize),
    DegreeAtMost4,
    OtherPrimitive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Primitive components, outermost first; composing them in order
    /// reproduces the input exactly.
    pub components: Vec<UniPoly>,
    pub tags: Vec<ComponentTag>,
}

impl Decomposition {
    pub fn compose_all(&self) -> UniPoly {
        let mut iter = self.components.iter();
        let first = iter.next().expect("at least one component").clone();
        iter.fold(first, |acc, c| acc.compose(c))
    }

    /// Every component invertible by radicals per Ritt's list.
    pub fn all_components_radical(&self) -> bool {
        self.tags.iter().all(|t| {
            matches!(
                t,
                ComponentTag::Linear
                    | ComponentTag::PowerUpToLinear(_)
                    | ComponentTag::ChebyshevUpToLinear(_)
                    | ComponentTag::DegreeAtMost4
            )
        })
    }
}

fn divisors_between(n: usize) -> Vec<usize> {
    (2..n).filter(|d| n % d == 0).collect()
}

/// Splits p = q ∘ r with deg r = d, r monic and r(0) = 0, if possible.
pub fn split_once(p: &UniPoly, d: usize) -> Option<(UniPoly, UniPoly)> {
    let n = p.degree();
    if n < 2 || d < 2 || d >= n || n % d != 0 {
        return None;
    }
    let e = n / d;
    let a = p.leading().clone();
    // Solve the top d coefficients of r from p ≡ a·r^e on degrees n‥n−d.
    let mut r_coeffs = vec![Rational::zero(); d + 1];
    r_coeffs[d] = Rational::one();
    // Only degrees n−1‥n−d+1 are free of lower q-terms; r(0) = 0 fixes r₀.
    for k in 1..d {
        // Coefficient of z^(n−k) in a·r^e is linear in r_{d−k} with factor
        // a·e once the higher coefficients are fixed; iterate to solve.
        let r_partial = UniPoly::new(r_coeffs.clone());
        let power = r_partial.pow(e).scale(&a);
        let current = power.coeff(n - k);
        let target = p.coeff(n - k);
        let correction = (target - current) / (&a * rat(e as i64));
        r_coeffs[d - k] = correction;
    }
    let r = UniPoly::new(r_coeffs);
    // r-adic expansion of p: all digits must be constants.
    let mut q_coeffs = Vec::with_capacity(e + 1);
    let mut rest = p.clone();
    for _ in 0..=e {
        let (quot, digit) = rest.divrem(&r);
        if !digit.is_constant() {
            return None;
        }
        q_coeffs.push(digit.coeff(0));
        rest = quot;
    }
    if !rest.is_zero() {
        return None;
    }
    let q = UniPoly::new(q_coeffs);
    if q.degree() != e {
        return None;
    }
    // Exact verification.
    if q.compose(&r) != *p {
        return None;
    }
    Some((q, r))
}

pub fn is_primitive(p: &UniPoly) -> bool {
    divisors_between(p.degree())
        .into_iter()
        .all(|d| split_once(p, d).is_none())
}

fn complete_chains(p: &UniPoly) -> Vec<Vec<UniPoly>> {
    let n = p.degree();
    let mut out: Vec<Vec<UniPoly>> = Vec::new();
    for d in divisors_between(n) {
        if let Some((q, r)) = split_once(p, d) {
            for qs in complete_chains(&q) {
                for rs in complete_chains(&r) {
                    let mut chain = qs.clone();
                    chain.extend(rs.clone());
                    if !out.contains(&chain) {
                        out.push(chain);
                    }
                }
            }
        }
    }
    if out.is_empty() {
        out.push(vec![p.clone()]);
    }
    out
}

fn tag_component(c: &UniPoly) -> ComponentTag {
    let n = c.degree();
    if n <= 1 {
        return ComponentTag::Linear;
    }
    if recognize_power_unchecked(c).is_some() {
        return ComponentTag::PowerUpToLinear(n);
    }
    if recognize_chebyshev_unchecked(c).is_some() {
        return ComponentTag::ChebyshevUpToLinear(n);
    }
    if n <= 4 {
        return ComponentTag::DegreeAtMost4;
    }
    ComponentTag::OtherPrimitive
}

/// All complete decompositions of p into primitive components, one
/// canonical representative (right components monic with zero constant
/// term) per divisor chain.
pub fn decompose(p: &UniPoly) -> Vec<Decomposition> {
    assert!(!p.is_constant(), "decompose needs a nonconstant polynomial");
    assert!(p.degree() <= 64, "degree cap exceeded");
    complete_chains(p)
        .into_iter()
        .map(|components| {
            let tags = components.iter().map(tag_component).collect();
            Decomposition { components, tags }
        })
        .collect()
}
