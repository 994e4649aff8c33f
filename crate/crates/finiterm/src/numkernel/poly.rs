//! Exact-rational univariate and bivariate polynomials, plus a complex
//! floating companion type used by the numeric root finder.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational scalar used throughout the exact layer.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_to_f64(r: &Rational) -> f64 {
    // Split into integer and fractional parts so huge numerators still land
    // on the nearest representable double.
    let n = r.numer();
    let d = r.denom();
    let (q, rem) = (n / d, n % d);
    let qf = q.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let remf = rem.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    qf + remf / df
}

/// Univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of the k-th power; the leading coefficient
/// is nonzero unless the polynomial is zero (empty coefficient list is not
/// used: the zero polynomial is `[0]`).
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::new(vec![])
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial c·z^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Complex64::new(rat_to_f64(c), 0.0);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.degree() == 0 {
            return UniPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat(k as i64))
            .collect();
        UniPoly::new(coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![Rational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            v[k] += c;
        }
        UniPoly::new(v)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: usize) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact euclidean division; panics if divisor is zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        if self.degree() < dd || self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        let lead = d.leading().clone();
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            quot[k - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[k - dd + j] -= t;
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading().clone();
        UniPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Squarefree decomposition (Yun): returns (factor, multiplicity) pairs
    /// with multiplicities ascending; the product of factor^mult equals the
    /// monic normalization of self.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let p = self.monic();
        if p.degree() == 0 {
            return vec![];
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.degree() == 0 {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut w = p.divrem(&g).0;
        let mut y = dp.divrem(&g).0;
        let mut i = 1usize;
        loop {
            let z = y.sub(&w.derivative());
            if z.is_zero() {
                if w.degree() > 0 {
                    out.push((w.monic(), i));
                }
                break;
            }
            let f = w.gcd(&z);
            if f.degree() > 0 {
                out.push((f.clone(), i));
            }
            w = w.divrem(&f).0;
            y = z.divrem(&f).0;
            i += 1;
        }
        out
    }

    /// Substitution p(q(z)), exact.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn to_cpoly(&self) -> CPoly {
        CPoly::new(
            self.coeffs
                .iter()
                .map(|c| Complex64::new(rat_to_f64(c), 0.0))
                .collect(),
        )
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]", self.display_with_var("z"))
    }
}

impl UniPoly {
    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mag_str = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            let term = match k {
                0 => mag_str,
                1 if mag.is_one() => var.to_string(),
                1 => format!("{}*{}", mag_str, var),
                _ if mag.is_one() => format!("{}^{}", var, k),
                _ => format!("{}*{}^{}", mag_str, var, k),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{}", term)
                } else {
                    term
                });
            } else if c.is_negative() {
                parts.push(format!("- {}", term));
            } else {
                parts.push(format!("+ {}", term));
            }
        }
        parts.join(" ")
    }
}

/// Univariate polynomial with complex floating coefficients; the numeric
/// counterpart of `UniPoly` used by the root finder and sheet tracker.
#[derive(Clone, Debug)]
pub struct CPoly {
    coeffs: Vec<Complex64>,
}

impl CPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.norm() == 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        CPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> CPoly {
        if self.degree() == 0 {
            return CPoly::new(vec![]);
        }
        CPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

/// Bivariate polynomial in (x, y) with exact rational coefficients, stored by
/// powers of y: `y_coeffs[j]` is the coefficient of y^j, a polynomial in x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    y_coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn new(mut y_coeffs: Vec<UniPoly>) -> Self {
        while y_coeffs.len() > 1 && y_coeffs.last().map_or(false, |c| c.is_zero()) {
            y_coeffs.pop();
        }
        if y_coeffs.is_empty() {
            y_coeffs.push(UniPoly::zero());
        }
        BiPoly { y_coeffs }
    }

    /// Builds p(y) - x for a univariate p, the defining equation of the
    /// inverse function of p.
    pub fn from_inverse_of(p: &UniPoly) -> Self {
        let mut y_coeffs: Vec<UniPoly> = p
            .coeffs()
            .iter()
            .map(|c| UniPoly::constant(c.clone()))
            .collect();
        y_coeffs[0] = y_coeffs[0].sub(&UniPoly::monomial(Rational::one(), 1));
        BiPoly::new(y_coeffs)
    }

    pub fn y_coeffs(&self) -> &[UniPoly] {
        &self.y_coeffs
    }

    pub fn deg_y(&self) -> usize {
        self.y_coeffs.len() - 1
    }

    pub fn deg_x(&self) -> usize {
        self.y_coeffs.iter().map(|c| c.degree()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.y_coeffs.len() == 1 && self.y_coeffs[0].is_zero()
    }

    pub fn leading_y(&self) -> &UniPoly {
        self.y_coeffs.last().unwrap()
    }

    pub fn derivative_y(&self) -> BiPoly {
        if self.deg_y() == 0 {
            return BiPoly::new(vec![]);
        }
        BiPoly::new(
            self.y_coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&rat(k as i64)))
                .collect(),
        )
    }

    /// Evaluates at a rational x, producing an exact polynomial in y.
    pub fn eval_x(&self, x: &Rational) -> UniPoly {
        UniPoly::new(self.y_coeffs.iter().map(|c| c.eval(x)).collect())
    }

    /// Evaluates at a complex x, producing a floating polynomial in y.
    pub fn eval_x_complex(&self, x: Complex64) -> CPoly {
        CPoly::new(self.y_coeffs.iter().map(|c| c.eval_complex(x)).collect())
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval_x(x).eval(y)
    }
}
