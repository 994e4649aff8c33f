//! Fractional linear and anti-fractional-linear maps of the sphere, and
//! breadth-first closure of groups generated by circle reflections.

use nalgebra::Matrix2;
use num_complex::Complex64;

use super::geom::{CPoint, GenCircle};

/// z ↦ Möbius(matrix)(z) when `conjugating` is false, z ↦ Möbius(matrix)(z̄)
/// when true. Matrix normalized to det = 1.
#[derive(Clone, Debug)]
pub struct MoebiusLike {
    pub matrix: Matrix2<Complex64>,
    pub conjugating: bool,
}

impl MoebiusLike {
    pub fn new(matrix: Matrix2<Complex64>, conjugating: bool) -> Self {
        let det = matrix[(0, 0)] * matrix[(1, 1)] - matrix[(0, 1)] * matrix[(1, 0)];
        assert!(det.norm() > 0.0, "singular matrix is not a sphere map");
        MoebiusLike {
            matrix: matrix / det.sqrt(),
            conjugating,
        }
    }

    pub fn identity() -> Self {
        MoebiusLike::new(Matrix2::identity(), false)
    }

    /// Inversion in the circle A|z|² + 2Re(B̄z) + C = 0 as an
    /// anti-holomorphic sphere map.
    pub fn reflection(circle: &GenCircle) -> Self {
        let m = Matrix2::new(
            -circle.b,
            Complex64::new(-circle.c, 0.0),
            Complex64::new(circle.a, 0.0),
            circle.b.conj(),
        );
        MoebiusLike::new(m, true)
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &MoebiusLike) -> MoebiusLike {
        let rhs = if self.conjugating {
            inner.matrix.conjugate()
        } else {
            inner.matrix
        };
        MoebiusLike::new(self.matrix * rhs, self.conjugating ^ inner.conjugating)
    }

    pub fn apply(&self, p: CPoint) -> CPoint {
        let z = match p {
            CPoint::Infinity => {
                let (a, c) = (self.matrix[(0, 0)], self.matrix[(1, 0)]);
                return if c.norm() <= 1e-13 * a.norm().max(1.0) {
                    CPoint::Infinity
                } else {
                    CPoint::Finite(a / c)
                };
            }
            CPoint::Finite(z) => {
                if self.conjugating {
                    z.conj()
                } else {
                    z
                }
            }
        };
        let num = self.matrix[(0, 0)] * z + self.matrix[(0, 1)];
        let den = self.matrix[(1, 0)] * z + self.matrix[(1, 1)];
        if den.norm() <= 1e-13 * num.norm().max(1.0) {
            CPoint::Infinity
        } else {
            CPoint::Finite(num / den)
        }
    }

    fn entries(&self) -> [Complex64; 4] {
        [
            self.matrix[(0, 0)],
            self.matrix[(0, 1)],
            self.matrix[(1, 0)],
            self.matrix[(1, 1)],
        ]
    }

    /// M identified with ωM, |ω| = 1: the phase is read off the other
    /// matrix's largest entry, so near-ties between entries cannot flip
    /// the comparison.
    pub fn projectively_eq(&self, other: &MoebiusLike, tol: f64) -> bool {
        if self.conjugating != other.conjugating {
            return false;
        }
        let a = self.entries();
        let b = other.entries();
        let k = (0..4)
            .max_by(|&i, &j| b[i].norm().partial_cmp(&b[j].norm()).unwrap())
            .unwrap();
        if a[k].norm() <= tol {
            return false;
        }
        let omega = a[k] / b[k];
        if (omega.norm() - 1.0).abs() > tol {
            return false;
        }
        a.iter().zip(&b).all(|(x, y)| (x - omega * y).norm() <= tol)
    }

    /// Multiplicative order as a projective map, up to `cap`.
    pub fn projective_order(&self, cap: usize, tol: f64) -> Option<usize> {
        let id = MoebiusLike::identity();
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.projectively_eq(&id, tol) {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }
}

#[derive(Clone, Debug)]
pub enum ClosureOutcome {
    Finite { elements: Vec<MoebiusLike> },
    ExceedsBound,
}

/// Breadth-first closure of the group generated by `gens`, elements
/// deduplicated projectively with tolerance `tol`.
pub fn reflection_closure(gens: &[MoebiusLike], bound: usize, tol: f64) -> ClosureOutcome {
    let mut elements = vec![MoebiusLike::identity()];
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        for g in gens {
            let next = g.compose(&elements[idx]);
            if elements.iter().any(|e| e.projectively_eq(&next, tol)) {
                continue;
            }
            if elements.len() >= bound {
                return ClosureOutcome::ExceedsBound;
            }
            elements.push(next);
            frontier.push(elements.len() - 1);
        }
    }
    ClosureOutcome::Finite { elements }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn reflection_matrix_matches_pointwise_reflection() {
        let shapes = [
            GenCircle::circle(c(1.0, -2.0), 1.5),
            GenCircle::line_through(c(0.0, 1.0), c(3.0, -1.0)),
        ];
        for s in &shapes {
            let m = MoebiusLike::reflection(s);
            for z in [c(0.3, 0.7), c(-2.0, 1.0), c(4.0, 4.0)] {
                let via_map = m.apply(CPoint::Finite(z));
                let direct = super::super::geom::reflect(s, z).unwrap();
                assert!(via_map.approx_eq(&CPoint::Finite(direct), 1e-10));
            }
            // Involution, projectively.
            assert!(m.compose(&m).projectively_eq(&MoebiusLike::identity(), 1e-9));
        }
    }

    #[test]
    fn two_mirrors_at_pi_over_4_generate_dihedral_8() {
        let l1 = GenCircle::line_through(c(0.0, 0.0), c(1.0, 0.0));
        let l2 = GenCircle::line_through(c(0.0, 0.0), c(1.0, 1.0));
        let gens = [MoebiusLike::reflection(&l1), MoebiusLike::reflection(&l2)];
        match reflection_closure(&gens, 400, 1e-7) {
            ClosureOutcome::Finite { elements } => {
                assert_eq!(elements.len(), 8);
                let rotations = elements.iter().filter(|e| !e.conjugating).count();
                assert_eq!(rotations, 4);
            }
            ClosureOutcome::ExceedsBound => panic!("D4 closure must be finite"),
        }
    }

    #[test]
    fn parallel_mirrors_generate_an_infinite_group() {
        let l1 = GenCircle::line_through(c(0.0, 0.0), c(1.0, 0.0));
        let l2 = GenCircle::line_through(c(0.0, 1.0), c(1.0, 1.0));
        let gens = [MoebiusLike::reflection(&l1), MoebiusLike::reflection(&l2)];
        assert!(matches!(
            reflection_closure(&gens, 400, 1e-7),
            ClosureOutcome::ExceedsBound
        ));
    }

    #[test]
    fn projective_order_of_a_rotation() {
        // Rotation by 2π/6 about 0.
        let w = Complex64::from_polar(1.0, std::f64::consts::PI / 6.0);
        let m = MoebiusLike::new(Matrix2::new(w, c(0.0, 0.0), c(0.0, 0.0), w.conj()), false);
        assert_eq!(m.projective_order(40, 1e-9), Some(6));
    }
}
