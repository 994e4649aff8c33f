//! Case analysis for circular-arc polygons: common point of all sides,
//! pair of points symmetric in every side, finite net of circles, or none.

use num_complex::Complex64;

use super::geom::{circle_intersections, reflect_sphere, CPoint, GenCircle};
use super::moebius::{reflection_closure, ClosureOutcome, MoebiusLike};
use super::PolygonError;
use crate::numkernel::ToleranceConfig;
use crate::verdict::{RepresentabilityClass, Verdict, VerdictEvidence, VerdictStatus};

pub const CLOSURE_BOUND: usize = 400;

#[derive(Clone, Debug)]
pub struct Side {
    pub circle: GenCircle,
    pub endpoints: (Complex64, Complex64),
}

#[derive(Clone, Debug)]
pub struct PolygonSpec {
    pub sides: Vec<Side>,
}

impl PolygonSpec {
    pub fn new(sides: Vec<Side>) -> Result<Self, PolygonError> {
        if sides.len() < 2 {
            return Err(PolygonError::TooFewSides);
        }
        for (i, s) in sides.iter().enumerate() {
            for z in [s.endpoints.0, s.endpoints.1] {
                let residual = s.circle.eval(z).abs();
                if !s.circle.contains(CPoint::Finite(z), 1e-9) {
                    return Err(PolygonError::EndpointOffCircle { side: i, residual });
                }
            }
        }
        for i in 0..sides.len() {
            let next = (i + 1) % sides.len();
            let shared = sides[i].endpoints.1;
            let gap = (shared - sides[next].endpoints.0).norm();
            if gap > 1e-9 * (1.0 + shared.norm()) {
                return Err(PolygonError::DisconnectedSides { side: i, next });
            }
        }
        Ok(PolygonSpec { sides })
    }
}

/// Case 1: a point (possibly ∞) on the continuation of every side.
/// Candidates come from the first two circles; ∞ appears iff both are lines.
pub fn common_point_of_sides(poly: &PolygonSpec, tol: &ToleranceConfig) -> Option<CPoint> {
    let candidates = circle_intersections(&poly.sides[0].circle, &poly.sides[1].circle, tol.cluster);
    candidates.into_iter().find(|&p| {
        poly.sides[2..]
            .iter()
            .all(|s| s.circle.contains(p, tol.cluster))
    })
}

fn fixed_points(m: &MoebiusLike, tol: f64) -> Option<(CPoint, CPoint)> {
    assert!(!m.conjugating);
    let (a, b) = (m.matrix[(0, 0)], m.matrix[(0, 1)]);
    let (c, d) = (m.matrix[(1, 0)], m.matrix[(1, 1)]);
    // det = 1: parabolic (or identity) iff tr² = 4, a single fixed point.
    let tr = a + d;
    if (tr * tr - 4.0).norm() <= 100.0 * tol {
        return None;
    }
    if c.norm() <= tol {
        return Some((CPoint::Finite(b / (d - a)), CPoint::Infinity));
    }
    let disc = ((d - a) * (d - a) + 4.0 * c * b).sqrt();
    let p = (a - d + disc) / (2.0 * c);
    let q = (a - d - disc) / (2.0 * c);
    Some((CPoint::Finite(p), CPoint::Finite(q)))
}

fn order_pair(p: CPoint, q: CPoint) -> (CPoint, CPoint) {
    match (p, q) {
        (CPoint::Infinity, _) => (q, p),
        (CPoint::Finite(zp), CPoint::Finite(zq)) if zp.norm() > zq.norm() => (q, p),
        _ => (p, q),
    }
}

/// Case 2: a pair of points that every side reflection either swaps or
/// leaves on its circle. Candidates are the fixed points of compositions of
/// two side inversions; parabolic compositions contribute none.
pub fn symmetric_pair(poly: &PolygonSpec, tol: &ToleranceConfig) -> Option<(CPoint, CPoint)> {
    let n = poly.sides.len();
    let accept = |p: CPoint, q: CPoint| {
        poly.sides.iter().all(|s| {
            reflect_sphere(&s.circle, p).approx_eq(&q, tol.cluster.sqrt())
                || (s.circle.contains(p, tol.cluster) && s.circle.contains(q, tol.cluster))
        })
    };
    for i in 0..n {
        for j in i + 1..n {
            let g = MoebiusLike::reflection(&poly.sides[i].circle)
                .compose(&MoebiusLike::reflection(&poly.sides[j].circle));
            let Some((p, q)) = fixed_points(&g, tol.cluster) else {
                continue;
            };
            if accept(p, q) {
                return Some(order_pair(p, q));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NetTag {
    PyramidOrDiheron,
    Tetrahedral,
    CubeOctahedral,
    DodecahedralIcosahedral,
}

impl NetTag {
    /// The order-60 net needs degree-5 equations; everything else is
    /// solvable by radicals.
    pub fn representability(self) -> RepresentabilityClass {
        match self {
            NetTag::DodecahedralIcosahedral => RepresentabilityClass::KRadicals(5),
            _ => RepresentabilityClass::Radicals,
        }
    }
}

#[derive(Clone, Debug)]
pub enum ClosureReport {
    Finite {
        order: usize,
        orientation_order: usize,
        tag: NetTag,
    },
    ExceedsBound,
}

/// Case 3: the group generated by side reflections is finite; the net tag
/// follows from the orientation-preserving subgroup.
pub fn reflection_group_closure(
    poly: &PolygonSpec,
    bound: usize,
    tol: &ToleranceConfig,
) -> ClosureReport {
    let gens: Vec<MoebiusLike> = poly
        .sides
        .iter()
        .map(|s| MoebiusLike::reflection(&s.circle))
        .collect();
    let dedup_tol = 100.0 * tol.cluster;
    match reflection_closure(&gens, bound, dedup_tol) {
        ClosureOutcome::ExceedsBound => ClosureReport::ExceedsBound,
        ClosureOutcome::Finite { elements } => {
            let rotations: Vec<&MoebiusLike> =
                elements.iter().filter(|e| !e.conjugating).collect();
            let orientation_order = rotations.len();
            // Polyhedral rotation groups have bounded element orders (3, 4,
            // 5); cyclic and dihedral groups of the same size do not.
            let max_rot_order = rotations
                .iter()
                .filter_map(|r| r.projective_order(2 * bound, dedup_tol))
                .max()
                .unwrap_or(1);
            let tag = match orientation_order {
                12 if max_rot_order <= 3 => NetTag::Tetrahedral,
                24 if max_rot_order <= 4 => NetTag::CubeOctahedral,
                60 if max_rot_order <= 5 => NetTag::DodecahedralIcosahedral,
                _ => NetTag::PyramidOrDiheron,
            };
            ClosureReport::Finite {
                order: elements.len(),
                orientation_order,
                tag,
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct PolygonClassification {
    pub common_point: Option<CPoint>,
    pub symmetric_pair: Option<(CPoint, CPoint)>,
    pub closure: ClosureReport,
    pub verdict: Verdict,
}

pub fn classify_polygon(poly: &PolygonSpec, tol: &ToleranceConfig) -> PolygonClassification {
    let common_point = common_point_of_sides(poly, tol);
    let pair = symmetric_pair(poly, tol);
    let closure = reflection_group_closure(poly, CLOSURE_BOUND, tol);

    let mut also = Vec::new();
    if common_point.is_some() {
        also.push("case 1");
    }
    if pair.is_some() {
        also.push("case 2");
    }
    if matches!(closure, ClosureReport::Finite { .. }) {
        also.push("case 3");
    }
    let overlap_note = if also.len() > 1 {
        format!(" (cases holding: {})", also.join(", "))
    } else {
        String::new()
    };

    let verdict = if let Some(p) = common_point {
        Verdict::new(
            RepresentabilityClass::GeneralizedQuadratures,
            VerdictStatus::Representable,
            format!("all side continuations meet at {p}: Christoffel–Schwarz integral, integrable by quadratures{overlap_note}"),
        )
        .with_evidence(VerdictEvidence {
            polygon_case: Some("case1".into()),
            witness: Some(format!("common point {p}")),
            ..VerdictEvidence::default()
        })
    } else if let Some((p, q)) = pair {
        Verdict::new(
            RepresentabilityClass::Quadratures,
            VerdictStatus::Representable,
            format!("every side is symmetric in the pair ({p}, {q}); in the normal form (arcs about 0, radial rays) the equation R = (f'/f)² is integrable by quadratures{overlap_note}"),
        )
        .with_evidence(VerdictEvidence {
            polygon_case: Some("case2".into()),
            witness: Some(format!("symmetric pair ({p}, {q})")),
            ..VerdictEvidence::default()
        })
    } else if let ClosureReport::Finite {
        order,
        orientation_order,
        tag,
    } = closure
    {
        let class = tag.representability();
        let how = match class {
            RepresentabilityClass::KRadicals(5) => {
                "representable by radicals and solutions of degree-5 equations"
            }
            _ => "representable by radicals",
        };
        Verdict::new(
            class,
            VerdictStatus::Representable,
            format!("sides lie in a finite net ({tag:?}): reflection closure of order {order}, {how}{overlap_note}"),
        )
        .with_evidence(VerdictEvidence {
            polygon_case: Some(format!("case3:{tag:?}")),
            group_order: Some(order.to_string()),
            witness: Some(format!("orientation subgroup order {orientation_order}")),
            ..VerdictEvidence::default()
        })
    } else {
        Verdict::new(
            RepresentabilityClass::GeneralizedQuadratures,
            VerdictStatus::StronglyNonRepresentable,
            "no common point, no symmetric pair, and the reflection group is infinite: the Riemann map is strongly non-representable by generalized quadratures",
        )
        .with_evidence(VerdictEvidence {
            polygon_case: Some("none".into()),
            ..VerdictEvidence::default()
        })
    };
    PolygonClassification {
        common_point,
        symmetric_pair: pair,
        closure,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;
    use nalgebra::Matrix2;
    use rand::Rng;
    use rand::SeedableRng;

    fn tol() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    #[test]
    fn square_has_common_point_at_infinity() {
        let poly = fixtures::straight_quadrilateral();
        assert_eq!(common_point_of_sides(&poly, &tol()), Some(CPoint::Infinity));
        assert!(symmetric_pair(&poly, &tol()).is_none());
        let cls = classify_polygon(&poly, &tol());
        assert_eq!(cls.verdict.status, VerdictStatus::Representable);
        assert_eq!(cls.verdict.evidence.polygon_case.as_deref(), Some("case1"));
    }

    #[test]
    fn annular_quadrilateral_is_symmetric_about_zero_and_infinity() {
        let poly = fixtures::annular_quadrilateral();
        assert!(common_point_of_sides(&poly, &tol()).is_none());
        let (p, q) = symmetric_pair(&poly, &tol()).unwrap();
        assert!(p.approx_eq(&CPoint::Finite(Complex64::new(0.0, 0.0)), 1e-9));
        assert_eq!(q, CPoint::Infinity);
        let cls = classify_polygon(&poly, &tol());
        assert_eq!(cls.verdict.evidence.polygon_case.as_deref(), Some("case2"));
    }

    #[test]
    fn tetrahedral_triangle_closes_to_order_24() {
        let poly = fixtures::tetrahedral_triangle();
        assert!(common_point_of_sides(&poly, &tol()).is_none());
        assert!(symmetric_pair(&poly, &tol()).is_none());
        match reflection_group_closure(&poly, CLOSURE_BOUND, &tol()) {
            ClosureReport::Finite {
                order,
                orientation_order,
                tag,
            } => {
                assert_eq!(order, 24);
                assert_eq!(orientation_order, 12);
                assert_eq!(order, 2 * orientation_order);
                assert_eq!(tag, NetTag::Tetrahedral);
            }
            ClosureReport::ExceedsBound => panic!("tetrahedral net must close"),
        }
        let cls = classify_polygon(&poly, &tol());
        assert_eq!(cls.verdict.class, RepresentabilityClass::Radicals);
        assert_eq!(cls.verdict.status, VerdictStatus::Representable);
    }

    #[test]
    fn vanishing_angle_triangle_is_strongly_non_representable() {
        let poly = fixtures::vanishing_angle_triangle();
        assert!(common_point_of_sides(&poly, &tol()).is_none());
        assert!(symmetric_pair(&poly, &tol()).is_none());
        assert!(matches!(
            reflection_group_closure(&poly, CLOSURE_BOUND, &tol()),
            ClosureReport::ExceedsBound
        ));
        let cls = classify_polygon(&poly, &tol());
        assert_eq!(
            cls.verdict.status,
            VerdictStatus::StronglyNonRepresentable
        );
        assert_eq!(
            cls.verdict.class,
            RepresentabilityClass::GeneralizedQuadratures
        );
    }

    #[test]
    fn verdict_tag_is_moebius_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let polys = [
            fixtures::straight_quadrilateral(),
            fixtures::annular_quadrilateral(),
            fixtures::tetrahedral_triangle(),
            fixtures::vanishing_angle_triangle(),
        ];
        for poly in &polys {
            let baseline = classify_polygon(poly, &tol());
            let moved = loop {
                let mut draw = || Complex64::new(rng.gen_range(-3..=3i32) as f64, 0.0);
                let t = Matrix2::new(draw(), draw(), draw(), draw());
                let det = t[(0, 0)] * t[(1, 1)] - t[(0, 1)] * t[(1, 0)];
                if det.norm() < 0.5 {
                    continue;
                }
                if let Some(m) = fixtures::transform_polygon(poly, &t) {
                    break m;
                }
            };
            let transformed = classify_polygon(&moved, &tol());
            assert_eq!(
                baseline.verdict.evidence.polygon_case,
                transformed.verdict.evidence.polygon_case,
                "fixture changed case under a fractional linear map"
            );
            assert_eq!(baseline.verdict.status, transformed.verdict.status);
        }
    }
}
