//! Circular-arc polygon classification: Christoffel–Schwarz common point,
//! symmetric pair, finite reflection net, or strong non-representability of
//! the Riemann map.

mod geom;
mod moebius;
mod polygon;

pub mod fixtures;

pub use geom::{circle_intersections, reflect, reflect_sphere, CPoint, GenCircle};
pub use moebius::{reflection_closure, ClosureOutcome, MoebiusLike};
pub use polygon::{
    classify_polygon, common_point_of_sides, reflection_group_closure, symmetric_pair,
    ClosureReport, NetTag, PolygonClassification, PolygonSpec, Side, CLOSURE_BOUND,
};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum PolygonError {
    #[error("reflection pole: the inversion center has no finite image")]
    PoleOfInversion,
    #[error("degenerate hermitian form: not a real circle or line")]
    DegenerateCircle,
    #[error("a polygon needs at least two sides")]
    TooFewSides,
    #[error("endpoint of side {side} does not lie on its circle (residual {residual:e})")]
    EndpointOffCircle { side: usize, residual: f64 },
    #[error("sides {side} and {next} do not share an endpoint")]
    DisconnectedSides { side: usize, next: usize },
}
