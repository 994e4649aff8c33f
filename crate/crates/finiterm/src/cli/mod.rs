//! Command-line front end: input grammars, run configuration, and report
//! assembly for the four classifiers.

mod config;
mod parse;
mod runner;

pub use config::{OutputFormat, RunConfig};
pub use parse::{parse_complex, parse_polynomial, polynomial_to_string, ParseError, ParsedPoly};
pub use runner::{
    run_algebraic, run_fuchsian, run_invert_poly, run_polygon, Report, EXIT_ERROR,
    EXIT_INCONCLUSIVE, EXIT_OK,
};

use crate::algmono::AlgError;
use crate::fuchsian::FuchsError;
use crate::permgrp::GroupError;
use crate::polygonmap::PolygonError;
use crate::ritt::RittError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error("malformed input file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Ritt(#[from] RittError),
    #[error(transparent)]
    Fuchs(#[from] FuchsError),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
