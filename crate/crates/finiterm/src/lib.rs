//! Monodromy computation and finite-terms representability verdicts.
//!
//! The toolkit computes monodromy data for algebraic functions, polynomial
//! inverses, and Fuchsian linear systems, and classifies each input against
//! the Liouvillian representability classes: radicals, k-radicals,
//! quadratures, k-quadratures, and generalized quadratures. A separate
//! classifier handles circular-arc polygons and the finite-terms status of
//! their Riemann maps.

pub mod algmono;
pub mod cli;
pub mod fuchsian;
pub mod numkernel;
pub mod permgrp;
pub mod polygonmap;
pub mod ritt;
pub mod verdict;
