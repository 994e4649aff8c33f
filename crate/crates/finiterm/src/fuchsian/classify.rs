//! Verdicts for Fuchsian systems and the generic-stabilizer probe.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;

use super::lie::{is_simultaneously_triangularizable, lie_closure, LieClosure};
use super::system::{fuchsian_monodromy, FuchsianSystem, MonodromyMatrices};
use super::FuchsError;
use crate::numkernel::{frobenius, identity, CMatrix, CVector, ToleranceConfig};
use crate::verdict::{RepresentabilityClass, Verdict, VerdictEvidence, VerdictStatus};

#[derive(Clone, Debug)]
pub struct FuchsianClassification {
    pub monodromy: MonodromyMatrices,
    pub lie: LieClosure,
    pub triangularizable: bool,
    /// Unitary witness basis when triangularizable.
    pub witness: Option<CMatrix>,
    pub verdicts: Vec<Verdict>,
}

/// Classification per the triangularization route: a triangularizing basis
/// certifies representability by generalized quadratures; its absence
/// certifies strong non-representability only under the user-asserted
/// smallness assumption on the residues. Otherwise: Inconclusive.
pub fn classify_fuchsian(
    sys: &FuchsianSystem,
    assume_small: bool,
    _kmax: usize,
    tol: &ToleranceConfig,
) -> Result<FuchsianClassification, FuchsError> {
    let monodromy = fuchsian_monodromy(sys, tol)?;
    let lie = lie_closure(&sys.residues, tol)?;
    let (triangularizable, witness) = is_simultaneously_triangularizable(&sys.residues, tol)?;
    let evidence = VerdictEvidence {
        group_order: None,
        factor_signature: None,
        derived_series_orders: Some(lie.derived_dims.iter().map(|d| d.to_string()).collect()),
        witness: witness.as_ref().map(|_| {
            "unitary triangularizing basis for all residues (attached to report)".to_string()
        }),
        polygon_case: None,
    };
    let verdict = if triangularizable {
        Verdict::new(
            RepresentabilityClass::GeneralizedQuadratures,
            VerdictStatus::Representable,
            "residues are simultaneously triangularizable; the monodromy is triangular in the witness basis, hence solvable, and the system is solvable by generalized quadratures",
        )
        .with_evidence(evidence)
    } else if assume_small {
        Verdict::new(
            RepresentabilityClass::GeneralizedQuadratures,
            VerdictStatus::StronglyNonRepresentable,
            "residues are not simultaneously triangularizable; under the user-asserted smallness assumption on the residues, almost every solution is strongly non-representable by generalized quadratures (smallness bound asserted by the user, not computed)",
        )
        .with_evidence(evidence)
    } else {
        Verdict::new(
            RepresentabilityClass::GeneralizedQuadratures,
            VerdictStatus::Inconclusive,
            "residues are not simultaneously triangularizable, but no smallness assumption was asserted; monodromy matrices and Lie-closure evidence attached",
        )
        .with_evidence(evidence)
    };
    Ok(FuchsianClassification {
        monodromy,
        lie,
        triangularizable,
        witness,
        verdicts: vec![verdict],
    })
}

#[derive(Clone, Debug)]
pub struct StabilizerProbe {
    pub trials: usize,
    /// Indices of trial vectors fixed by some non-identity generator.
    pub failures: Vec<usize>,
    /// True when every monodromy matrix is the identity and the probe is
    /// vacuous.
    pub skipped: bool,
    pub note: String,
}

/// Samples random unit vectors and checks that every non-identity
/// monodromy generator moves them: the stationary subgroup of almost every
/// solution is trivial.
pub fn generic_stabilizer_probe(
    mon: &MonodromyMatrices,
    trials: usize,
    seed: u64,
    tol: &ToleranceConfig,
) -> StabilizerProbe {
    let n = mon.dim();
    let id = identity(n);
    let moving: Vec<&CMatrix> = mon
        .matrices
        .iter()
        .filter(|m| frobenius(&(*m - &id)) > 10.0 * tol.ode)
        .collect();
    if moving.is_empty() {
        return StabilizerProbe {
            trials: 0,
            failures: Vec::new(),
            skipped: true,
            note: "all monodromy matrices are the identity; probe vacuous".to_string(),
        };
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..trials {
        let mut v = CVector::from_fn(n, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let norm = v.norm();
        if norm < 1e-12 {
            continue;
        }
        v /= Complex64::from(norm);
        let moved = moving
            .iter()
            .map(|m| (*m * &v - &v).norm())
            .fold(f64::INFINITY, f64::min);
        if moved <= 10.0 * tol.ode {
            failures.push(t);
        }
    }
    let note = format!(
        "{} of {} random unit vectors fixed by some generator",
        failures.len(),
        trials
    );
    StabilizerProbe {
        trials,
        failures,
        skipped: false,
        note,
    }
}
