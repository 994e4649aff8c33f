//! Invertibility of polynomials by radicals and k-radicals: structural
//! classification from the Ritt decomposition, cross-checked against the
//! solvability of the inverse monodromy group.

use super::decompose::{decompose, ComponentTag, Decomposition};
use super::RittError;
use crate::algmono::{monodromy, AlgebraicMonodromyReport};
use crate::numkernel::{BiPoly, ToleranceConfig, UniPoly};
use crate::permgrp::{is_k_solvable, is_solvable};
use crate::verdict::{RepresentabilityClass, Verdict, VerdictEvidence, VerdictStatus};

/// Monodromy of the inverse function of p: the algebraic function defined
/// by p(y) − x = 0. The loop around infinity must be a full cycle.
pub fn inverse_monodromy(
    p: &UniPoly,
    tol: &ToleranceConfig,
) -> Result<AlgebraicMonodromyReport, RittError> {
    assert!(p.degree() >= 2);
    let f = BiPoly::from_inverse_of(p);
    let report = monodromy(&f, tol)?;
    if !report.infinity_permutation.is_full_cycle() {
        return Err(RittError::InfinityNotFullCycle);
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub verdict: Verdict,
    /// All complete decompositions; `certificate` indexes the one whose
    /// components are all on Ritt's invertible list, when any.
    pub decompositions: Vec<Decomposition>,
    pub certificate: Option<usize>,
    pub group_solvable: bool,
}

/// Ritt's theorem: p is invertible by radicals iff some complete
/// decomposition uses only linear, power, Chebyshev, and degree ≤ 4
/// components. The structural answer is cross-checked against solvability
/// of the inverse monodromy; disagreement is a hard error.
pub fn invertible_by_radicals(
    p: &UniPoly,
    tol: &ToleranceConfig,
) -> Result<RadicalReport, RittError> {
    let decompositions = decompose(p);
    let certificate = decompositions
        .iter()
        .position(Decomposition::all_components_radical);
    let structural = certificate.is_some();
    let group_solvable = if p.degree() >= 2 {
        is_solvable(&inverse_monodromy(p, tol)?.group)
    } else {
        true
    };
    if structural != group_solvable {
        return Err(RittError::CrossCheckMismatch {
            structural,
            solvable: group_solvable,
        });
    }
    let evidence = VerdictEvidence {
        witness: certificate.map(|i| {
            let tags: Vec<String> = decompositions[i]
                .tags
                .iter()
                .map(|t| format!("{t:?}"))
                .collect();
            format!("decomposition with components [{}]", tags.join(", "))
        }),
        ..VerdictEvidence::default()
    };
    let verdict = if structural {
        Verdict::new(
            RepresentabilityClass::Radicals,
            VerdictStatus::Representable,
            "some complete decomposition uses only linear, power, Chebyshev, and degree ≤ 4 components; cross-checked: inverse monodromy is solvable",
        )
        .with_evidence(evidence)
    } else {
        Verdict::new(
            RepresentabilityClass::Quadratures,
            VerdictStatus::StronglyNonRepresentable,
            "no complete decomposition stays within Ritt's invertible list; cross-checked: inverse monodromy is not solvable",
        )
        .with_evidence(evidence)
    };
    Ok(RadicalReport {
        verdict,
        decompositions,
        certificate,
        group_solvable,
    })
}

#[derive(Clone, Debug)]
pub struct KRadicalReport {
    pub verdict: Verdict,
    pub decomposition: Decomposition,
    /// Per-component k-solvability, aligned with the decomposition.
    pub component_passes: Vec<bool>,
    /// Components that are k-solvable with k < degree while being neither
    /// power nor Chebyshev nor of degree ≤ k (Theorem-22-exceptional).
    pub exceptional_components: Vec<usize>,
}

/// p is invertible by k-radicals iff every primitive component's inverse
/// monodromy group is k-solvable.
pub fn invertible_by_k_radicals(
    p: &UniPoly,
    k: usize,
    tol: &ToleranceConfig,
) -> Result<KRadicalReport, RittError> {
    assert!(k >= 1);
    let decomposition = decompose(p).into_iter().next().expect("nonconstant input");
    let mut component_passes = Vec::new();
    let mut exceptional_components = Vec::new();
    for (i, c) in decomposition.components.iter().enumerate() {
        let deg = c.degree();
        if deg <= 1 {
            component_passes.push(true);
            continue;
        }
        let group = inverse_monodromy(c, tol)?.group;
        let pass = is_k_solvable(&group, k)?;
        if pass
            && k < deg
            && !matches!(
                decomposition.tags[i],
                ComponentTag::PowerUpToLinear(_) | ComponentTag::ChebyshevUpToLinear(_)
            )
            && deg > k
        {
            exceptional_components.push(i);
        }
        component_passes.push(pass);
    }
    let all_pass = component_passes.iter().all(|&b| b);
    let mut reason = if all_pass {
        format!("every primitive component has a {k}-solvable inverse monodromy group")
    } else {
        format!("some primitive component's inverse monodromy group is not {k}-solvable")
    };
    if !exceptional_components.is_empty() {
        reason.push_str(&format!(
            "; components {exceptional_components:?} are exceptional: {k}-solvable with degree above {k} yet neither power nor Chebyshev"
        ));
    }
    let verdict = if all_pass {
        Verdict::new(
            RepresentabilityClass::KRadicals(k),
            VerdictStatus::Representable,
            reason,
        )
    } else {
        Verdict::new(
            RepresentabilityClass::KQuadratures(k),
            VerdictStatus::StronglyNonRepresentable,
            reason,
        )
    };
    Ok(KRadicalReport {
        verdict,
        decomposition,
        component_passes,
        exceptional_components,
    })
}
