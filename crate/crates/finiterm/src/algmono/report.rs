//! Assembles the monodromy report (group, pair, infinity permutation) and
//! derives the representability verdicts from the group structure.

use super::branch::{branch_points, BranchData};
use super::skeleton::{build_skeleton, LoopSkeleton};
use super::track::track_loop;
use super::AlgError;
use crate::numkernel::{BiPoly, ToleranceConfig};
use crate::permgrp::{
    composition_factor_signature, derived_series, is_almost_solvable_finite, is_k_solvable,
    is_solvable, MonodromyPair, Permutation, PermutationGroup,
};
use crate::verdict::{RepresentabilityClass, Verdict, VerdictEvidence, VerdictStatus};

#[derive(Clone, Debug)]
pub struct AlgebraicMonodromyReport {
    pub branch: BranchData,
    pub skeleton: LoopSkeleton,
    /// One permutation per skeleton loop, in skeleton order.
    pub permutations: Vec<Permutation>,
    /// Inverse of the ordered product of the loop permutations.
    pub infinity_permutation: Permutation,
    pub group: PermutationGroup,
    /// Present iff the group is transitive (f irreducible in practice).
    pub pair: Option<MonodromyPair>,
    pub transitive: bool,
}

/// Ordered product: continuation along loop 1, then loop 2, ….
pub(crate) fn ordered_product(perms: &[Permutation], degree: usize) -> Permutation {
    perms
        .iter()
        .fold(Permutation::identity(degree), |acc, p| acc.then(p))
}

pub fn monodromy(f: &BiPoly, tol: &ToleranceConfig) -> Result<AlgebraicMonodromyReport, AlgError> {
    let branch = branch_points(f, tol)?;
    let skeleton = build_skeleton(&branch);
    let permutations: Vec<Permutation> = skeleton
        .loops
        .iter()
        .map(|path| track_loop(f, &branch, path, tol))
        .collect::<Result<_, _>>()?;
    let n = branch.n_sheets;
    let infinity_permutation = ordered_product(&permutations, n).inverse();
    let group = PermutationGroup::new(n, permutations.clone());
    let transitive = group.is_transitive();
    let pair = if transitive {
        Some(group.monodromy_pair(0)?)
    } else {
        None
    };
    Ok(AlgebraicMonodromyReport {
        branch,
        skeleton,
        permutations,
        infinity_permutation,
        group,
        pair,
        transitive,
    })
}

#[derive(Clone, Debug)]
pub struct AlgebraicClassification {
    pub report: AlgebraicMonodromyReport,
    pub verdicts: Vec<Verdict>,
}

/// Verdicts for a permutation monodromy group: quadratures via solvability,
/// k-radicals / k-quadratures via k-solvability, and generalized
/// quadratures (always representable for a finite group).
pub(crate) fn verdicts_for_group(group: &PermutationGroup, kmax: usize) -> Vec<Verdict> {
    let series = derived_series(group);
    let series_orders: Vec<String> = series.iter().map(|g| g.order().to_string()).collect();
    let signature = composition_factor_signature(group);
    let base_evidence = |witness: Option<String>| VerdictEvidence {
        group_order: Some(group.order().to_string()),
        factor_signature: signature.as_ref().ok().map(|s| s.to_string()),
        derived_series_orders: Some(series_orders.clone()),
        witness,
        polygon_case: None,
    };
    let mut verdicts = Vec::new();
    if is_solvable(group) {
        verdicts.push(
            Verdict::new(
                RepresentabilityClass::Radicals,
                VerdictStatus::Representable,
                "monodromy group is solvable: the derived series reaches the identity",
            )
            .with_evidence(base_evidence(None)),
        );
    } else {
        let terminal = series.last().unwrap().order();
        verdicts.push(
            Verdict::new(
                RepresentabilityClass::Quadratures,
                VerdictStatus::StronglyNonRepresentable,
                format!("monodromy group is not solvable: derived series stabilizes at a perfect group of order {terminal}"),
            )
            .with_evidence(base_evidence(None)),
        );
    }
    for k in 1..=kmax {
        match is_k_solvable(group, k) {
            Ok(true) => verdicts.push(
                Verdict::new(
                    RepresentabilityClass::KRadicals(k),
                    VerdictStatus::Representable,
                    format!("monodromy group is {k}-solvable: every composition factor is cyclic or embeds in S{k}"),
                )
                .with_evidence(base_evidence(None)),
            ),
            Ok(false) => verdicts.push(
                Verdict::new(
                    RepresentabilityClass::KQuadratures(k),
                    VerdictStatus::StronglyNonRepresentable,
                    format!("monodromy group is not {k}-solvable: some nonabelian simple factor needs more than {k} points"),
                )
                .with_evidence(base_evidence(None)),
            ),
            Err(e) => verdicts.push(
                Verdict::new(
                    RepresentabilityClass::KQuadratures(k),
                    VerdictStatus::Inconclusive,
                    format!("k-solvability undecided: {e}"),
                )
                .with_evidence(base_evidence(None)),
            ),
        }
    }
    let (_, witness) = is_almost_solvable_finite(group);
    verdicts.push(
        Verdict::new(
            RepresentabilityClass::GeneralizedQuadratures,
            VerdictStatus::Representable,
            "finite monodromy group is almost solvable; algebraic functions are representable by generalized quadratures",
        )
        .with_evidence(base_evidence(Some(witness))),
    );
    verdicts
}

pub fn classify_algebraic(
    f: &BiPoly,
    kmax: usize,
    tol: &ToleranceConfig,
) -> Result<AlgebraicClassification, AlgError> {
    let report = monodromy(f, tol)?;
    let verdicts = verdicts_for_group(&report.group, kmax);
    Ok(AlgebraicClassification { report, verdicts })
}
