//! Acceptance gate: one pass/fail line per criterion, all criteria must
//! hold with the pinned tolerances.

use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use finiterm::algmono::{classify_algebraic, monodromy};
use finiterm::cli::{parse_polynomial, ParsedPoly};
use finiterm::fuchsian::{classify_fuchsian, fuchsian_monodromy, FuchsianSystem};
use finiterm::numkernel::{
    frobenius, identity, matrix_exp, rat, ratio, BiPoly, CMatrix, ToleranceConfig, UniPoly,
};
use finiterm::permgrp::{
    composition_factor_signature, is_k_solvable, is_solvable, CompositionFactor, Permutation,
    PermutationGroup,
};
use finiterm::polygonmap::{
    classify_polygon, fixtures, reflection_group_closure, ClosureReport, NetTag, CLOSURE_BOUND,
};
use finiterm::ritt::{chebyshev_poly, invertible_by_k_radicals, invertible_by_radicals, ComponentTag};
use finiterm::verdict::{RepresentabilityClass, VerdictStatus};

fn tol() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn quintic() -> BiPoly {
    match parse_polynomial("y^5+y-x").unwrap() {
        ParsedPoly::Bi(f) => f,
        _ => unreachable!(),
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

// ---------- criterion 1: the quintic ----------

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let cls = classify_algebraic(&quintic(), 8, &tol()).map_err(|e| e.to_string())?;
    let r = &cls.report;
    if r.branch.branch_points.len() != 4 {
        return Err(format!("expected 4 branch points, got {}", r.branch.branch_points.len()));
    }
    if r.group.order() != BigUint::from(120u32) {
        return Err(format!("group order {} ≠ 120", r.group.order()));
    }
    if !r.transitive {
        return Err("group not transitive".into());
    }
    if is_solvable(&r.group) {
        return Err("S5 misreported as solvable".into());
    }
    let has = |class: &RepresentabilityClass, status: VerdictStatus| {
        cls.verdicts.iter().any(|v| v.class == *class && v.status == status)
    };
    if !has(&RepresentabilityClass::Quadratures, VerdictStatus::StronglyNonRepresentable) {
        return Err("missing StronglyNonRepresentable(Quadratures)".into());
    }
    if !has(&RepresentabilityClass::KRadicals(5), VerdictStatus::Representable) {
        return Err("missing Representable(KRadicals(5))".into());
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 5.0 {
        return Err(format!("runtime {elapsed:?} exceeds 5 s"));
    }
    Ok(format!("S5 of order 120, 4 branch points, verdicts as expected, {elapsed:?}"))
}

// ---------- criterion 2: the y^n + y - x family ----------

fn family_groups() -> Result<Vec<(usize, PermutationGroup)>, String> {
    (5..=8)
        .map(|n| {
            let mut coeffs = vec![0i64; n + 1];
            coeffs[1] = 1;
            coeffs[n] = 1;
            let f = BiPoly::from_inverse_of(&UniPoly::from_i64(&coeffs));
            let report = monodromy(&f, &tol()).map_err(|e| format!("n={n}: {e}"))?;
            Ok((n, report.group))
        })
        .collect()
}

fn criterion_2() -> Result<String, String> {
    let start = Instant::now();
    for (n, group) in family_groups()? {
        if group.order() != factorial(n) {
            return Err(format!("n={n}: order {} ≠ {n}!", group.order()));
        }
        if is_k_solvable(&group, n - 1).map_err(|e| e.to_string())? {
            return Err(format!("n={n}: reported ({}-solvable)", n - 1));
        }
        if !is_k_solvable(&group, n).map_err(|e| e.to_string())? {
            return Err(format!("n={n}: not reported {n}-solvable"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 30.0 {
        return Err(format!("runtime {elapsed:?} exceeds 30 s"));
    }
    Ok(format!("orders n! and k-solvability thresholds at k = n for n = 5..8, {elapsed:?}"))
}

// ---------- criterion 3: Ritt classification ----------

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly {
    let mut coeffs: Vec<_> = (0..deg).map(|_| rat(rng.gen_range(-3..=3))).collect();
    coeffs.push(rat(1));
    UniPoly::new(coeffs)
}

/// 50 random monic polynomials (seed 42) whose radical classification
/// succeeds; degenerate draws (multiple critical values colliding) are
/// redrawn, cross-check mismatches are collected.
fn ritt_corpus(tol: &ToleranceConfig) -> Result<Vec<(UniPoly, VerdictStatus)>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut out = Vec::new();
    let mut mismatches = 0usize;
    let mut attempts = 0usize;
    while out.len() < 50 {
        attempts += 1;
        if attempts > 2000 {
            return Err("corpus generation stalled".into());
        }
        let deg = rng.gen_range(2..=6);
        let p = random_poly(&mut rng, deg);
        match invertible_by_radicals(&p, tol) {
            Ok(r) => out.push((p, r.verdict.status)),
            Err(finiterm::ritt::RittError::CrossCheckMismatch { .. }) => mismatches += 1,
            Err(_) => {} // degenerate draw, resample
        }
    }
    if mismatches != 0 {
        return Err(format!("{mismatches} cross-check mismatches over the corpus"));
    }
    Ok(out)
}

fn criterion_3() -> Result<String, String> {
    let t = tol();
    // z^8: power tower, representable.
    let z8 = UniPoly::monomial(rat(1), 8);
    let r = invertible_by_radicals(&z8, &t).map_err(|e| e.to_string())?;
    let cert = r.certificate.ok_or("z^8 lacks a radical certificate")?;
    if !r.decompositions[cert]
        .tags
        .iter()
        .all(|tag| matches!(tag, ComponentTag::PowerUpToLinear(_)))
    {
        return Err("z^8 components not all powers".into());
    }
    // T6: Chebyshev/power components, representable.
    let r = invertible_by_radicals(&chebyshev_poly(6), &t).map_err(|e| e.to_string())?;
    if r.verdict.status != VerdictStatus::Representable {
        return Err("T6 not representable".into());
    }
    let cert = r.certificate.ok_or("T6 lacks a radical certificate")?;
    if !r.decompositions[cert].tags.iter().all(|tag| {
        matches!(
            tag,
            ComponentTag::ChebyshevUpToLinear(_) | ComponentTag::PowerUpToLinear(_)
        )
    }) {
        return Err("T6 components not Chebyshev/power".into());
    }
    // z^5 - z + 1: unsolvable S5, representable only at k = 5.
    let p5 = UniPoly::from_i64(&[1, -1, 0, 0, 0, 1]);
    let r = invertible_by_radicals(&p5, &t).map_err(|e| e.to_string())?;
    if r.verdict.status != VerdictStatus::StronglyNonRepresentable || r.group_solvable {
        return Err("z^5 - z + 1 misclassified as radical-invertible".into());
    }
    let g = finiterm::ritt::inverse_monodromy(&p5, &t)
        .map_err(|e| e.to_string())?
        .group;
    if g.order() != BigUint::from(120u32) {
        return Err(format!("z^5 - z + 1 group order {} ≠ 120", g.order()));
    }
    let k5 = invertible_by_k_radicals(&p5, 5, &t).map_err(|e| e.to_string())?;
    if k5.verdict.status != VerdictStatus::Representable {
        return Err("z^5 - z + 1 not representable by 5-radicals".into());
    }
    // A random quartic is always representable.
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let quartic = loop {
        let p = random_poly(&mut rng, 4);
        if let Ok(r) = invertible_by_radicals(&p, &t) {
            break r;
        }
    };
    if quartic.verdict.status != VerdictStatus::Representable {
        return Err("random quartic not representable".into());
    }
    let corpus = ritt_corpus(&t)?;
    Ok(format!(
        "z^8, T6, z^5-z+1, random quartic as expected; {} corpus polynomials, 0 mismatches",
        corpus.len()
    ))
}

// ---------- criterion 4: Fuchsian numerics ----------

fn sl2_system(eps: f64) -> FuchsianSystem {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    let mut e = CMatrix::zeros(2, 2);
    e[(0, 1)] = o * eps;
    let mut f = CMatrix::zeros(2, 2);
    f[(1, 0)] = o * eps;
    FuchsianSystem::new(vec![z, o], vec![e, f]).unwrap()
}

fn upper_triangular_system() -> FuchsianSystem {
    let mut a = CMatrix::zeros(2, 2);
    a[(0, 0)] = Complex64::new(0.3, 0.0);
    a[(0, 1)] = Complex64::new(1.0, 0.0);
    a[(1, 1)] = Complex64::new(-0.1, 0.0);
    let mut b = CMatrix::zeros(2, 2);
    b[(0, 0)] = Complex64::new(0.2, 0.0);
    b[(0, 1)] = Complex64::new(0.5, 0.0);
    b[(1, 1)] = Complex64::new(0.4, 0.0);
    FuchsianSystem::new(
        vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        vec![a, b],
    )
    .unwrap()
}

fn det2(m: &CMatrix) -> Complex64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

fn local_exponent_error(sys: &FuchsianSystem, t: &ToleranceConfig) -> Result<f64, String> {
    let mon = fuchsian_monodromy(sys, t).map_err(|e| e.to_string())?;
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    let mut worst = 0.0f64;
    for (k, &target) in mon.skeleton.targets.iter().enumerate() {
        let local = matrix_exp(&(&sys.residues[target] * two_pi_i));
        worst = worst.max(frobenius(&(&mon.matrices[k] - local)));
    }
    Ok(worst)
}

fn criterion_4() -> Result<String, String> {
    let start = Instant::now();
    let t = tol();
    // (a) determinants from traces.
    let sys = sl2_system(1e-2);
    let mon = fuchsian_monodromy(&sys, &t).map_err(|e| e.to_string())?;
    let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
    for (k, &target) in mon.skeleton.targets.iter().enumerate() {
        let tr = sys.residues[target].trace();
        let expected = (two_pi_i * tr).exp();
        let det = det2(&mon.matrices[k]);
        if (det - expected).norm() > 1e-8 || (det - Complex64::new(1.0, 0.0)).norm() > 1e-8 {
            return Err(format!("det M_{k} = {det}, expected exp(2πi·tr) = {expected}"));
        }
    }
    // (b) quadratic decay of the local-exponent error.
    let errs = [
        local_exponent_error(&sl2_system(1e-2), &t)?,
        local_exponent_error(&sl2_system(5e-3), &t)?,
        local_exponent_error(&sl2_system(2.5e-3), &t)?,
    ];
    for w in errs.windows(2) {
        let ratio = w[0] / w[1];
        if !(2.8..=5.7).contains(&ratio) {
            return Err(format!("decay ratio {ratio} outside [2.8, 5.7] (errors {errs:?})"));
        }
    }
    // (c) triangularizability and the smallness-dependent verdict.
    let cls = classify_fuchsian(&sys, true, 8, &t).map_err(|e| e.to_string())?;
    if cls.triangularizable || cls.lie.dim() != 3 {
        return Err(format!(
            "sl2 system: triangularizable={}, lie dim {}",
            cls.triangularizable,
            cls.lie.dim()
        ));
    }
    if cls.verdicts[0].status != VerdictStatus::StronglyNonRepresentable
        || cls.verdicts[0].class != RepresentabilityClass::GeneralizedQuadratures
    {
        return Err("sl2 with --assume-small not StronglyNonRepresentable(GeneralizedQuadratures)".into());
    }
    let upper = upper_triangular_system();
    let ucls = classify_fuchsian(&upper, false, 8, &t).map_err(|e| e.to_string())?;
    if ucls.verdicts[0].status != VerdictStatus::Representable {
        return Err("upper-triangular system not representable".into());
    }
    let umon = fuchsian_monodromy(&upper, &t).map_err(|e| e.to_string())?;
    for (k, m) in umon.matrices.iter().enumerate() {
        if m[(1, 0)].norm() > 1e-7 {
            return Err(format!("M_{k} not upper-triangular: |m21| = {:e}", m[(1, 0)].norm()));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 10.0 {
        return Err(format!("runtime {elapsed:?} exceeds 10 s"));
    }
    Ok(format!(
        "det identities within 1e-8, decay ratios {:.2}/{:.2}, verdicts as expected, {elapsed:?}",
        errs[0] / errs[1],
        errs[1] / errs[2]
    ))
}

// ---------- criterion 5: loop identities ----------

fn random_monic_bipoly(rng: &mut ChaCha8Rng, deg_y: usize) -> BiPoly {
    let mut rows: Vec<UniPoly> = (0..deg_y)
        .map(|_| {
            UniPoly::new(vec![
                ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2)),
                ratio(rng.gen_range(-2..=2), 1),
            ])
        })
        .collect();
    rows.push(UniPoly::from_i64(&[1]));
    BiPoly::new(rows)
}

fn criterion_5() -> Result<String, String> {
    let t = tol();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0usize;
    let mut attempts = 0usize;
    while checked < 100 {
        attempts += 1;
        if attempts > 2000 {
            return Err("random polynomial generation stalled".into());
        }
        let deg = if rng.gen_bool(0.5) { 3 } else { 4 };
        let f = random_monic_bipoly(&mut rng, deg);
        let report = match monodromy(&f, &t) {
            Ok(r) => r,
            Err(_) => continue, // degenerate draw
        };
        let n = report.branch.n_sheets;
        let product = report
            .permutations
            .iter()
            .fold(Permutation::identity(n), |acc, p| acc.then(p));
        if product.then(&report.infinity_permutation) != Permutation::identity(n) {
            return Err(format!("loop identity violated for {f:?}"));
        }
        checked += 1;
    }
    // Fuchsian side: ΣA = 0 forces ordered product = I.
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for n_poles in [2usize, 3] {
        let poles: Vec<Complex64> = (0..n_poles)
            .map(|k| Complex64::new(k as f64, if k % 2 == 0 { 0.0 } else { 0.5 }))
            .collect();
        let mut residues: Vec<CMatrix> = (0..n_poles - 1)
            .map(|_| {
                CMatrix::from_fn(2, 2, |_, _| {
                    Complex64::new(rng.gen_range(-0.2..0.2), rng.gen_range(-0.2..0.2))
                })
            })
            .collect();
        let minus_sum = residues
            .iter()
            .fold(CMatrix::zeros(2, 2), |acc, a| acc + a)
            * Complex64::new(-1.0, 0.0);
        residues.push(minus_sum);
        let sys = FuchsianSystem::new(poles, residues).unwrap();
        let mon = fuchsian_monodromy(&sys, &tol()).map_err(|e| e.to_string())?;
        let residual = frobenius(&(mon.ordered_product() - identity(2)));
        if residual > 1e-7 {
            return Err(format!("{n_poles}-pole ΣA=0 product residual {residual:e} > 1e-7"));
        }
    }
    Ok(format!("{checked} random cubics/quartics and ΣA=0 Fuchsian products, zero failures"))
}

// ---------- criterion 6: polygons ----------

fn criterion_6() -> Result<String, String> {
    let t = tol();
    let cases = [
        (fixtures::straight_quadrilateral(), "case1"),
        (fixtures::annular_quadrilateral(), "case2"),
        (fixtures::tetrahedral_triangle(), "case3:Tetrahedral"),
        (fixtures::vanishing_angle_triangle(), "none"),
    ];
    for (poly, expected) in &cases {
        let cls = classify_polygon(poly, &t);
        let tag = cls.verdict.evidence.polygon_case.as_deref().unwrap_or("?");
        if tag != *expected {
            return Err(format!("expected {expected}, got {tag}"));
        }
    }
    // Pinned fixture facts.
    let annular = classify_polygon(&fixtures::annular_quadrilateral(), &t);
    let (p, q) = annular.symmetric_pair.ok_or("annular pair missing")?;
    if !p.approx_eq(&finiterm::polygonmap::CPoint::Finite(Complex64::new(0.0, 0.0)), 1e-9)
        || q != finiterm::polygonmap::CPoint::Infinity
    {
        return Err(format!("annular pair ({p}, {q}) ≠ (0, ∞)"));
    }
    match reflection_group_closure(&fixtures::tetrahedral_triangle(), CLOSURE_BOUND, &t) {
        ClosureReport::Finite {
            orientation_order,
            tag,
            ..
        } => {
            if orientation_order != 12 || tag != NetTag::Tetrahedral {
                return Err(format!("tetrahedral net: orient {orientation_order}, tag {tag:?}"));
            }
        }
        ClosureReport::ExceedsBound => return Err("tetrahedral closure did not stabilize".into()),
    }
    let vanish = classify_polygon(&fixtures::vanishing_angle_triangle(), &t);
    if vanish.verdict.status != VerdictStatus::StronglyNonRepresentable {
        return Err("vanishing-angle triangle not strongly non-representable".into());
    }
    // Möbius invariance, seed 42.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for (poly, expected) in &cases {
        let moved = loop {
            let mut draw = || Complex64::new(rng.gen_range(-3..=3i32) as f64, 0.0);
            let m = nalgebra::Matrix2::new(draw(), draw(), draw(), draw());
            if (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).norm() < 0.5 {
                continue;
            }
            if let Some(p) = fixtures::transform_polygon(poly, &m) {
                break p;
            }
        };
        let cls = classify_polygon(&moved, &t);
        let tag = cls.verdict.evidence.polygon_case.as_deref().unwrap_or("?");
        if tag != *expected {
            return Err(format!("Möbius image of {expected} classified as {tag}"));
        }
    }
    Ok("four fixtures and their Möbius images classified as expected".into())
}

// ---------- criterion 7: brute-force oracle ----------

fn bf_elements(degree: usize, gens: &[Permutation]) -> HashSet<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(Permutation::identity(degree).images().to_vec());
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
    while let Some(e) = frontier.pop() {
        for g in gens {
            let next = e.then(g);
            if seen.insert(next.images().to_vec()) {
                frontier.push(next);
            }
        }
    }
    seen
}

/// Derived subgroup from element arithmetic only: normal closure of the
/// generator commutators, conjugating by the parent's generators.
fn bf_derived_gens(degree: usize, gens: &[Permutation], parent: &[Permutation]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier: Vec<Permutation> = Vec::new();
    for a in gens {
        for b in gens {
            let c = a.commutator(b);
            if seen.insert(c.images().to_vec()) {
                frontier.push(c.clone());
                out.push(c);
            }
        }
    }
    while let Some(h) = frontier.pop() {
        for g in parent {
            let c = h.conjugated_by(g);
            if seen.insert(c.images().to_vec()) {
                frontier.push(c.clone());
                out.push(c);
            }
        }
        let _ = degree;
    }
    out
}

fn bf_is_solvable(degree: usize, gens: &[Permutation]) -> bool {
    let mut current: Vec<Permutation> = gens.to_vec();
    let mut last_order = bf_elements(degree, &current).len();
    loop {
        if last_order == 1 {
            return true;
        }
        let next = bf_derived_gens(degree, &current, &current);
        let order = if next.is_empty() {
            1
        } else {
            bf_elements(degree, &next).len()
        };
        if order == last_order {
            return false; // perfect
        }
        current = next;
        last_order = order;
    }
}

fn check_against_oracle(group: &PermutationGroup) -> Result<(), String> {
    let degree = group.degree();
    let gens = group.generators();
    let elements = bf_elements(degree, gens);
    let order = group
        .order_u64()
        .ok_or_else(|| "order exceeds u64".to_string())?;
    if order as usize != elements.len() {
        return Err(format!("order {} vs enumerated {}", order, elements.len()));
    }
    let solvable = is_solvable(group);
    let bf_solvable = bf_is_solvable(degree, gens);
    if solvable != bf_solvable {
        return Err(format!("solvability {solvable} vs brute-force {bf_solvable}"));
    }
    let signature = composition_factor_signature(group).map_err(|e| e.to_string())?;
    let product: u64 = signature
        .factors
        .iter()
        .map(|f| match f {
            CompositionFactor::CyclicOfPrime(p) => *p,
            CompositionFactor::NonabelianSimple { order, .. } => *order,
        })
        .product();
    if product != order {
        return Err(format!("factor orders multiply to {product} ≠ {order}"));
    }
    let all_cyclic = signature
        .factors
        .iter()
        .all(|f| matches!(f, CompositionFactor::CyclicOfPrime(_)));
    if all_cyclic != bf_solvable {
        return Err("signature cyclicity disagrees with brute-force solvability".into());
    }
    Ok(())
}

fn criterion_7() -> Result<String, String> {
    let mut groups: Vec<PermutationGroup> = Vec::new();
    groups.push(classify_algebraic(&quintic(), 8, &tol()).map_err(|e| e.to_string())?.report.group);
    for (_, g) in family_groups()? {
        groups.push(g);
    }
    for (p, _) in ritt_corpus(&tol())? {
        if p.degree() >= 2 {
            if let Ok(report) = finiterm::ritt::inverse_monodromy(&p, &tol()) {
                groups.push(report.group);
            }
        }
    }
    let mut checked = 0usize;
    let mut seen: HashSet<(usize, u64)> = HashSet::new();
    for g in &groups {
        let Some(order) = g.order_u64() else { continue };
        if order > 10_000 || !seen.insert((g.degree(), order)) {
            continue;
        }
        check_against_oracle(g).map_err(|e| format!("degree {} order {}: {e}", g.degree(), order))?;
        checked += 1;
    }
    Ok(format!("{checked} distinct groups of order ≤ 10^4 agree with brute-force enumeration"))
}

// ---------- criterion 8: stability under tolerance tightening ----------

fn criterion_8() -> Result<String, String> {
    let tight = tol().tightened(10.0);
    // Criterion 1 verdicts.
    let base = classify_algebraic(&quintic(), 8, &tol()).map_err(|e| e.to_string())?;
    let refined = classify_algebraic(&quintic(), 8, &tight).map_err(|e| e.to_string())?;
    for (a, b) in base.verdicts.iter().zip(&refined.verdicts) {
        if a.class != b.class || a.status != b.status {
            return Err(format!("quintic verdict changed: {a:?} vs {b:?}"));
        }
    }
    // Criterion 2 booleans.
    for n in 5..=8usize {
        let mut coeffs = vec![0i64; n + 1];
        coeffs[1] = 1;
        coeffs[n] = 1;
        let f = BiPoly::from_inverse_of(&UniPoly::from_i64(&coeffs));
        let g = monodromy(&f, &tight).map_err(|e| format!("n={n}: {e}"))?.group;
        if g.order() != factorial(n)
            || is_k_solvable(&g, n - 1).map_err(|e| e.to_string())?
            || !is_k_solvable(&g, n).map_err(|e| e.to_string())?
        {
            return Err(format!("n={n}: family verdicts changed under tightening"));
        }
    }
    // Criterion 3 named cases and corpus statuses.
    let named = [
        UniPoly::monomial(rat(1), 8),
        chebyshev_poly(6),
        UniPoly::from_i64(&[1, -1, 0, 0, 0, 1]),
    ];
    for p in &named {
        let a = invertible_by_radicals(p, &tol()).map_err(|e| e.to_string())?;
        let b = invertible_by_radicals(p, &tight).map_err(|e| e.to_string())?;
        if a.verdict.status != b.verdict.status {
            return Err(format!("{p:?}: status changed under tightening"));
        }
    }
    let base_corpus = ritt_corpus(&tol())?;
    let tight_corpus = ritt_corpus(&tight)?;
    for ((p, a), (q, b)) in base_corpus.iter().zip(&tight_corpus) {
        if p != q {
            return Err("corpus draw not deterministic".into());
        }
        if a != b {
            return Err(format!("{p:?}: corpus status changed under tightening"));
        }
    }
    Ok("criteria 1-3 verdicts unchanged at 10× tighter tolerances".into())
}

// ---------- criterion 9: stabilizer probe ----------

fn criterion_9() -> Result<String, String> {
    let sys = sl2_system(1e-2);
    let mon = fuchsian_monodromy(&sys, &tol()).map_err(|e| e.to_string())?;
    let moving: Vec<&CMatrix> = mon
        .matrices
        .iter()
        .filter(|m| frobenius(&(*m - identity(2))) > 1e-8)
        .collect();
    if moving.is_empty() {
        return Err("no non-identity generators to probe".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for trial in 0..100 {
        let mut v = nalgebra::DVector::from_fn(2, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        let norm = v.norm();
        if norm == 0.0 {
            continue;
        }
        v /= Complex64::new(norm, 0.0);
        for m in &moving {
            let moved = (*m) * &v;
            if (&moved - &v).norm() <= 1e-6 {
                return Err(format!("trial {trial}: vector fixed within 1e-6"));
            }
        }
    }
    Ok("100 probe vectors all moved by every non-identity generator".into())
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Result<String, String>)> = vec![
        ("criterion 1 (quintic)", criterion_1),
        ("criterion 2 (y^n+y-x family)", criterion_2),
        ("criterion 3 (Ritt)", criterion_3),
        ("criterion 4 (Fuchsian numerics)", criterion_4),
        ("criterion 5 (loop identities)", criterion_5),
        ("criterion 6 (polygons)", criterion_6),
        ("criterion 7 (brute-force oracle)", criterion_7),
        ("criterion 8 (tolerance stability)", criterion_8),
        ("criterion 9 (stabilizer probe)", criterion_9),
    ];
    let mut failures = 0usize;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("{name}: PASS — {detail}"),
            Err(detail) => {
                failures += 1;
                println!("{name}: FAIL — {detail}");
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
