//! Subcommand drivers: run a classifier, collect intermediates, and emit a
//! report that is byte-identical for a fixed input, config, and version.

use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use super::config::{OutputFormat, RunConfig};
use super::parse::{parse_complex, parse_polynomial, polynomial_to_string, ParsedPoly};
use super::CliError;
use crate::algmono::classify_algebraic;
use crate::fuchsian::{classify_fuchsian, generic_stabilizer_probe, FuchsianSystem};
use crate::numkernel::CMatrix;
use crate::permgrp::composition_factor_signature;
use crate::polygonmap::{classify_polygon, ClosureReport, GenCircle, PolygonSpec, Side};
use crate::ritt::{invertible_by_k_radicals, invertible_by_radicals};
use crate::verdict::{Verdict, VerdictStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Clone, Debug, serde::Serialize)]
pub struct Report {
    pub input: String,
    pub intermediates: Value,
    pub verdicts: Vec<Verdict>,
    pub config: RunConfig,
    pub version: String,
}

impl Report {
    fn assemble(input: String, intermediates: Value, verdicts: Vec<Verdict>, cfg: &RunConfig) -> Self {
        Report {
            input,
            intermediates,
            verdicts,
            config: cfg.clone(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// 2 is reserved for runs whose every verdict is open.
    pub fn exit_code(&self) -> i32 {
        if self.verdicts.is_empty() {
            EXIT_ERROR
        } else if self
            .verdicts
            .iter()
            .all(|v| v.status == VerdictStatus::Inconclusive)
        {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("input: {}\n", self.input));
        if let Value::Object(map) = &self.intermediates {
            for (k, v) in map {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        out.push_str("verdicts:\n");
        for v in &self.verdicts {
            out.push_str(&format!("  {}: {} — {}\n", v.class, v.status, v.reason));
        }
        out.push_str(&format!("version: {}\n", self.version));
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

fn cstr(z: Complex64) -> String {
    format!("{z}")
}

pub fn run_algebraic(poly_text: &str, cfg: &RunConfig) -> Result<Report, CliError> {
    let f = match parse_polynomial(poly_text)? {
        ParsedPoly::Bi(f) => f,
        ParsedPoly::Uni(_) => {
            return Err(CliError::BadInput(
                "the algebraic classifier needs a bivariate equation f(x, y) = 0".into(),
            ))
        }
    };
    let cls = classify_algebraic(&f, cfg.kmax, &cfg.tol)?;
    let r = &cls.report;
    let signature = composition_factor_signature(&r.group)
        .map(|s| s.to_string())
        .unwrap_or_else(|e| format!("unavailable ({e})"));
    let intermediates = json!({
        "echo": polynomial_to_string(&ParsedPoly::Bi(f.clone())),
        "n_sheets": r.branch.n_sheets,
        "branch_points": r.branch.branch_points.iter().map(|&b| cstr(b)).collect::<Vec<_>>(),
        "base_point": cstr(r.branch.base_point),
        "generators": r.permutations.iter().map(|p| p.cycle_notation()).collect::<Vec<_>>(),
        "infinity_permutation": r.infinity_permutation.cycle_notation(),
        "group_order": r.group.order().to_string(),
        "factor_signature": signature,
        "transitive": r.transitive,
        "stabilized_point": r.pair.as_ref().map(|p| p.stabilized_point),
        "stabilizer_order": r.pair.as_ref().map(|p| p.stabilizer.order().to_string()),
    });
    Ok(Report::assemble(
        poly_text.to_string(),
        intermediates,
        cls.verdicts,
        cfg,
    ))
}

pub fn run_invert_poly(
    poly_text: &str,
    k: Option<usize>,
    cfg: &RunConfig,
) -> Result<Report, CliError> {
    let p = match parse_polynomial(poly_text)? {
        ParsedPoly::Uni(p) => p,
        ParsedPoly::Bi(_) => {
            return Err(CliError::BadInput(
                "invert-poly needs a univariate polynomial in z".into(),
            ))
        }
    };
    if p.is_constant() {
        return Err(CliError::BadInput("constant polynomials have no inverse".into()));
    }
    let radical = invertible_by_radicals(&p, &cfg.tol)?;
    let mut verdicts = vec![radical.verdict.clone()];
    let mut k_value = Value::Null;
    if let Some(k) = k {
        let kr = invertible_by_k_radicals(&p, k, &cfg.tol)?;
        k_value = json!({
            "k": k,
            "component_passes": kr.component_passes,
            "exceptional_components": kr.exceptional_components,
        });
        verdicts.push(kr.verdict);
    }
    let intermediates = json!({
        "echo": p.display_with_var("z"),
        "degree": p.degree(),
        "decompositions": radical.decompositions.iter().map(|d| json!({
            "components": d.components.iter().map(|c| c.display_with_var("z")).collect::<Vec<_>>(),
            "tags": d.tags.iter().map(|t| format!("{t:?}")).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "radical_certificate": radical.certificate,
        "group_solvable": radical.group_solvable,
        "k_report": k_value,
    });
    Ok(Report::assemble(poly_text.to_string(), intermediates, verdicts, cfg))
}

#[derive(Deserialize)]
struct FuchsianInput {
    poles: Vec<String>,
    residues: Vec<Vec<Vec<String>>>,
}

fn matrix_from_rows(rows: &[Vec<String>]) -> Result<CMatrix, CliError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::BadInput("residue matrices must be square".into()));
    }
    let mut m = CMatrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m[(i, j)] = parse_complex(s)?;
        }
    }
    Ok(m)
}

pub fn run_fuchsian(file_text: &str, cfg: &RunConfig) -> Result<Report, CliError> {
    let input: FuchsianInput = serde_json::from_str(file_text)?;
    let poles = input
        .poles
        .iter()
        .map(|s| parse_complex(s))
        .collect::<Result<Vec<_>, _>>()?;
    let residues = input
        .residues
        .iter()
        .map(|rows| matrix_from_rows(rows))
        .collect::<Result<Vec<_>, _>>()?;
    let sys = FuchsianSystem::new(poles, residues)?;
    let cls = classify_fuchsian(&sys, cfg.assume_small, cfg.kmax, &cfg.tol)?;
    let probe = generic_stabilizer_probe(&cls.monodromy, 100, cfg.seed, &cfg.tol);
    let intermediates = json!({
        "poles": sys.poles.iter().map(|&p| cstr(p)).collect::<Vec<_>>(),
        "dimension": sys.dim(),
        "product_residual": cls.monodromy.product_residual,
        "lie_closure_dim": cls.lie.dim(),
        "lie_derived_dims": cls.lie.derived_dims,
        "triangularizable": cls.triangularizable,
        "stabilizer_probe": {
            "trials": probe.trials,
            "failures": probe.failures,
            "skipped": probe.skipped,
            "note": probe.note,
        },
    });
    Ok(Report::assemble(file_text.to_string(), intermediates, cls.verdicts, cfg))
}

#[derive(Deserialize)]
struct PolygonInput {
    sides: Vec<SideInput>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum SideInput {
    Circle {
        center: String,
        radius: f64,
        from: String,
        to: String,
    },
    Line {
        p1: String,
        p2: String,
    },
}

pub fn run_polygon(file_text: &str, cfg: &RunConfig) -> Result<Report, CliError> {
    let inputs = serde_json::from_str::<PolygonInput>(file_text)?.sides;
    let mut sides = Vec::with_capacity(inputs.len());
    for s in &inputs {
        sides.push(match s {
            SideInput::Circle {
                center,
                radius,
                from,
                to,
            } => {
                if *radius <= 0.0 {
                    return Err(CliError::BadInput("circle radius must be positive".into()));
                }
                Side {
                    circle: GenCircle::circle(parse_complex(center)?, *radius),
                    endpoints: (parse_complex(from)?, parse_complex(to)?),
                }
            }
            SideInput::Line { p1, p2 } => {
                let (p1, p2) = (parse_complex(p1)?, parse_complex(p2)?);
                Side {
                    circle: GenCircle::line_through(p1, p2),
                    endpoints: (p1, p2),
                }
            }
        });
    }
    let poly = PolygonSpec::new(sides)?;
    let cls = classify_polygon(&poly, &cfg.tol);
    let closure = match &cls.closure {
        ClosureReport::Finite {
            order,
            orientation_order,
            tag,
        } => json!({
            "order": order,
            "orientation_order": orientation_order,
            "net": format!("{tag:?}"),
        }),
        ClosureReport::ExceedsBound => json!("exceeds bound"),
    };
    let intermediates = json!({
        "sides": poly.sides.len(),
        "common_point": cls.common_point.map(|p| p.to_string()),
        "symmetric_pair": cls.symmetric_pair.map(|(p, q)| vec![p.to_string(), q.to_string()]),
        "reflection_closure": closure,
    });
    Ok(Report::assemble(
        file_text.to_string(),
        intermediates,
        vec![cls.verdict],
        cfg,
    ))
}
