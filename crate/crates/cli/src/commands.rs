use std::fs;
use std::path::Path;
use std::sync::Arc;

use polind_core::groups::{DiagonalAction, GroupSpec, MatrixGroup};
use polind_core::nullcone::{
    binary_form_nullcone_member, binary_nullcone_witness, brute_force_cocharacter, pairs_positively,
    torus_nullcone_member, v_gamma, BinaryForm, WeightSystem,
};
use polind_core::polarization::{
    classical_invariants, compare_graded_dims, membership as span_membership, polarization_identity_holds,
    polarize as polarize_poly, GeneratorSet,
};
use polind_core::poly::{infer_layout, parse_poly, parse_poly_in, MultiDegree, VariableLayout};
use polind_core::random::{rng, small_vector};
use polind_core::{int, parse_rational, Poly, Rational};
use serde_json::{json, Value};

use crate::report::{Check, Report};
use crate::{CliError, CliResult, Config};

const IDENTITY_TRIALS: usize = 5;
const BOX_BOUND: i64 = 20;
const BOX_MAX_RANK: usize = 3;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Non-empty lines with `#` comments removed.
fn content_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
        .filter(|l| !l.is_empty())
        .collect()
}

fn read_poly_text(path: &Path) -> CliResult<String> {
    let lines = content_lines(&read(path)?);
    if lines.is_empty() {
        return Err(CliError::Input(format!("{}: no polynomial found", path.display())));
    }
    Ok(lines.join(" "))
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub(crate) fn polarize(cfg: &Config, path: &Path, copies: usize) -> CliResult<Report> {
    if copies == 0 {
        return Err(CliError::Input("--copies must be at least 1".into()));
    }
    let f = parse_poly(&read_poly_text(path)?)?;
    let components = polarize_poly(&f, copies)?;
    let m = f.layout().vars_per_block();
    let mut r = rng(cfg.seed);
    let mut holds = 0;
    for _ in 0..IDENTITY_TRIALS {
        let points: Vec<Vec<Rational>> = (0..copies).map(|_| small_vector(&mut r, m, 9)).collect();
        let scalars = small_vector(&mut r, copies, 9);
        if polarization_identity_holds(&f, copies, &points, &scalars)? {
            holds += 1;
        }
    }
    let data = json!({
        "input": f.to_string(),
        "copies": copies,
        "components": components
            .iter()
            .map(|(d, p)| json!({ "multidegree": d.0, "poly": p.to_string() }))
            .collect::<Vec<_>>(),
    });
    let checks = vec![Check::new(
        "polarization_identity",
        holds == IDENTITY_TRIALS,
        format!("{holds}/{IDENTITY_TRIALS} seeded (point, scalar) draws satisfy the expansion exactly"),
    )];
    Ok(Report::new(cfg.command.clone(), cfg.seed, cfg.caps, checks, data))
}

fn load_group(cfg: &Config, path: &Path) -> CliResult<(GroupSpec, MatrixGroup)> {
    let spec = GroupSpec::from_json(&read(path)?)?;
    let group = spec.build(cfg.caps.group_order)?;
    Ok((spec, group))
}

fn group_data(spec: &GroupSpec, group: &MatrixGroup, copies: usize) -> Value {
    let name = spec
        .builtin
        .as_ref()
        .map(|b| format!("{}{}", b.family, b.m))
        .unwrap_or_else(|| "custom".into());
    json!({ "group": name, "order": group.order(), "dim": group.dim(), "copies": copies })
}

pub(crate) fn invariant_dims(cfg: &Config, path: &Path, copies: usize, max_degree: u32) -> CliResult<Report> {
    let (spec, group) = load_group(cfg, path)?;
    let mut data = group_data(&spec, &group, copies);
    let action = DiagonalAction::new(Arc::new(group), copies)?;
    let rows = MultiDegree::all_up_to(copies, max_degree)
        .into_iter()
        .map(|d| {
            let dim = action.invariant_dimension(&d, cfg.caps.monomials)?;
            Ok(json!({ "multidegree": d.0, "dim_invariants": dim }))
        })
        .collect::<CliResult<Vec<_>>>()?;
    data["rows"] = Value::from(rows);
    Ok(Report::new(cfg.command.clone(), cfg.seed, cfg.caps, Vec::new(), data))
}

/// Generators of `k[V]^G`: the classical ones for built-in families, or
/// the `"invariants"` listed in a custom spec.
fn ring_generators(spec: &GroupSpec, dim: usize) -> CliResult<Vec<Poly>> {
    if let Some(b) = &spec.builtin {
        return Ok(classical_invariants(b.family, b.m));
    }
    let texts = spec.invariants.as_ref().ok_or_else(|| {
        CliError::Input("comparing a custom group needs \"invariants\" generating its invariant ring".into())
    })?;
    texts
        .iter()
        .map(|t| Ok(parse_poly_in(t, VariableLayout::single(dim))?))
        .collect()
}

pub(crate) fn compare(cfg: &Config, path: &Path, copies: usize, max_degree: u32) -> CliResult<Report> {
    let (spec, group) = load_group(cfg, path)?;
    let invariants = ring_generators(&spec, group.dim())?;
    let mut data = group_data(&spec, &group, copies);
    let action = DiagonalAction::new(Arc::new(group), copies)?;
    let rows = compare_graded_dims(&action, &invariants, max_degree, &cfg.caps)?;
    let unequal: Vec<String> = rows
        .iter()
        .filter(|r| !r.equal())
        .map(|r| format!("{} ({} vs {})", MultiDegree(r.multidegree.clone()), r.dim_invariants, r.dim_pol_span))
        .collect();
    data["max_degree"] = json!(max_degree);
    data["rows"] = serde_json::to_value(&rows).expect("rows serialize");
    let detail = if unequal.is_empty() {
        format!("all {} multidegrees of total degree ≤ {max_degree} agree", rows.len())
    } else {
        format!("gaps at {}", unequal.join(", "))
    };
    let checks = vec![Check::new("all_rows_equal", unequal.is_empty(), detail)];
    Ok(Report::new(cfg.command.clone(), cfg.seed, cfg.caps, checks, data))
}

pub(crate) fn membership(cfg: &Config, poly_path: &Path, gens_path: &Path) -> CliResult<Report> {
    let target_text = read_poly_text(poly_path)?;
    let gen_texts = content_lines(&read(gens_path)?);
    if gen_texts.is_empty() {
        return Err(CliError::Input(format!("{}: no generators found", gens_path.display())));
    }
    let mut all = vec![target_text.clone()];
    all.extend(gen_texts.iter().cloned());
    let layout = infer_layout(&all.join(" + "))?;
    let f = parse_poly_in(&target_text, layout)?;
    let polys = gen_texts
        .iter()
        .map(|t| Ok(parse_poly_in(t, layout)?))
        .collect::<CliResult<Vec<_>>>()?;
    let gens = GeneratorSet::new(layout, polys)?;
    let cert = span_membership(&f, &gens, cfg.caps.span_products)?;
    let mut checks = Vec::new();
    if let Some(c) = &cert {
        let ok = c.reconstruct(&gens) == f;
        checks.push(Check::new(
            "certificate_reconstructs",
            ok,
            format!("{} product terms expand back to the input", c.terms.len()),
        ));
    }
    let data = json!({
        "target": f.to_string(),
        "multidegree": f.multidegree().map(|d| d.0),
        "generators": gens
            .generators()
            .iter()
            .map(|g| json!({ "poly": g.poly.to_string(), "multidegree": g.degree.0 }))
            .collect::<Vec<_>>(),
        "member": cert.is_some(),
        "certificate": cert,
    });
    Ok(Report::new(cfg.command.clone(), cfg.seed, cfg.caps, checks, data))
}

fn parse_vector(text: &str) -> CliResult<Vec<Rational>> {
    text.split(',')
        .map(|t| parse_rational(t).ok_or_else(|| CliError::Input(format!("bad vector entry {:?}", t.trim()))))
        .collect()
}

pub(crate) fn nullcone_torus(cfg: &Config, path: &Path, vector: &str) -> CliResult<Report> {
    let ws = WeightSystem::from_json(&read(path)?)?;
    let v = parse_vector(vector)?;
    let gamma = torus_nullcone_member(&ws, &v)?;
    let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] != int(0)).collect();
    let support_weights: Vec<Vec<i64>> = support.iter().map(|&i| ws.weights[i].clone()).collect();
    let mut checks = Vec::new();
    let mut data = json!({
        "torus_rank": ws.torus_rank,
        "vector": strings(&v),
        "support": support,
        "member": gamma.is_some(),
        "gamma": gamma.as_ref().map(|g| g.gamma.clone()),
    });
    if let Some(g) = &gamma {
        let vg = v_gamma(&ws, g);
        let sound = support_weights.iter().all(|w| pairs_positively(&g.gamma, w)) && support.iter().all(|i| vg.contains(i));
        checks.push(Check::new("cocharacter_contracts_vector", sound, "vector lies in V(gamma)"));
        data["v_gamma"] = json!(vg);
    }
    if ws.torus_rank <= BOX_MAX_RANK {
        let brute = brute_force_cocharacter(&support_weights, ws.torus_rank, BOX_BOUND);
        checks.push(Check::new(
            "box_search_agrees",
            brute.is_some() == gamma.is_some(),
            format!("exhaustive search over [-{BOX_BOUND}, {BOX_BOUND}]^{}", ws.torus_rank),
        ));
    }
    Ok(Report::new(cfg.command.clone(), cfg.seed, cfg.caps, checks, data))
}

pub(crate) fn nullcone_binary(cfg: &Config, path: &Path) -> CliResult<Report> {
    let f = BinaryForm::from_json(&read(path)?)?;
    let member = binary_form_nullcone_member(&f)?;
    let mut checks = Vec::new();
    let mut data = json!({
        "degree": f.degree(),
        "form": f.to_poly().to_string(),
        "critical_multiplicity": f.critical_multiplicity(),
        "member": member,
        "witness": Value::Null,
    });
    if member && !f.is_zero() {
        let witness = binary_nullcone_witness(&f)?;
        let divides = match &witness {
            Some(l) => f.to_poly().div_exact(&l.pow(f.critical_multiplicity()))?.is_some(),
            None => false,
        };
        checks.push(Check::new(
            "witness_power_divides",
            divides,
            format!("l^{} divides the form", f.critical_multiplicity()),
        ));
        data["witness"] = json!(witness.map(|l| l.to_string()));
    }
    Ok(Report::new(cfg.command.clone(), cfg.seed, cfg.caps, checks, data))
}
