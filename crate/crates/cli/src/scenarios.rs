//! Packaged certificate runs.

use std::sync::Arc;

use polind_core::groups::{DiagonalAction, Family, MatrixGroup};
use polind_core::liealg::{certify_sl3, certify_so5, sl2_invariant_dimension};
use polind_core::nullcone::{
    brute_force_cocharacter, pairs_positively, span_probe_nullcone, subspace_in_common_vgamma, torus_nullcone_member,
    v_gamma, SubspaceSpec, WeightSystem, DEFAULT_PROBE_TRIALS,
};
use polind_core::polarization::{
    classical_invariants, compare_graded_dims, membership, polarization_generators, separation_test,
    wallach_operator, GeneratorSet,
};
use polind_core::poly::MultiDegree;
use polind_core::random::{rng, small_vector};
use polind_core::{int, rat, Poly, Rational};
use rand::Rng;
use serde_json::{json, Value};

use crate::report::{Check, Report};
use crate::{CliResult, Config};

const DM_MAX_DEGREE: u32 = 8;
const SEPARATION_TRIALS: usize = 200;
const TORUS_SYSTEMS: usize = 50;
const TORUS_VECTORS: usize = 20;
const TORUS_SUBSPACES: usize = 5;
const TORUS_BOX: i64 = 20;

fn report(cfg: &Config, checks: Vec<Check>, data: Value) -> Report {
    Report::new(cfg.command.clone(), cfg.seed, cfg.caps, checks, data)
}

/// Membership of an invariant in the polarization algebra, with the
/// certificate verified when one is found.
fn member_summary(f: &Poly, gens: &GeneratorSet, cfg: &Config) -> CliResult<(bool, Value)> {
    let cert = membership(f, gens, cfg.caps.span_products)?;
    let verified = cert.as_ref().map(|c| c.reconstruct(gens) == *f);
    let data = json!({
        "poly": f.to_string(),
        "multidegree": f.multidegree().map(|d| d.0),
        "member": cert.is_some(),
        "certificate_terms": cert.as_ref().map(|c| c.terms.len()),
        "certificate_verified": verified,
    });
    Ok((cert.is_some() && verified == Some(true), data))
}

/// `D_4` on two copies: the graded comparison, the strict gap claimed at
/// bidegree (2,2) with `h = P_1 P_1(σ_4)/2`, the gap actually found at
/// (3,3) with `P_3(σ_4)`, integrality of both witnesses, and separation of
/// orbits by polarizations.
pub(crate) fn dm(cfg: &Config) -> CliResult<Report> {
    let group = MatrixGroup::builtin(Family::D, 4)?;
    if group.order() > cfg.caps.group_order {
        return Err(polind_core::Error::CapExceeded {
            what: "group enumeration",
            cap: "group_order",
            limit: cfg.caps.group_order,
        }
        .into());
    }
    let action = DiagonalAction::new(Arc::new(group), 2)?;
    let invariants = classical_invariants(Family::D, 4);
    let gens = polarization_generators(&invariants, 2)?;
    let rows = compare_graded_dims(&action, &invariants, DM_MAX_DEGREE, &cfg.caps)?;
    let row = |d: [u32; 2]| rows.iter().find(|r| r.multidegree == d).expect("row in range").clone();
    let sigma = invariants.last().expect("D4 has sigma4").relabel(action.layout(), |v| v);

    let mut checks = Vec::new();
    let r22 = row([2, 2]);
    checks.push(Check::new(
        "strict_gap_at_2_2",
        r22.dim_pol_span < r22.dim_invariants,
        format!("dim invariants {} vs dim pol span {}", r22.dim_invariants, r22.dim_pol_span),
    ));
    let h = wallach_operator(1, &wallach_operator(1, &sigma)?)?.scale(&rat(1, 2));
    let (h_member, h_data) = member_summary(&h, &gens, cfg)?;
    checks.push(Check::new(
        "h_not_in_pol_span",
        !h_member,
        if h_member {
            "h = P1 P1(sigma4)/2 has a verified certificate, so it is a member"
        } else {
            "no certificate for h = P1 P1(sigma4)/2"
        },
    ));
    let (h2_member, h2_data) = member_summary(&(&h * &h), &gens, cfg)?;
    checks.push(Check::new("h_squared_in_pol_span", h2_member, "certificate for h^2 at (4,4)"));

    let r33 = row([3, 3]);
    checks.push(Check::new(
        "strict_gap_at_3_3",
        r33.dim_pol_span < r33.dim_invariants,
        format!("dim invariants {} vs dim pol span {}", r33.dim_invariants, r33.dim_pol_span),
    ));
    let w = wallach_operator(3, &sigma)?;
    let (w_member, w_data) = member_summary(&w, &gens, cfg)?;
    checks.push(Check::new(
        "p3_sigma4_invariant_not_in_pol_span",
        action.is_invariant(&w)? && !w_member,
        "P3(sigma4) is invariant and has no certificate",
    ));
    let (w2_member, w2_data) = member_summary(&(&w * &w), &gens, cfg)?;
    checks.push(Check::new(
        "p3_sigma4_squared_in_pol_span",
        w2_member,
        "certificate for P3(sigma4)^2 at (6,6)",
    ));

    let sep = separation_test(&action, &gens, SEPARATION_TRIALS, cfg.seed)?;
    checks.push(Check::new(
        "polarizations_separate_orbits",
        sep.passed(),
        format!(
            "{}/{} distinct-orbit pairs separated, {} control failures",
            sep.separated, sep.trials, sep.control_failures
        ),
    ));
    let gaps: Vec<Vec<u32>> = rows.iter().filter(|r| !r.equal()).map(|r| r.multidegree.clone()).collect();
    let data = json!({
        "group": "D4",
        "order": action.group().order(),
        "copies": 2,
        "generator_count": gens.len(),
        "max_degree": DM_MAX_DEGREE,
        "rows": rows,
        "gaps": gaps,
        "h": h_data,
        "h_squared": h2_data,
        "p3_sigma4": w_data,
        "p3_sigma4_squared": w2_data,
        "separation": sep,
    });
    Ok(report(cfg, checks, data))
}

pub(crate) fn so5(cfg: &Config) -> CliResult<Report> {
    let cert = certify_so5(cfg.seed)?;
    let expected_bidegrees: Vec<Vec<u32>> =
        vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![4, 0], vec![3, 1], vec![2, 2], vec![1, 3], vec![0, 4]];
    let checks = vec![
        Check::new(
            "eight_generators_with_expected_bidegrees",
            cert.generator_count == 8 && cert.generator_bidegrees == expected_bidegrees,
            format!("{} generators", cert.generator_count),
        ),
        Check::new(
            "jacobian_rank_at_most_8",
            cert.jacobian_ranks.iter().all(|&r| r <= 8),
            format!("ranks {:?} at seeds {:?}", cert.jacobian_ranks, cert.seeds),
        ),
        Check::new(
            "orbit_dimension_10",
            cert.orbit_dimension == 10,
            format!("orbit dimensions {:?}", cert.orbit_dimensions),
        ),
        Check::new(
            "pol_ind_is_1",
            cert.pol_ind == Some(1),
            format!(
                "rank {} < transcendence degree {}",
                cert.jacobian_rank, cert.invariant_transcendence_degree
            ),
        ),
    ];
    Ok(report(cfg, checks, serde_json::to_value(&cert).expect("certificate serializes")))
}

pub(crate) fn sl3(cfg: &Config) -> CliResult<Report> {
    let cert = certify_sl3(cfg.seed)?;
    let checks = vec![
        Check::new(
            "plane_is_nilpotent",
            cert.nilpotent,
            format!("principal minor sums {:?}", cert.principal_minor_sums),
        ),
        Check::new("bracket_is_diag_1_-2_1", cert.bracket_is_expected, "[e12+e23, e21-e32]"),
        Check::new(
            "closure_is_sl3",
            cert.closure_dimension == cert.algebra_dimension,
            format!("closure dimension {} of {}", cert.closure_dimension, cert.algebra_dimension),
        ),
        Check::new("witness_not_nilpotent", cert.witness_non_nilpotent, "eigenvalues 1, -2, 1"),
        Check::new(
            "probes_stay_nilpotent",
            !cert.probe.escaped(),
            format!("{DEFAULT_PROBE_TRIALS} seeded combinations"),
        ),
        Check::new("nilpotent_not_triangularizable", cert.passed(), cert.conclusion.clone()),
    ];
    Ok(report(cfg, checks, serde_json::to_value(&cert).expect("certificate serializes")))
}

fn random_weight_system(r: &mut impl Rng) -> WeightSystem {
    let rank = r.gen_range(1..=3);
    let dim = r.gen_range(1..=6);
    let weights = (0..dim).map(|_| (0..rank).map(|_| r.gen_range(-3..=3)).collect()).collect();
    WeightSystem::new(rank, weights).expect("consistent lengths")
}

/// Random weight systems: membership against exhaustive search, soundness
/// of every returned cocharacter, and a common cocharacter for every
/// 2-dimensional subspace whose probes all land in the nullcone.
pub(crate) fn torus(cfg: &Config) -> CliResult<Report> {
    let mut r = rng(cfg.seed);
    let (mut vectors, mut members, mut disagreements, mut unsound) = (0usize, 0usize, 0usize, 0usize);
    let (mut subspaces, mut probed_in, mut common_found) = (0usize, 0usize, 0usize);
    for _ in 0..TORUS_SYSTEMS {
        let ws = random_weight_system(&mut r);
        for _ in 0..TORUS_VECTORS {
            let v = small_vector(&mut r, ws.dim(), 1);
            vectors += 1;
            let gamma = torus_nullcone_member(&ws, &v)?;
            let support: Vec<Vec<i64>> =
                (0..ws.dim()).filter(|&i| v[i] != int(0)).map(|i| ws.weights[i].clone()).collect();
            let brute = brute_force_cocharacter(&support, ws.torus_rank, TORUS_BOX);
            if brute.is_some() != gamma.is_some() {
                disagreements += 1;
            }
            if let Some(g) = gamma {
                members += 1;
                let vg = v_gamma(&ws, &g);
                let ok = (0..ws.dim())
                    .filter(|&i| v[i] != int(0))
                    .all(|i| pairs_positively(&g.gamma, &ws.weights[i]) && vg.contains(&i));
                if !ok {
                    unsound += 1;
                }
            }
        }
        for _ in 0..TORUS_SUBSPACES {
            let span = SubspaceSpec::new(
                ws.dim(),
                vec![small_vector(&mut r, ws.dim(), 1), small_vector(&mut r, ws.dim(), 1)],
            )?;
            let probe_seed = r.gen();
            subspaces += 1;
            let verdict = span_probe_nullcone(
                |v: &[Rational]| Ok(torus_nullcone_member(&ws, v)?.is_some()),
                &span,
                DEFAULT_PROBE_TRIALS,
                probe_seed,
            )?;
            if !verdict.escaped() {
                probed_in += 1;
                if subspace_in_common_vgamma(&ws, &span)?.is_some() {
                    common_found += 1;
                }
            }
        }
    }
    let checks = vec![
        Check::new(
            "membership_matches_box_search",
            disagreements == 0,
            format!("{disagreements} disagreements over {vectors} vectors"),
        ),
        Check::new(
            "cocharacters_contract_vectors",
            unsound == 0,
            format!("{members} members, {unsound} unsound cocharacters"),
        ),
        Check::new(
            "unstable_subspaces_share_a_cocharacter",
            common_found == probed_in,
            format!("{common_found}/{probed_in} subspaces with all probes in the nullcone"),
        ),
    ];
    let data = json!({
        "systems": TORUS_SYSTEMS,
        "vectors": vectors,
        "members": members,
        "disagreements": disagreements,
        "subspaces": subspaces,
        "subspaces_all_probes_in": probed_in,
        "common_cocharacter_found": common_found,
        "box_bound": TORUS_BOX,
    });
    Ok(report(cfg, checks, data))
}

/// `SL_2` on binary forms: `R_1` has no invariants, two copies of it have
/// the determinant, so polarizations of `k[R_1]` cannot see `k[R_1^2]`.
pub(crate) fn sl2_r1(cfg: &Config) -> CliResult<Report> {
    let cap = cfg.caps.monomials;
    let r1: Vec<usize> = (1..=4)
        .map(|k| sl2_invariant_dimension(&[1], &MultiDegree(vec![k]), cap))
        .collect::<Result<_, _>>()?;
    let pair = sl2_invariant_dimension(&[1, 1], &MultiDegree(vec![1, 1]), cap)?;
    let quadric = sl2_invariant_dimension(&[2], &MultiDegree(vec![2]), cap)?;
    let r1_trivial = r1.iter().all(|&d| d == 0);
    let pol_ind = (r1_trivial && pair > 0).then_some(1);
    let checks = vec![
        Check::new("r1_has_no_invariants", r1_trivial, format!("degrees 1..4: {r1:?}")),
        Check::new("r1_pair_has_determinant", pair == 1, format!("bidegree (1,1): {pair}")),
        Check::new("r2_has_discriminant", quadric == 1, format!("degree 2: {quadric}")),
        Check::new(
            "pol_ind_r1_is_1",
            pol_ind == Some(1),
            "k[R1]^SL2 = k while k[R1+R1]^SL2 is not, so pol_1 already fails to be integral",
        ),
    ];
    let data = json!({
        "r1_dims_by_degree": r1,
        "r1_pair_dim_1_1": pair,
        "r2_dim_2": quadric,
        "pol_ind_r1": pol_ind,
    });
    Ok(report(cfg, checks, data))
}
