use anyhow::{bail, Context, Result};
use newton_zeta::facets::{alex_split, b1_classifications, facet_pole, is_b2_facet, B1Classification};
use newton_zeta::monozeta::{strata, strata_product, varchenko_zeta, zeta_face};
use newton_zeta::pipeline::{check_conjecture, check_hypotheses, CheckOptions};
use newton_zeta::supermod::{
    corner_data, g_as_multiplicity, g_m_sum, g_m_window, phi_product, psi_product, relevant_primes,
};
use newton_zeta::zetatop::{candidate_poles, is_actual_pole, z_top};
use newton_zeta::{build_newton, NewtonPolyhedron, SupportSet};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::input::InputSpec;
use crate::json as js;

pub fn polyhedron(spec: &InputSpec) -> Result<NewtonPolyhedron> {
    let s = SupportSet::new(spec.n, spec.support.clone())?;
    Ok(build_newton(&s)?)
}

pub fn newton(p: &NewtonPolyhedron) -> Value {
    let facets: Vec<Value> = p
        .facets()
        .iter()
        .enumerate()
        .map(|(id, f)| {
            json!({
                "id": id,
                "conormal": f.conormal,
                "distance": f.distance,
                "nu": f.nu,
                "compact": f.compact,
                "in_coordinate_hyperplane": f.in_coordinate_hyperplane,
                "face": f.face,
            })
        })
        .collect();
    let faces: Vec<Value> = p
        .faces()
        .iter()
        .enumerate()
        .map(|(id, f)| {
            json!({
                "id": id,
                "dim": f.dim,
                "vertices": f.vertices,
                "directions": f.directions,
                "facets": f.facets,
                "compact": f.compact,
            })
        })
        .collect();
    let v_faces: Vec<Value> =
        p.v_faces().iter().map(|v| json!({ "face": v.face, "support": v.support })).collect();
    json!({
        "n": p.n(),
        "vertices": p.vertices(),
        "convenient": p.is_convenient(),
        "facets": facets,
        "faces": faces,
        "v_faces": v_faces,
    })
}

pub fn ztop(p: &NewtonPolyhedron) -> Result<Value> {
    let z = z_top(p)?;
    let poles: Vec<Value> = candidate_poles(p)?
        .iter()
        .map(|c| {
            let (actual, order) = is_actual_pole(&z, &c.value);
            json!({
                "s0": js::rational(&c.value),
                "facets": c.facets,
                "actual": actual,
                "fake": !actual,
                "order": order,
            })
        })
        .collect();
    Ok(json!({
        "zeta": js::rational_function(&z.value),
        "text": z.value.to_string(),
        "vertex_sum": js::rational_function(&z.vertex_sum),
        "face_sum": js::rational_function(&z.face_sum),
        "candidate_poles": poles,
    }))
}

pub fn monozeta(p: &NewtonPolyhedron, degree_cap: u64) -> Result<Value> {
    let zeta = varchenko_zeta(p)?;
    let expanded = match zeta.expand_capped(degree_cap) {
        Ok(r) => js::rational_function(&r),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let mut v_faces = Vec::new();
    for v in p.v_faces() {
        v_faces.push(json!({
            "face": v.face,
            "support": v.support,
            "dim": p.faces()[v.face].dim,
            "distance": js::integer(&p.lattice_distance(v.face)?),
            "volume": js::integer(&p.normalized_volume(v.face)?),
            "factor": js::cyclo(&zeta_face(p, v.face)?),
        }));
    }
    let st = strata(p)?;
    let strata_json: Vec<Value> = st
        .iter()
        .map(|s| json!({ "index": s.index, "v_faces": s.v_faces, "r": js::cyclo(&s.r) }))
        .collect();
    Ok(json!({
        "zeta": js::cyclo(&zeta),
        "expanded": expanded,
        "v_faces": v_faces,
        "strata": strata_json,
        "strata_product_is_inverse": strata_product(&st) == zeta.inv(),
    }))
}

fn b1_json(c: &B1Classification) -> Value {
    match c {
        B1Classification::None => json!({ "kind": "none" }),
        B1Classification::Compact { variable, apex, base } => {
            json!({ "kind": "compact", "variable": variable, "apex": apex, "base": base })
        }
        B1Classification::NonCompact { directions, variable, apex, base } => json!({
            "kind": "noncompact",
            "directions": directions,
            "variable": variable,
            "apex": apex,
            "base": base,
        }),
    }
}

pub fn classify(p: &NewtonPolyhedron) -> Result<Value> {
    let mut facets = Vec::new();
    for (j, f) in p.facets().iter().enumerate() {
        let all = b1_classifications(p, j)?;
        let b1 = all.first().cloned().unwrap_or(B1Classification::None);
        let b2 = if p.n() == 4 { Some(is_b2_facet(p, j)?) } else { None };
        let split = if p.n() == 4 && f.compact && !b1.is_b1() && b2 == Some(false) {
            let s = alex_split(p, j)?;
            let simplices: Vec<Value> = s
                .simplices
                .iter()
                .zip(&s.is_b1)
                .map(|(t, b)| json!({ "vertices": t, "b1": b }))
                .collect();
            Some(json!({ "simplices": simplices, "witness": s.witness }))
        } else {
            None
        };
        facets.push(json!({
            "id": j,
            "conormal": f.conormal,
            "distance": f.distance,
            "nu": f.nu,
            "compact": f.compact,
            "pole": facet_pole(p, j).map(|q| js::rational(&q)),
            "ess_dim": p.ess_dim(j)?,
            "b1": b1_json(&b1),
            "b1_variables": all.iter().filter_map(B1Classification::variable).collect::<Vec<_>>(),
            "b2": b2,
            "alex_split": split,
        }));
    }
    let hypotheses = if p.n() == 4 { Some(js::hypotheses(&check_hypotheses(p)?)) } else { None };
    Ok(json!({
        "facets": facets,
        "zero_convenient": newton_zeta::facets::is_zero_convenient(p),
        "good": newton_zeta::facets::is_good(p)?,
        "hypotheses": hypotheses,
    }))
}

#[derive(Deserialize)]
struct SupermodInput {
    n: usize,
    k: i64,
    edges: Vec<(i64, i64)>,
}

pub fn supermod(text: &str) -> Result<Value> {
    let input: SupermodInput = serde_json::from_str(text).context("supermod expects {\"n\", \"k\", \"edges\"}")?;
    if input.edges.len() + 1 != input.n {
        bail!("expected {} edges for n = {}, got {}", input.n.saturating_sub(1), input.n, input.edges.len());
    }
    let data = corner_data(input.n, input.k, &input.edges)?;
    let rows: Vec<Value> = data
        .rows
        .iter()
        .map(|r| {
            let subset: Vec<usize> = (0..input.n - 1).filter(|i| r.subset & (1 << i) != 0).collect();
            json!({
                "subset": subset,
                "gcd": r.gcd,
                "d_i": r.d_i,
                "volume": r.volume,
                "distance": r.distance,
            })
        })
        .collect();
    let full = data.full();
    let psi = psi_product(&data)?;
    let w = g_m_window(&data);
    let mut g_m = Vec::new();
    let mut phi_ok = true;
    for m in -w..=w {
        let phi = phi_product(&data, m)?;
        phi_ok &= phi.is_fully_supermodular();
        g_m.push(json!({
            "m": m,
            "value": js::integer(&g_m_sum(&data, m)),
            "phi_derivative": js::integer(phi.derivative().get(full)),
        }));
    }
    let g = newton_zeta::supermod::g_sum(&data);
    Ok(json!({
        "d": data.d,
        "k_i": data.k_i,
        "k_sum": data.k_sum,
        "vertices": data.vertices(),
        "conormal": data.conormal,
        "distance": data.distance,
        "nu": data.nu,
        "lambda": js::root(&data.lambda()),
        "rows": rows,
        "f_tau": js::cyclo(&data.f_tau()),
        "primes": relevant_primes(&data),
        "g": js::integer(&g),
        "g_multiplicity": g_as_multiplicity(&data),
        "psi_derivative": js::integer(psi.derivative().get(full)),
        "g_m": g_m,
        "psi_fully_supermodular": psi.is_fully_supermodular(),
        "psi_strictly_fully_supermodular": psi.is_strictly_fully_supermodular(),
        "phi_fully_supermodular": phi_ok,
    }))
}

/// Returns the report and whether every pole was settled.
pub fn check(p: &NewtonPolyhedron) -> Result<(Value, bool)> {
    let r = check_conjecture(p, &CheckOptions::default())?;
    Ok((js::report(&r), r.is_conclusive()))
}
