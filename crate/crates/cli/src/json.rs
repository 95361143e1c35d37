//! Conversions from library values to JSON. Rationals and big integers are
//! strings; machine integers are JSON numbers.

use newton_zeta::exact::{Integer, Rational};
use newton_zeta::pipeline::{Certificate, CertificateKind, Evidence, FacetShape, HypothesisFlags, PoleVerdict, Report};
use newton_zeta::{FactoredCyclo, RationalFunction, RootOfUnity, UniPoly};
use serde_json::{json, Value};

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn integer(z: &Integer) -> Value {
    Value::String(z.to_string())
}

pub fn poly(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn rational_function(r: &RationalFunction) -> Value {
    json!({ "num": poly(r.numerator()), "den": poly(r.denominator()) })
}

pub fn cyclo(f: &FactoredCyclo) -> Value {
    Value::Array(f.iter().map(|(d, e)| json!({ "degree": d, "exponent": e })).collect())
}

pub fn root(l: &RootOfUnity) -> Value {
    json!({ "rotation": rational(l.rotation()), "order": l.order() })
}

fn shape(s: FacetShape) -> &'static str {
    match s {
        FacetShape::B1 => "B1",
        FacetShape::B2 => "B2",
        FacetShape::Other => "other",
    }
}

fn certificate(c: &Certificate) -> Value {
    let kind = match c.kind {
        CertificateKind::ZetaMultiplicity => "zeta_multiplicity",
        CertificateKind::DegreeZero => "degree_zero",
    };
    json!({
        "kind": kind,
        "projection": c.projection,
        "zeta": cyclo(&c.zeta),
        "lambda": root(&c.lambda),
        "multiplicity": c.multiplicity,
    })
}

fn evidence(e: &Evidence) -> Value {
    match e {
        Evidence::OriginMultiplicity(m) => json!({ "kind": "origin_multiplicity", "multiplicity": m }),
        Evidence::StratumMultiplicity { index, multiplicity } => {
            json!({ "kind": "stratum_multiplicity", "index": index, "multiplicity": multiplicity })
        }
        Evidence::Corner(c) => json!({
            "kind": "corner_polynomial",
            "facet": c.facet,
            "simplex": c.simplex,
            "corner": c.corner.as_ref().map(|d| json!({ "r": d.r, "indices": d.indices, "corner": d.corner })),
            "polynomial": cyclo(&c.polynomial),
            "multiplicity": c.multiplicity,
        }),
        Evidence::Cancellation { shapes, order } => json!({
            "kind": "cancellation",
            "order": order,
            "facets": shapes.iter().map(|(j, s)| json!({ "facet": j, "shape": shape(*s) })).collect::<Vec<_>>(),
        }),
    }
}

fn verdict(v: &PoleVerdict) -> Value {
    let reason = match &v.status {
        newton_zeta::pipeline::PoleStatus::Inconclusive(r) => Some(r.clone()),
        _ => None,
    };
    json!({
        "s0": rational(&v.s0),
        "lambda": root(&v.lambda),
        "facets": v.facets,
        "actual": v.actual,
        "order": v.order,
        "status": v.status.name(),
        "reason": reason,
        "certificate": v.certificate.as_ref().map(certificate),
        "evidence": v.evidence.iter().map(evidence).collect::<Vec<_>>(),
    })
}

pub fn hypotheses(h: &HypothesisFlags) -> Value {
    json!({
        "zero_convenient": h.zero_convenient,
        "good": h.good,
        "goodness_violations": h.goodness_violations,
        "b_wall_ok": h.b_wall_ok,
        "b_wall_violations": h.b_wall_violations,
    })
}

pub fn report(r: &Report) -> Value {
    json!({
        "n": r.n,
        "vertices": r.vertices,
        "assumptions": {
            "nondegenerate": r.assume_nondegenerate,
            "zero_convenient": r.zero_convenient,
            "hypotheses": r.hypotheses.as_ref().map(hypotheses),
        },
        "z_top": rational_function(&r.z_top),
        "z_top_text": r.z_top.to_string(),
        "varchenko_zeta": cyclo(&r.varchenko),
        "verdicts": r.verdicts.iter().map(verdict).collect::<Vec<_>>(),
        "conclusive": r.is_conclusive(),
    })
}
