//! JSON encodings. Rationals are always `"num/den"` strings; integer witness
//! fields become JSON numbers when they fit in an `i64`.

use modforms::exactmath::fraction_string;
use modforms::forms::GenPoly;
use modforms::hecke::{EigenReport, Violation};
use modforms::nearly::Y_CONVENTION;
use modforms::verify::{CheckRecord, Value, VerificationReport, Witness};
use modforms::{GradedSeries, QSeries, Rational, YPolyForm};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value as Json};

pub fn rational(r: &Rational) -> Json {
    Json::String(fraction_string(r))
}

pub fn rationals<'a>(rs: impl IntoIterator<Item = &'a Rational>) -> Json {
    Json::Array(rs.into_iter().map(rational).collect())
}

pub fn qseries(f: &QSeries) -> Json {
    json!({ "coeffs": rationals(f.coeffs()), "prec": f.prec() })
}

pub fn graded(f: &GradedSeries) -> Json {
    json!({ "weight": f.weight, "depth": f.depth, "series": qseries(&f.series) })
}

pub fn ypoly(f: &YPolyForm) -> Json {
    json!({
        "components": f.components().iter().map(qseries).collect::<Vec<_>>(),
        "weight": f.weight(),
        "convention": Y_CONVENTION,
    })
}

pub fn genpoly(p: &GenPoly) -> Json {
    let terms: Vec<Json> = p
        .terms()
        .map(|(e, c)| json!({ "E2": e[0], "E4": e[1], "E6": e[2], "coeff": rational(c) }))
        .collect();
    Json::Array(terms)
}

fn violation(v: &Violation) -> Json {
    json!({
        "n": v.n,
        "component": v.component,
        "exponent": v.exponent,
        "expected": rational(&v.expected),
        "actual": rational(&v.actual),
    })
}

pub fn eigen_report(r: &EigenReport) -> Json {
    json!({
        "is_eigen_up_to_bound": r.is_eigen_up_to_bound,
        "tested_bound": r.tested_bound,
        "window": r.window,
        "precision_used": r.precision_used,
        "eigenvalues": r.eigenvalues.iter().map(|(n, l)| json!({ "n": n, "lambda": rational(l) })).collect::<Vec<_>>(),
        "first_violation": r.first_violation.as_ref().map(violation),
        "hecke_precisions": r.hecke_precisions.iter().map(|(n, p)| json!({ "n": n, "prec": p })).collect::<Vec<_>>(),
    })
}

pub fn value(v: &Value) -> Json {
    match v {
        Value::Int(i) => i.to_i64().map_or_else(|| Json::String(i.to_string()), Json::from),
        Value::Rat(r) => rational(r),
        Value::Text(s) => Json::String(s.clone()),
        Value::Bool(b) => Json::Bool(*b),
        Value::List(items) => Json::Array(items.iter().map(value).collect()),
        Value::Map(w) => witness(w),
    }
}

pub fn witness(w: &Witness) -> Json {
    let mut map = Map::new();
    for (k, v) in &w.0 {
        map.insert(k.clone(), value(v));
    }
    Json::Object(map)
}

fn check(c: &CheckRecord) -> Json {
    json!({
        "id": c.id,
        "anchor": c.anchor,
        "pass": c.pass,
        "witness": c.witness.as_ref().map(witness),
    })
}

/// Report in the documented schema, with `runtime_ms` appended last.
pub fn report(r: &VerificationReport, runtime_ms: u128) -> Json {
    json!({
        "suite": r.suite,
        "checks": r.checks.iter().map(check).collect::<Vec<_>>(),
        "passed": r.passed(),
        "failed": r.failed(),
        "runtime_ms": runtime_ms as u64,
    })
}
