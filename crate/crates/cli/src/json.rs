//! Exact JSON encoding: every rational is a `[numerator, denominator]` pair
//! in lowest terms with a positive denominator.

use std::str::FromStr;

use git_instab::convex::{MinNormResult, PointSet};
use git_instab::gitcore::{GroupElement, SamplerCertificate, State, StopReason, WeightVector};
use git_instab::Rational;
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

pub fn int(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

pub fn rat(q: &Rational) -> Value {
    Value::Array(vec![int(q.numer()), int(q.denom())])
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn weights<'a>(ws: impl IntoIterator<Item = &'a WeightVector>) -> Value {
    Value::Array(ws.into_iter().map(|w| vector(w.coords())).collect())
}

pub fn state(s: &State) -> Value {
    weights(s.weights())
}

pub fn matrix(g: &GroupElement) -> Value {
    Value::Array(g.matrix().to_rows().iter().map(|r| vector(r)).collect())
}

pub fn nearest(r: &MinNormResult, set: &PointSet) -> Value {
    let coefficients: Vec<Value> = r
        .coefficients
        .iter()
        .map(|(i, w)| json!({ "point": vector(&set.points()[*i]), "weight": rat(w) }))
        .collect();
    json!({
        "point": vector(&r.point),
        "norm_squared": rat(&r.norm_squared),
        "coefficients": coefficients,
    })
}

pub fn certificate(c: &SamplerCertificate) -> Value {
    json!({
        "seed": c.seed,
        "entry_bound": c.entry_bound,
        "stall_window": c.stall_window,
        "trials_used": c.trials_used,
        "singular_draws": c.singular_draws,
        "final_stall": c.final_stall,
        "stopped_by": match c.stopped_by {
            StopReason::Stall => "stall",
            StopReason::TrialLimit => "trial_limit",
        },
    })
}
