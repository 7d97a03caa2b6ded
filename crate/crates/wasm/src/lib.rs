//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export takes plain strings and returns a JSON document; rationals are
//! rendered as `p/q` strings for display.

use git_instab::convex::{contains_origin, min_norm_point, origin_in_interior, MinNormResult, PointSet};
use git_instab::gitcore::{
    check_generic_stable, worst_1ps_for_torus, SamplerConfig, StateSource, TorusContext,
};
use git_instab::polyalg::{parse_polynomial, parse_polynomial_in};
use git_instab::rational::{format_rational, format_vec, parse_vectors};
use git_instab::svg::{self, Projection};
use git_instab::Error;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn picture(set: &PointSet, nearest: &MinNormResult) -> Option<String> {
    let projection = Projection::for_set(set).ok()?;
    svg::render(set, Some(nearest), projection).ok()
}

fn form_source(form: &str, n: u32) -> Result<StateSource, Error> {
    let f = if n == 0 {
        parse_polynomial(form)?
    } else {
        parse_polynomial_in(form, n as usize + 1)?
    };
    if f.nvars() < 2 {
        return Err(Error::InvalidArgument(
            "use at least two variables or set n".into(),
        ));
    }
    StateSource::form(TorusContext::sl(f.nvars() - 1)?, f)
}

fn nearest_json(r: &MinNormResult, set: &PointSet) -> Value {
    json!({
        "point": format_vec(&r.point),
        "norm_squared": format_rational(&r.norm_squared),
        "combination": r.coefficients.iter()
            .map(|(i, w)| json!({ "point": format_vec(&set.points()[*i]), "weight": format_rational(w) }))
            .collect::<Vec<_>>(),
    })
}

/// SL state of a form, its nearest point and the worst one-parameter
/// subgroup of the diagonal torus. `n = 0` infers the variable count.
pub fn analyze_form_json(form: &str, n: u32) -> Result<String, String> {
    let src = form_source(form, n).map_err(|e| e.to_string())?;
    let state = src.state().map_err(|e| e.to_string())?;
    let set = state.point_set();
    let worst = worst_1ps_for_torus(&state).map_err(|e| e.to_string())?;
    let doc = json!({
        "weights": state.weights().map(|w| format_vec(w.coords())).collect::<Vec<_>>(),
        "nearest": nearest_json(&worst.certificate, &set),
        "rho": worst.rho.as_ref().map(|r| r.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        "unstable": worst.is_unstable(),
        "origin_in_interior": origin_in_interior(&set),
        "svg": picture(&set, &worst.certificate),
    });
    Ok(doc.to_string())
}

/// Nearest point to the origin of the hull of points such as `(1,0) (0,1/2)`.
pub fn nearest_point_json(points: &str) -> Result<String, String> {
    let set = parse_vectors(points)
        .and_then(PointSet::new)
        .map_err(|e| e.to_string())?;
    let r = min_norm_point(&set);
    let doc = json!({
        "nearest": nearest_json(&r, &set),
        "contains_origin": contains_origin(&set),
        "origin_in_interior": origin_in_interior(&set),
        "svg": picture(&set, &r),
    });
    Ok(doc.to_string())
}

/// Generic stability check of a form from seeded random coordinate changes.
pub fn certify_form_json(form: &str, n: u32, seed: u32, trials: u32) -> Result<String, String> {
    let src = form_source(form, n).map_err(|e| e.to_string())?;
    let cfg = SamplerConfig {
        trials: trials.max(1) as usize,
        seed: u64::from(seed),
        ..SamplerConfig::default()
    };
    let check = check_generic_stable(&src, &cfg).map_err(|e| e.to_string())?;
    let set = check.state.point_set();
    let doc = json!({
        "verdict": check.verdict.as_str(),
        "weights": check.state.weights().map(|w| format_vec(w.coords())).collect::<Vec<_>>(),
        "nearest": nearest_json(&check.nearest, &set),
        "seed": seed,
        "trials_used": check.certificate.trials_used,
        "svg": picture(&set, &check.nearest),
    });
    Ok(doc.to_string())
}

#[wasm_bindgen]
pub fn analyze_form(form: &str, n: u32) -> Result<String, JsValue> {
    analyze_form_json(form, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn nearest_point(points: &str) -> Result<String, JsValue> {
    nearest_point_json(points).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn certify_form(form: &str, n: u32, seed: u32, trials: u32) -> Result<String, JsValue> {
    certify_form_json(form, n, seed, trials).map_err(|e| JsValue::from_str(&e))
}
