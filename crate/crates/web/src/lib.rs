//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every entry point takes a JSON document and returns a JSON string. The
//! plain Rust functions are what the tests exercise; the `wasm_bindgen`
//! wrappers only convert errors into JavaScript exceptions.

use belief_decision::{
    bundled, evaluate, evi, induced_distribution, load_problem, pignistic_expect,
    proportional_expect, rho_expect, strategy_regions, MassFunction, Rho,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn rho(value: f64) -> Result<Rho, String> {
    Rho::new(value).map_err(|e| e.to_string())
}

/// Support, plausibility and point values of a mass function at `rho`.
pub fn explore_mass_json(doc: &str, rho_value: f64) -> Result<String, String> {
    let m = MassFunction::from_json(doc).map_err(|e| e.to_string())?;
    let r = rho(rho_value)?;
    let e = evi(&m);
    let mut focals = Vec::new();
    for f in m.focal_elements() {
        let b = m.belief_interval(f.elements()).map_err(|e| e.to_string())?;
        focals.push(json!({
            "elements": f.elements(),
            "mass": f.mass(),
            "support": b.support,
            "plausibility": b.plausibility,
        }));
    }
    let induced: Vec<Value> = induced_distribution(&m, r)
        .iter()
        .map(|(v, p)| json!({ "value": v, "probability": p }))
        .collect();
    Ok(json!({
        "frame": m.frame().values(),
        "focal_elements": focals,
        "evi": e,
        "rho": r,
        "value": rho_expect(e, r),
        "induced_distribution": induced,
        "pignistic": pignistic_expect(&m),
        "proportional": proportional_expect(&m).ok(),
    })
    .to_string())
}

/// Backward induction at `rho`.
pub fn evaluate_problem_json(doc: &str, rho_value: f64) -> Result<String, String> {
    let p = load_problem(doc).map_err(|e| e.to_string())?;
    let tree = evaluate(p.root(), rho(rho_value)?);
    Ok(json!({
        "problem": p.name,
        "value": tree.value(),
        "evi": tree.interval(),
        "strategy": tree.strategy(),
        "tree": tree.root,
    })
    .to_string())
}

/// Strategy regions plus the root value sampled at `resolution` points.
pub fn sensitivity_sweep_json(doc: &str, resolution: usize) -> Result<String, String> {
    if resolution < 2 {
        return Err(format!("resolution must be at least 2, got {resolution}"));
    }
    let p = load_problem(doc).map_err(|e| e.to_string())?;
    let regions = strategy_regions(p.root(), resolution);
    let curve: Vec<[f64; 2]> = (0..resolution)
        .map(|k| {
            let r = k as f64 / (resolution - 1) as f64;
            [
                r,
                evaluate(p.root(), Rho::new(r).expect("grid point")).value(),
            ]
        })
        .collect();
    Ok(json!({ "problem": p.name, "regions": regions, "curve": curve }).to_string())
}

pub fn example_json(name: &str) -> Result<String, String> {
    bundled::by_name(name)
        .map(str::to_string)
        .ok_or_else(|| format!("no bundled example named {name:?}"))
}

#[wasm_bindgen]
pub fn explore_mass(doc: &str, rho: f64) -> Result<String, JsError> {
    explore_mass_json(doc, rho).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn evaluate_problem(doc: &str, rho: f64) -> Result<String, JsError> {
    evaluate_problem_json(doc, rho).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sensitivity_sweep(doc: &str, resolution: usize) -> Result<String, JsError> {
    sensitivity_sweep_json(doc, resolution).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn example(name: &str) -> Result<String, JsError> {
    example_json(name).map_err(|e| JsError::new(&e))
}

/// Names accepted by [`example`], comma separated.
#[wasm_bindgen]
pub fn example_names() -> String {
    bundled::ALL
        .iter()
        .map(|(name, _)| *name)
        .collect::<Vec<_>>()
        .join(",")
}
