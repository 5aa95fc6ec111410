//! WebAssembly bindings for the browser demo.
//!
//! Each exported function takes plain text (APX or scenario files) and
//! returns a JSON string; errors come back as a thrown JS string. The
//! `*_json` functions hold the logic so they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use argstab_core::formats::{load_stability_problem, parse_af_apx, parse_scenario};
use argstab_core::nego::{run_negotiation, Outcome, Policy};
use argstab_core::{AcceptanceMode, ArgumentId, ArgumentationFramework, Semantics, StabilityVerdict};

fn graph(af: &ArgumentationFramework) -> Value {
    json!({
        "arguments": af.arguments().iter().map(ArgumentId::as_str).collect::<Vec<_>>(),
        "attacks": af.attacks().iter().map(|(a, b)| [a.as_str(), b.as_str()]).collect::<Vec<_>>(),
    })
}

fn parse<T: std::str::FromStr<Err = String>>(text: &str) -> Result<T, String> {
    text.parse()
}

/// `{arguments, attacks, extensions: [[..], ..]}` for one semantics.
pub fn extensions_json(apx: &str, semantics: &str) -> Result<String, String> {
    let af = parse_af_apx(apx).map_err(|e| e.to_string())?;
    let sem: Semantics = parse(semantics)?;
    let found = af.extensions(sem);
    let exts: Vec<Vec<&str>> = found
        .iter()
        .map(|e| e.members().iter().map(ArgumentId::as_str).collect())
        .collect();
    let mut out = graph(&af);
    out["extensions"] = json!(exts);
    Ok(out.to_string())
}

/// `{outcome, universe, current, accepting?, rejecting?}`; the witnesses are
/// argument lists of two future frameworks that disagree on the target.
pub fn stability_json(
    universe: &str,
    current: &str,
    target: &str,
    semantics: &str,
    mode: &str,
) -> Result<String, String> {
    let target = ArgumentId::new(target).map_err(|e| e.to_string())?;
    let sem: Semantics = parse(semantics)?;
    let mode: AcceptanceMode = parse(mode)?;
    let problem = load_stability_problem(universe, current, &target, sem, mode).map_err(|e| e.to_string())?;
    let verdict = problem.check().map_err(|e| e.to_string())?;
    let mut out = json!({
        "outcome": verdict.outcome().label(),
        "universe": graph(problem.universe.framework()),
        "current": problem.current.arguments().iter().map(ArgumentId::as_str).collect::<Vec<_>>(),
    });
    if let StabilityVerdict::Unstable { accepting, rejecting } = &verdict {
        let names = |af: &ArgumentationFramework| json!(af.arguments().iter().map(ArgumentId::as_str).collect::<Vec<_>>());
        out["accepting"] = names(accepting);
        out["rejecting"] = names(rejecting);
    }
    Ok(out.to_string())
}

/// `{events: [..], agreement: offer-or-null, universe, final_debate}`.
pub fn negotiate_json(scenario: &str, baseline: bool) -> Result<String, String> {
    let scenario = parse_scenario(scenario).map_err(|e| e.to_string())?;
    let policy = if baseline { Policy::Baseline } else { Policy::StabilityAware };
    let transcript = run_negotiation(&scenario, policy).map_err(|e| e.to_string())?;
    let agreement = match transcript.outcome() {
        Outcome::Agreement(o) => Some(o.as_str()),
        Outcome::Failure => None,
    };
    Ok(json!({
        "events": transcript.events.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "agreement": agreement,
        "universe": graph(scenario.true_universe.framework()),
        "final_debate": transcript.final_debate.arguments().iter().map(ArgumentId::as_str).collect::<Vec<_>>(),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn extensions(apx: &str, semantics: &str) -> Result<String, JsValue> {
    extensions_json(apx, semantics).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn stability(universe: &str, current: &str, target: &str, semantics: &str, mode: &str) -> Result<String, JsValue> {
    stability_json(universe, current, target, semantics, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn negotiate(scenario: &str, baseline: bool) -> Result<String, JsValue> {
    negotiate_json(scenario, baseline).map_err(|e| JsValue::from_str(&e))
}
