//! Text formats: APX (with `?arg` for uncertain arguments), TGF, and
//! negotiation scenarios.
//!
//! Parsers accept LF or CRLF line endings; serializers emit LF and list
//! arguments and attacks in lexicographic order.

mod apx;
mod scenario;
mod tgf;

pub use apx::{parse_af_apx, parse_apx, parse_iaf_apx, serialize_af_apx, serialize_apx, serialize_iaf_apx, ApxValue};
pub use scenario::parse_scenario;
pub use tgf::{parse_tgf, serialize_tgf};

use crate::af::{AcceptanceMode, ArgumentId, Semantics};
use crate::error::Result;
use crate::stability::{StabilityProblem, Universe};

/// Builds a stability problem from two APX documents.
///
/// If the current document lists no attacks at all, its attacks are induced
/// from the universe; otherwise they must match the induced set exactly.
pub fn load_stability_problem(
    universe_text: &str,
    current_text: &str,
    target: &ArgumentId,
    semantics: Semantics,
    mode: AcceptanceMode,
) -> Result<StabilityProblem> {
    let universe = Universe::new(parse_af_apx(universe_text)?);
    let mut current = parse_af_apx(current_text)?;
    if current.attacks().is_empty() {
        if let Some(a) = current.arguments().iter().find(|a| !universe.framework().contains(a)) {
            return Err(crate::Error::NotASubframework(format!(
                "argument {a} is not in the universe"
            )));
        }
        current = universe.induced(current.arguments());
    }
    StabilityProblem::new(universe, current, target.clone(), semantics, mode)
}
