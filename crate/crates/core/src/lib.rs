//! Abstract argumentation toolkit: Dung extensions and acceptance,
//! argument-incomplete frameworks, stability of acceptance under admissible
//! expansions, and a stability-aware negotiation engine.

pub mod af;
pub mod error;
pub mod formats;
pub mod iaf;
pub mod nego;
pub mod stability;

pub use af::{AcceptanceMode, ArgumentId, ArgumentationFramework, Extension, Semantics};
pub use error::{Error, Result};
pub use iaf::{IncompleteAF, NecessityMode};
pub use stability::{StabilityOutcome, StabilityProblem, StabilityVerdict, Universe};
