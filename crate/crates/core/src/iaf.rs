//! Argument-incomplete argumentation frameworks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::af::{AcceptanceMode, ArgumentId, ArgumentationFramework, Attack, Semantics};
use crate::error::{Error, Result};

/// Largest number of uncertain arguments whose completions are enumerated.
pub const COMPLETION_LIMIT: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NecessityMode {
    Possible,
    Necessary,
}

impl fmt::Display for NecessityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NecessityMode::Possible => "possible",
            NecessityMode::Necessary => "necessary",
        })
    }
}

impl FromStr for NecessityMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "possible" | "possibly" => Ok(NecessityMode::Possible),
            "necessary" | "necessarily" => Ok(NecessityMode::Necessary),
            other => Err(format!("unknown necessity {other:?} (expected possible or necessary)")),
        }
    }
}

/// A framework whose uncertain arguments may or may not be present.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IncompleteAF {
    certain: BTreeSet<ArgumentId>,
    uncertain: BTreeSet<ArgumentId>,
    attacks: BTreeSet<Attack>,
}

impl IncompleteAF {
    pub fn new(
        certain: BTreeSet<ArgumentId>,
        uncertain: BTreeSet<ArgumentId>,
        attacks: BTreeSet<Attack>,
    ) -> Result<Self> {
        if let Some(a) = certain.intersection(&uncertain).next() {
            return Err(Error::OverlappingArgument(a.clone()));
        }
        let known = |a: &ArgumentId| certain.contains(a) || uncertain.contains(a);
        if let Some((a, b)) = attacks.iter().find(|(a, b)| !known(a) || !known(b)) {
            return Err(Error::DanglingAttack(a.clone(), b.clone()));
        }
        Ok(IncompleteAF {
            certain,
            uncertain,
            attacks,
        })
    }

    pub fn certain(&self) -> &BTreeSet<ArgumentId> {
        &self.certain
    }

    pub fn uncertain(&self) -> &BTreeSet<ArgumentId> {
        &self.uncertain
    }

    pub fn attacks(&self) -> &BTreeSet<Attack> {
        &self.attacks
    }

    fn check_guard(&self) -> Result<()> {
        if self.uncertain.len() > COMPLETION_LIMIT {
            return Err(Error::TooLarge {
                what: "uncertain argument set",
                size: self.uncertain.len(),
                limit: COMPLETION_LIMIT,
            });
        }
        Ok(())
    }

    pub fn completion_count(&self) -> Result<u64> {
        self.check_guard()?;
        Ok(1 << self.uncertain.len())
    }

    /// The completion selected by `mask`: bit `i` includes the `i`-th uncertain
    /// argument in lexicographic order.
    pub fn completion(&self, mask: u64) -> ArgumentationFramework {
        let mut arguments = self.certain.clone();
        arguments.extend(
            self.uncertain
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, a)| a.clone()),
        );
        let attacks = self
            .attacks
            .iter()
            .filter(|(a, b)| arguments.contains(a) && arguments.contains(b))
            .cloned()
            .collect();
        ArgumentationFramework::new(arguments, attacks).expect("attacks restricted to arguments")
    }

    pub fn completions_iter(&self) -> Result<impl Iterator<Item = ArgumentationFramework> + '_> {
        let count = self.completion_count()?;
        Ok((0..count).map(move |mask| self.completion(mask)))
    }

    /// All `2^|uncertain|` completions in canonical order.
    pub fn completions(&self) -> Result<Vec<ArgumentationFramework>> {
        Ok(self.completions_iter()?.collect())
    }

    /// Possible: accepted in some completion. Necessary: accepted in every
    /// completion. Only certain arguments can be queried.
    pub fn accepted(
        &self,
        a: &ArgumentId,
        semantics: Semantics,
        mode: AcceptanceMode,
        necessity: NecessityMode,
    ) -> Result<bool> {
        if self.uncertain.contains(a) {
            return Err(Error::UncertainQuery(a.clone()));
        }
        if !self.certain.contains(a) {
            return Err(Error::UnknownArgument(a.clone()));
        }
        let mut completions = self.completions_iter()?;
        let accepted_in = |c: ArgumentationFramework| {
            c.accepted(a, semantics, mode)
                .expect("certain arguments belong to every completion")
        };
        Ok(match necessity {
            NecessityMode::Possible => completions.any(accepted_in),
            NecessityMode::Necessary => completions.all(accepted_in),
        })
    }
}

impl From<ArgumentationFramework> for IncompleteAF {
    fn from(af: ArgumentationFramework) -> Self {
        IncompleteAF {
            certain: af.arguments().clone(),
            uncertain: BTreeSet::new(),
            attacks: af.attacks().clone(),
        }
    }
}
