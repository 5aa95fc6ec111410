//! Dung-style abstract argumentation frameworks.
//!
//! A framework is a finite attack graph over named arguments. Extensions are
//! computed by a labelling search ([`ArgumentationFramework::extensions`]) and
//! can be cross-checked against a power-set oracle
//! ([`ArgumentationFramework::extensions_oracle`]).

mod oracle;
mod search;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest framework accepted by the power-set oracle.
pub const ORACLE_LIMIT: usize = 25;

/// Name of an argument.
///
/// Names are non-empty and contain no whitespace, parentheses or commas, so
/// they can be written verbatim in every supported file format.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let valid = !name.is_empty()
            && !name
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ','));
        if valid {
            Ok(ArgumentId(name))
        } else {
            Err(Error::InvalidArgumentName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ArgumentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

impl AsRef<str> for ArgumentId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

pub type Attack = (ArgumentId, ArgumentId);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Grounded,
    Complete,
    Stable,
    Preferred,
}

impl Semantics {
    pub const ALL: [Semantics; 4] = [
        Semantics::Grounded,
        Semantics::Complete,
        Semantics::Stable,
        Semantics::Preferred,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Semantics::Grounded => "gr",
            Semantics::Complete => "co",
            Semantics::Stable => "st",
            Semantics::Preferred => "pr",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gr" | "grounded" => Ok(Semantics::Grounded),
            "co" | "complete" => Ok(Semantics::Complete),
            "st" | "stable" => Ok(Semantics::Stable),
            "pr" | "preferred" => Ok(Semantics::Preferred),
            other => Err(format!("unknown semantics {other:?} (expected gr, co, st or pr)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AcceptanceMode {
    Credulous,
    Skeptical,
}

impl AcceptanceMode {
    pub fn name(self) -> &'static str {
        match self {
            AcceptanceMode::Credulous => "credulous",
            AcceptanceMode::Skeptical => "skeptical",
        }
    }
}

impl fmt::Display for AcceptanceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AcceptanceMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "credulous" | "cred" => Ok(AcceptanceMode::Credulous),
            "skeptical" | "sceptical" | "skept" => Ok(AcceptanceMode::Skeptical),
            other => Err(format!("unknown mode {other:?} (expected credulous or skeptical)")),
        }
    }
}

/// A set of arguments selected by some semantics.
///
/// Extensions order by size first and then by their sorted member lists,
/// which is the canonical order of every list returned by this crate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Extension(BTreeSet<ArgumentId>);

impl Extension {
    pub fn new(members: BTreeSet<ArgumentId>) -> Self {
        Extension(members)
    }

    pub fn members(&self) -> &BTreeSet<ArgumentId> {
        &self.0
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.0.contains(a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn into_members(self) -> BTreeSet<ArgumentId> {
        self.0
    }
}

impl Ord for Extension {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Extension {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<ArgumentId> for Extension {
    fn from_iter<I: IntoIterator<Item = ArgumentId>>(iter: I) -> Self {
        Extension(iter.into_iter().collect())
    }
}

/// Renders as `[a,b,c]`.
impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(a.as_str())?;
        }
        f.write_str("]")
    }
}

/// A finite argumentation framework.
///
/// Both endpoints of every attack are arguments of the framework. Self-attacks
/// are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentationFramework {
    arguments: BTreeSet<ArgumentId>,
    attacks: BTreeSet<Attack>,
}

impl ArgumentationFramework {
    pub fn new(arguments: BTreeSet<ArgumentId>, attacks: BTreeSet<Attack>) -> Result<Self> {
        if let Some((a, b)) = attacks
            .iter()
            .find(|(a, b)| !arguments.contains(a) || !arguments.contains(b))
        {
            return Err(Error::DanglingAttack(a.clone(), b.clone()));
        }
        Ok(ArgumentationFramework { arguments, attacks })
    }

    /// Builds a framework from string names, mostly useful in tests and examples.
    pub fn from_names(arguments: &[&str], attacks: &[(&str, &str)]) -> Result<Self> {
        let arguments = arguments
            .iter()
            .map(|&a| ArgumentId::new(a))
            .collect::<Result<_>>()?;
        let attacks = attacks
            .iter()
            .map(|&(a, b)| Ok((ArgumentId::new(a)?, ArgumentId::new(b)?)))
            .collect::<Result<_>>()?;
        ArgumentationFramework::new(arguments, attacks)
    }

    pub fn arguments(&self) -> &BTreeSet<ArgumentId> {
        &self.arguments
    }

    pub fn attacks(&self) -> &BTreeSet<Attack> {
        &self.attacks
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.arguments.contains(a)
    }

    pub fn attacks_pair(&self, a: &ArgumentId, b: &ArgumentId) -> bool {
        self.attacks.contains(&(a.clone(), b.clone()))
    }

    pub fn attackers_of<'a>(&'a self, a: &'a ArgumentId) -> impl Iterator<Item = &'a ArgumentId> {
        self.attacks
            .iter()
            .filter(move |(_, target)| target == a)
            .map(|(source, _)| source)
    }

    /// The sub-framework induced by `keep`: its arguments are `keep ∩ arguments`
    /// and its attacks are exactly the attacks among them.
    pub fn restrict(&self, keep: &BTreeSet<ArgumentId>) -> ArgumentationFramework {
        let arguments: BTreeSet<_> = self.arguments.intersection(keep).cloned().collect();
        let attacks = self
            .attacks
            .iter()
            .filter(|(a, b)| arguments.contains(a) && arguments.contains(b))
            .cloned()
            .collect();
        ArgumentationFramework { arguments, attacks }
    }

    fn check_known<'a>(&self, s: impl IntoIterator<Item = &'a ArgumentId>) -> Result<()> {
        match s.into_iter().find(|a| !self.arguments.contains(*a)) {
            Some(a) => Err(Error::UnknownArgument(a.clone())),
            None => Ok(()),
        }
    }

    pub fn conflict_free(&self, s: &BTreeSet<ArgumentId>) -> Result<bool> {
        self.check_known(s)?;
        Ok(!self
            .attacks
            .iter()
            .any(|(a, b)| s.contains(a) && s.contains(b)))
    }

    /// Whether `s` attacks every attacker of `a`.
    pub fn defends(&self, s: &BTreeSet<ArgumentId>, a: &ArgumentId) -> Result<bool> {
        self.check_known(s)?;
        self.check_known([a])?;
        Ok(self.defends_unchecked(s, a))
    }

    fn defends_unchecked(&self, s: &BTreeSet<ArgumentId>, a: &ArgumentId) -> bool {
        self.attackers_of(a).all(|b| {
            self.attackers_of(b).any(|c| s.contains(c))
        })
    }

    /// The set of arguments defended by `s`.
    pub fn characteristic(&self, s: &BTreeSet<ArgumentId>) -> Result<BTreeSet<ArgumentId>> {
        self.check_known(s)?;
        Ok(self
            .arguments
            .iter()
            .filter(|a| self.defends_unchecked(s, a))
            .cloned()
            .collect())
    }

    pub fn admissible(&self, s: &BTreeSet<ArgumentId>) -> Result<bool> {
        Ok(self.conflict_free(s)? && s.iter().all(|a| self.defends_unchecked(s, a)))
    }

    /// All extensions under `semantics`, canonically ordered and duplicate free.
    ///
    /// The grounded semantics always yields exactly one extension; the stable
    /// semantics may yield none.
    pub fn extensions(&self, semantics: Semantics) -> Vec<Extension> {
        let indexed = search::Indexed::new(self);
        let mut found: Vec<Extension> = match semantics {
            Semantics::Grounded => vec![indexed.grounded()],
            Semantics::Complete => indexed.complete(),
            Semantics::Stable => indexed.stable(),
            Semantics::Preferred => maximal(indexed.complete()),
        };
        found.sort();
        found.dedup();
        found
    }

    /// Same contract as [`extensions`](Self::extensions), computed by testing
    /// every subset of the arguments against the definitions.
    pub fn extensions_oracle(&self, semantics: Semantics) -> Result<Vec<Extension>> {
        if self.len() > ORACLE_LIMIT {
            return Err(Error::TooLarge {
                what: "framework",
                size: self.len(),
                limit: ORACLE_LIMIT,
            });
        }
        let mut found = oracle::extensions(self, semantics);
        found.sort();
        Ok(found)
    }

    /// Credulous: member of some extension. Skeptical: member of every
    /// extension, vacuously true when there is none.
    pub fn accepted(
        &self,
        a: &ArgumentId,
        semantics: Semantics,
        mode: AcceptanceMode,
    ) -> Result<bool> {
        self.check_known([a])?;
        let extensions = self.extensions(semantics);
        Ok(match mode {
            AcceptanceMode::Credulous => extensions.iter().any(|e| e.contains(a)),
            AcceptanceMode::Skeptical => extensions.iter().all(|e| e.contains(a)),
        })
    }
}

fn maximal(candidates: Vec<Extension>) -> Vec<Extension> {
    candidates
        .iter()
        .filter(|e| {
            !candidates
                .iter()
                .any(|other| other.len() > e.len() && e.is_subset(other))
        })
        .cloned()
        .collect()
}
