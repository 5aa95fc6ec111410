//! Stability of an argument's acceptance under every admissible expansion of
//! the current framework.
//!
//! The universe bounds which arguments and attacks can ever appear. A future
//! framework adds any subset of the missing universe arguments together with
//! the universe attacks among the resulting set. The verdict is computed
//! through the corresponding incomplete framework: the current arguments are
//! certain, the rest of the universe is uncertain, and its completions are
//! exactly the future frameworks.

use std::collections::BTreeSet;
use std::fmt;

use crate::af::{AcceptanceMode, ArgumentId, ArgumentationFramework, Semantics};
use crate::error::{Error, Result};
use crate::iaf::{IncompleteAF, NecessityMode, COMPLETION_LIMIT};

/// The framework bounding every future debate state.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Universe(ArgumentationFramework);

impl Universe {
    pub fn new(framework: ArgumentationFramework) -> Self {
        Universe(framework)
    }

    pub fn framework(&self) -> &ArgumentationFramework {
        &self.0
    }

    pub fn arguments(&self) -> &BTreeSet<ArgumentId> {
        self.0.arguments()
    }

    /// The valid framework over `arguments`, with attacks induced by the universe.
    pub fn induced(&self, arguments: &BTreeSet<ArgumentId>) -> ArgumentationFramework {
        self.0.restrict(arguments)
    }

    /// Checks that `af` uses only universe arguments and exactly the universe
    /// attacks among them.
    pub fn check_subframework(&self, af: &ArgumentationFramework) -> Result<()> {
        if let Some(a) = af.arguments().iter().find(|a| !self.0.contains(a)) {
            return Err(Error::NotASubframework(format!(
                "argument {a} is not in the universe"
            )));
        }
        let induced = self.induced(af.arguments());
        if let Some((a, b)) = af.attacks().difference(induced.attacks()).next() {
            return Err(Error::NotASubframework(format!(
                "attack ({a},{b}) is not in the universe"
            )));
        }
        if let Some((a, b)) = induced.attacks().difference(af.attacks()).next() {
            return Err(Error::NotASubframework(format!(
                "universe attack ({a},{b}) is missing"
            )));
        }
        Ok(())
    }
}

impl From<ArgumentationFramework> for Universe {
    fn from(af: ArgumentationFramework) -> Self {
        Universe(af)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityProblem {
    pub universe: Universe,
    pub current: ArgumentationFramework,
    pub target: ArgumentId,
    pub semantics: Semantics,
    pub mode: AcceptanceMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StabilityOutcome {
    StableAccepted,
    StableRejected,
    Unstable,
}

impl StabilityOutcome {
    pub fn label(self) -> &'static str {
        match self {
            StabilityOutcome::StableAccepted => "STABLE-ACCEPTED",
            StabilityOutcome::StableRejected => "STABLE-REJECTED",
            StabilityOutcome::Unstable => "UNSTABLE",
        }
    }

    pub fn is_stable(self) -> bool {
        self != StabilityOutcome::Unstable
    }
}

impl fmt::Display for StabilityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Result of a stability check. An unstable verdict carries the first future
/// framework (in completion order) accepting the target and the first one
/// rejecting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityVerdict {
    StableAccepted,
    StableRejected,
    Unstable {
        accepting: ArgumentationFramework,
        rejecting: ArgumentationFramework,
    },
}

impl StabilityVerdict {
    pub fn outcome(&self) -> StabilityOutcome {
        match self {
            StabilityVerdict::StableAccepted => StabilityOutcome::StableAccepted,
            StabilityVerdict::StableRejected => StabilityOutcome::StableRejected,
            StabilityVerdict::Unstable { .. } => StabilityOutcome::Unstable,
        }
    }

    pub fn is_stable_rejected(&self) -> bool {
        matches!(self, StabilityVerdict::StableRejected)
    }

    pub fn witnesses(&self) -> Option<(&ArgumentationFramework, &ArgumentationFramework)> {
        match self {
            StabilityVerdict::Unstable {
                accepting,
                rejecting,
            } => Some((accepting, rejecting)),
            _ => None,
        }
    }
}

impl StabilityProblem {
    /// Builds a problem and checks it.
    pub fn new(
        universe: Universe,
        current: ArgumentationFramework,
        target: ArgumentId,
        semantics: Semantics,
        mode: AcceptanceMode,
    ) -> Result<Self> {
        let problem = StabilityProblem {
            universe,
            current,
            target,
            semantics,
            mode,
        };
        problem.validate()?;
        Ok(problem)
    }

    pub fn validate(&self) -> Result<()> {
        self.universe.check_subframework(&self.current)?;
        if !self.current.contains(&self.target) {
            return Err(Error::MissingTarget(self.target.clone()));
        }
        Ok(())
    }

    /// Universe arguments not yet in the current framework, sorted.
    pub fn missing(&self) -> BTreeSet<ArgumentId> {
        self.universe
            .arguments()
            .difference(self.current.arguments())
            .cloned()
            .collect()
    }

    /// Every valid framework extending the current one, the current framework
    /// first.
    pub fn future_afs(&self) -> Result<Vec<ArgumentationFramework>> {
        self.validate()?;
        let missing: Vec<ArgumentId> = self.missing().into_iter().collect();
        if missing.len() > COMPLETION_LIMIT {
            return Err(Error::TooLarge {
                what: "set of missing universe arguments",
                size: missing.len(),
                limit: COMPLETION_LIMIT,
            });
        }
        Ok((0u64..1 << missing.len())
            .map(|mask| {
                let mut arguments = self.current.arguments().clone();
                arguments.extend(
                    missing
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, a)| a.clone()),
                );
                self.universe.induced(&arguments)
            })
            .collect())
    }

    pub fn corresponding_iaf(&self) -> Result<IncompleteAF> {
        self.validate()?;
        IncompleteAF::new(
            self.current.arguments().clone(),
            self.missing(),
            self.universe.framework().attacks().clone(),
        )
    }

    /// Stable-accepted iff the target is necessarily accepted in the
    /// corresponding incomplete framework; stable-rejected iff it is not even
    /// possibly accepted.
    pub fn check(&self) -> Result<StabilityVerdict> {
        let iaf = self.corresponding_iaf()?;
        let (a, sem, mode) = (&self.target, self.semantics, self.mode);
        if iaf.accepted(a, sem, mode, NecessityMode::Necessary)? {
            return Ok(StabilityVerdict::StableAccepted);
        }
        if !iaf.accepted(a, sem, mode, NecessityMode::Possible)? {
            return Ok(StabilityVerdict::StableRejected);
        }

        let mut accepting = None;
        let mut rejecting = None;
        for completion in iaf.completions_iter()? {
            let slot = if completion.accepted(a, sem, mode)? {
                &mut accepting
            } else {
                &mut rejecting
            };
            slot.get_or_insert(completion);
            if accepting.is_some() && rejecting.is_some() {
                break;
            }
        }
        match (accepting, rejecting) {
            (Some(accepting), Some(rejecting)) => Ok(StabilityVerdict::Unstable {
                accepting,
                rejecting,
            }),
            _ => unreachable!("neither necessary nor impossible implies both witnesses"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(name: &str) -> ArgumentId {
        ArgumentId::new(name).unwrap()
    }

    fn set(names: &[&str]) -> BTreeSet<ArgumentId> {
        names.iter().map(|n| id(n)).collect()
    }

    fn sample_universe() -> Universe {
        ArgumentationFramework::from_names(
            &["a1", "a2", "a3", "a4", "a5", "a6", "a7"],
            &[
                ("a1", "a2"),
                ("a2", "a3"),
                ("a3", "a4"),
                ("a4", "a3"),
                ("a4", "a5"),
                ("a5", "a6"),
                ("a7", "a5"),
            ],
        )
        .unwrap()
        .into()
    }

    fn sample_problem(target: &str, semantics: Semantics, mode: AcceptanceMode) -> StabilityProblem {
        let universe = sample_universe();
        let current = universe.induced(&set(&["a3", "a4", "a5", "a6", "a7"]));
        StabilityProblem::new(universe, current, id(target), semantics, mode).unwrap()
    }

    #[test]
    fn validation() {
        let universe = sample_universe();
        let whole = universe.framework().clone();
        assert!(StabilityProblem::new(
            universe.clone(),
            whole,
            id("a1"),
            Semantics::Stable,
            AcceptanceMode::Credulous
        )
        .is_ok());

        let extra_attack =
            ArgumentationFramework::from_names(&["a3", "a5"], &[("a3", "a5")]).unwrap();
        let err = StabilityProblem::new(
            universe.clone(),
            extra_attack,
            id("a3"),
            Semantics::Stable,
            AcceptanceMode::Credulous,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotASubframework(ref m) if m.contains("(a3,a5)")));

        let missing_attack = ArgumentationFramework::from_names(&["a3", "a4"], &[]).unwrap();
        assert!(StabilityProblem::new(
            universe.clone(),
            missing_attack,
            id("a3"),
            Semantics::Stable,
            AcceptanceMode::Credulous
        )
        .is_err());

        let stranger = ArgumentationFramework::from_names(&["zz"], &[]).unwrap();
        assert!(matches!(
            StabilityProblem::new(universe.clone(), stranger, id("zz"), Semantics::Stable, AcceptanceMode::Credulous),
            Err(Error::NotASubframework(_))
        ));

        let current = universe.induced(&set(&["a3"]));
        assert_eq!(
            StabilityProblem::new(universe, current, id("a1"), Semantics::Stable, AcceptanceMode::Credulous),
            Err(Error::MissingTarget(id("a1")))
        );
    }

    #[test]
    fn sample_problem_future_frameworks() {
        let p = sample_problem("a3", Semantics::Stable, AcceptanceMode::Credulous);
        let futures = p.future_afs().unwrap();
        assert_eq!(futures.len(), 4);
        assert_eq!(futures[0], p.current);
        let iaf = p.corresponding_iaf().unwrap();
        assert_eq!(iaf.uncertain(), &set(&["a1", "a2"]));
        assert_eq!(iaf.completions().unwrap(), futures);
    }

    #[test]
    fn sample_problem_verdicts() {
        use AcceptanceMode::*;
        let unstable = sample_problem("a3", Semantics::Stable, Credulous).check().unwrap();
        let (accepting, rejecting) = unstable.witnesses().expect("unstable");
        assert_eq!(accepting, &sample_problem("a3", Semantics::Stable, Credulous).current);
        assert!(rejecting.contains(&id("a2")));

        assert_eq!(
            sample_problem("a3", Semantics::Stable, Skeptical).check().unwrap(),
            StabilityVerdict::StableRejected
        );
        for sem in Semantics::ALL {
            assert_eq!(
                sample_problem("a6", sem, Skeptical).check().unwrap(),
                StabilityVerdict::StableAccepted,
                "{sem}"
            );
        }
    }

    #[test]
    fn current_equal_to_universe_is_never_unstable() {
        let universe = sample_universe();
        let p = StabilityProblem::new(
            universe.clone(),
            universe.framework().clone(),
            id("a3"),
            Semantics::Stable,
            AcceptanceMode::Credulous,
        )
        .unwrap();
        assert_eq!(p.future_afs().unwrap().len(), 1);
        assert!(p.corresponding_iaf().unwrap().uncertain().is_empty());
        // a1 is present, so a2 is out and a3 is in the unique stable extension.
        assert_eq!(p.check().unwrap(), StabilityVerdict::StableAccepted);
    }
}
