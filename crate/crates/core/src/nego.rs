//! Two-agent negotiation over a shared debate framework.
//!
//! Each offer is backed by one practical argument. Agents take turns; on its
//! turn an agent either utters one argument from its portfolio that defends
//! the practical argument of its current goal, proposes its goal, or passes.
//! A stability-aware agent drops a goal as soon as its practical argument is
//! stable-rejected with respect to the agent's model of the universe, and
//! moves on to its next preferred offer.
//!
//! The true universe decides which attacks appear when an argument is
//! uttered. An agent's model only drives its own decisions.

use std::collections::BTreeSet;
use std::fmt;

use crate::af::{AcceptanceMode, ArgumentId, ArgumentationFramework, Semantics};
use crate::error::{Error, Result};
use crate::stability::{StabilityProblem, StabilityVerdict, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AgentId {
    Agent1,
    Agent2,
}

impl AgentId {
    fn index(self) -> usize {
        match self {
            AgentId::Agent1 => 0,
            AgentId::Agent2 => 1,
        }
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AgentId::Agent1 => "agent1",
            AgentId::Agent2 => "agent2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Offer {
    pub name: String,
    pub practical_argument: ArgumentId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgentSpec {
    pub id: AgentId,
    /// Offer names, most preferred first.
    pub preference: Vec<String>,
    pub portfolio: BTreeSet<ArgumentId>,
    /// The agent's belief about which arguments and attacks may still appear.
    pub model: Universe,
}

impl AgentSpec {
    fn rank(&self, offer: &str) -> Option<usize> {
        self.preference.iter().position(|o| o == offer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegotiationScenario {
    pub true_universe: Universe,
    pub offers: Vec<Offer>,
    pub agents: [AgentSpec; 2],
    pub initial_debate: BTreeSet<ArgumentId>,
    pub semantics: Semantics,
    pub mode: AcceptanceMode,
}

/// Whether agents consult stability at all. The baseline keeps every goal
/// until the end and never treats an offer as lost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Policy {
    #[default]
    StabilityAware,
    Baseline,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Utter(ArgumentId),
    Pass,
    Propose(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Agreement(String),
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Event {
    Utter {
        agent: AgentId,
        argument: ArgumentId,
    },
    Pass {
        agent: AgentId,
    },
    GoalSwitch {
        agent: AgentId,
        from: String,
        to: Option<String>,
        /// Verdict for the practical argument of the abandoned offer.
        reason: StabilityVerdict,
    },
    Propose {
        agent: AgentId,
        offer: String,
    },
    Accept {
        agent: AgentId,
        offer: String,
    },
    Terminate(Outcome),
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::Utter { agent, argument } => write!(f, "{agent} utters {argument}"),
            Event::Pass { agent } => write!(f, "{agent} passes"),
            Event::GoalSwitch {
                agent,
                from,
                to,
                reason,
            } => write!(
                f,
                "{agent} switches goal {from} -> {} ({})",
                to.as_deref().unwrap_or("none"),
                reason.outcome()
            ),
            Event::Propose { agent, offer } => write!(f, "{agent} proposes {offer}"),
            Event::Accept { agent, offer } => write!(f, "{agent} accepts {offer}"),
            Event::Terminate(Outcome::Agreement(offer)) => write!(f, "AGREEMENT {offer}"),
            Event::Terminate(Outcome::Failure) => f.write_str("FAILURE"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub events: Vec<Event>,
    /// Debate framework when the negotiation stopped.
    pub final_debate: ArgumentationFramework,
}

impl Transcript {
    pub fn outcome(&self) -> &Outcome {
        match self.events.last() {
            Some(Event::Terminate(outcome)) => outcome,
            _ => unreachable!("transcripts always end with Terminate"),
        }
    }

    /// One event per line, newline terminated.
    pub fn render(&self) -> String {
        self.events.iter().map(|e| format!("{e}\n")).collect()
    }
}

/// Per-agent state kept by the engine between turns.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AgentMemory {
    pub goal: Option<String>,
    /// Offers this agent proposed that the opponent did not accept.
    pub rejected: BTreeSet<String>,
    /// Last proposal and the debate size at which it was made.
    pub last_proposal: Option<(String, usize)>,
}

impl NegotiationScenario {
    pub fn agent(&self, id: AgentId) -> &AgentSpec {
        &self.agents[id.index()]
    }

    pub fn offer(&self, name: &str) -> Option<&Offer> {
        self.offers.iter().find(|o| o.name == name)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Scenario(msg));
        let universe = self.true_universe.arguments();
        if self.offers.is_empty() {
            return bad("no offers".into());
        }
        let mut names = BTreeSet::new();
        let mut practical = BTreeSet::new();
        for offer in &self.offers {
            if !names.insert(offer.name.as_str()) {
                return bad(format!("offer {} declared twice", offer.name));
            }
            if !practical.insert(&offer.practical_argument) {
                return bad(format!(
                    "practical argument {} supports two offers",
                    offer.practical_argument
                ));
            }
            if !universe.contains(&offer.practical_argument) {
                return bad(format!(
                    "practical argument {} is not in the universe",
                    offer.practical_argument
                ));
            }
            if !self.initial_debate.contains(&offer.practical_argument) {
                return bad(format!(
                    "practical argument {} is not in the initial debate",
                    offer.practical_argument
                ));
            }
        }
        if let Some(a) = self.initial_debate.iter().find(|a| !universe.contains(a)) {
            return bad(format!("initial argument {a} is not in the universe"));
        }
        for (expected, agent) in [AgentId::Agent1, AgentId::Agent2].iter().zip(&self.agents) {
            if agent.id != *expected {
                return bad(format!("agent slot {expected} holds {}", agent.id));
            }
            let ranked: BTreeSet<&str> = agent.preference.iter().map(String::as_str).collect();
            if ranked != names || agent.preference.len() != names.len() {
                return bad(format!("{} must rank every offer exactly once", agent.id));
            }
            let model = agent.model.arguments();
            if let Some(a) = agent.portfolio.iter().find(|a| !universe.contains(a)) {
                return bad(format!("{} portfolio argument {a} is not in the universe", agent.id));
            }
            if let Some(a) = agent.portfolio.iter().find(|a| !model.contains(a)) {
                return bad(format!("{} portfolio argument {a} is not in its model", agent.id));
            }
            if let Some(a) = self.initial_debate.iter().find(|a| !model.contains(a)) {
                return bad(format!("{} model lacks initial argument {a}", agent.id));
            }
        }
        Ok(())
    }
}

fn check_model(agent: &AgentSpec, debate: &ArgumentationFramework) -> Result<()> {
    agent
        .model
        .check_subframework(debate)
        .map_err(|e| Error::ModelInconsistency {
            agent: agent.id.to_string(),
            detail: e.to_string(),
        })
}

/// Stability of `target` in `debate` as seen through the agent's model.
pub fn verdict_for(
    agent: &AgentSpec,
    debate: &ArgumentationFramework,
    target: &ArgumentId,
    scenario: &NegotiationScenario,
) -> Result<StabilityVerdict> {
    check_model(agent, debate)?;
    StabilityProblem::new(
        agent.model.clone(),
        debate.clone(),
        target.clone(),
        scenario.semantics,
        scenario.mode,
    )?
    .check()
}

fn ranked_offers<'s>(agent: &AgentSpec, scenario: &'s NegotiationScenario) -> Vec<&'s Offer> {
    agent
        .preference
        .iter()
        .filter_map(|name| scenario.offer(name))
        .collect()
}

/// The most preferred offer whose practical argument is not stable-rejected
/// for this agent; always the top offer under the baseline policy.
pub fn current_goal<'s>(
    agent: &AgentSpec,
    debate: &ArgumentationFramework,
    scenario: &'s NegotiationScenario,
    policy: Policy,
) -> Result<Option<&'s Offer>> {
    check_model(agent, debate)?;
    let offers = ranked_offers(agent, scenario);
    if policy == Policy::Baseline {
        return Ok(offers.first().copied());
    }
    for offer in offers {
        if !verdict_for(agent, debate, &offer.practical_argument, scenario)?.is_stable_rejected() {
            return Ok(Some(offer));
        }
    }
    Ok(None)
}

/// Unused portfolio arguments that, once added, attack an attacker of
/// `practical` without attacking it themselves (per the agent's model).
pub fn defending_arguments(
    agent: &AgentSpec,
    debate: &ArgumentationFramework,
    practical: &ArgumentId,
) -> Vec<ArgumentId> {
    agent
        .portfolio
        .iter()
        .filter(|x| !debate.contains(x))
        .filter(|x| {
            let mut arguments = debate.arguments().clone();
            arguments.insert((*x).clone());
            let extended = agent.model.induced(&arguments);
            !extended.attacks_pair(x, practical)
                && extended
                    .attackers_of(practical)
                    .any(|b| extended.attacks_pair(x, b))
        })
        .cloned()
        .collect()
}

pub fn select_move(
    agent: &AgentSpec,
    debate: &ArgumentationFramework,
    scenario: &NegotiationScenario,
    memory: &AgentMemory,
    policy: Policy,
) -> Result<Move> {
    let Some(goal) = current_goal(agent, debate, scenario, policy)? else {
        return Ok(Move::Pass);
    };
    if let Some(x) = defending_arguments(agent, debate, &goal.practical_argument)
        .into_iter()
        .next()
    {
        return Ok(Move::Utter(x));
    }
    let already = memory
        .last_proposal
        .as_ref()
        .is_some_and(|(offer, size)| *offer == goal.name && *size == debate.len());
    Ok(if already {
        Move::Pass
    } else {
        Move::Propose(goal.name.clone())
    })
}

/// Whether `agent` accepts a proposal of `offer`.
///
/// The offer must not be stable-rejected for the agent, and every offer it
/// strictly prefers must be given up: stable-rejected, or already proposed by
/// the agent, turned down, and with no portfolio argument left to defend it.
pub fn accepts_proposal(
    agent: &AgentSpec,
    offer: &str,
    debate: &ArgumentationFramework,
    scenario: &NegotiationScenario,
    memory: &AgentMemory,
    policy: Policy,
) -> Result<bool> {
    let aware = policy == Policy::StabilityAware;
    let Some(proposed) = scenario.offer(offer) else {
        return Err(Error::Scenario(format!("unknown offer {offer}")));
    };
    check_model(agent, debate)?;
    if aware
        && verdict_for(agent, debate, &proposed.practical_argument, scenario)?.is_stable_rejected()
    {
        return Ok(false);
    }
    let rank = agent.rank(offer).expect("validated preference");
    for better in &ranked_offers(agent, scenario)[..rank] {
        let lost = aware
            && verdict_for(agent, debate, &better.practical_argument, scenario)?
                .is_stable_rejected();
        let exhausted = memory.rejected.contains(&better.name)
            && defending_arguments(agent, debate, &better.practical_argument).is_empty();
        if !(lost || exhausted) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs the protocol to completion. Agent 1 moves first.
///
/// Stops on an accepted proposal, on two consecutive passes, or after
/// `2 * (|universe| + 1)` turns.
pub fn run_negotiation(scenario: &NegotiationScenario, policy: Policy) -> Result<Transcript> {
    scenario.validate()?;
    let universe = &scenario.true_universe;
    let mut debate = universe.induced(&scenario.initial_debate);
    let mut memories: [AgentMemory; 2] = Default::default();
    for (memory, agent) in memories.iter_mut().zip(&scenario.agents) {
        memory.goal = agent.preference.first().cloned();
    }

    let mut events = Vec::new();
    let mut pending: Option<(usize, String)> = None;
    let mut passes = 0;
    let mut turn = 0;
    let cap = 2 * (universe.arguments().len() + 1);

    let outcome = 'protocol: {
        for _ in 0..cap {
            let agent = &scenario.agents[turn];

            if let Some((proposer, offer)) = pending.take() {
                if accepts_proposal(agent, &offer, &debate, scenario, &memories[turn], policy)? {
                    events.push(Event::Accept {
                        agent: agent.id,
                        offer: offer.clone(),
                    });
                    break 'protocol Outcome::Agreement(offer);
                }
                memories[proposer].rejected.insert(offer);
            }

            let goal = current_goal(agent, &debate, scenario, policy)?.map(|o| o.name.clone());
            if goal != memories[turn].goal {
                if let Some(from) = memories[turn].goal.clone() {
                    let practical = &scenario.offer(&from).expect("validated").practical_argument;
                    events.push(Event::GoalSwitch {
                        agent: agent.id,
                        from,
                        to: goal.clone(),
                        reason: verdict_for(agent, &debate, practical, scenario)?,
                    });
                }
                memories[turn].goal = goal;
            }

            match select_move(agent, &debate, scenario, &memories[turn], policy)? {
                Move::Utter(argument) => {
                    let mut arguments = debate.arguments().clone();
                    arguments.insert(argument.clone());
                    debate = universe.induced(&arguments);
                    passes = 0;
                    events.push(Event::Utter {
                        agent: agent.id,
                        argument,
                    });
                }
                Move::Propose(offer) => {
                    memories[turn].last_proposal = Some((offer.clone(), debate.len()));
                    pending = Some((turn, offer.clone()));
                    passes = 0;
                    events.push(Event::Propose {
                        agent: agent.id,
                        offer,
                    });
                }
                Move::Pass => {
                    passes += 1;
                    events.push(Event::Pass { agent: agent.id });
                    if passes == 2 {
                        break 'protocol Outcome::Failure;
                    }
                }
            }
            turn = 1 - turn;
        }
        Outcome::Failure
    };

    events.push(Event::Terminate(outcome));
    Ok(Transcript {
        events,
        final_debate: debate,
    })
}
