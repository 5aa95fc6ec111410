//! Sectioned negotiation scenario files.
//!
//! ```text
//! [universe]
//! arg(p1).
//! ...
//! [offers]
//! offer o1 p1
//! [agent 1]
//! prefers: o3 > o2 > o1
//! portfolio: a1 a2 a3
//! model:
//! arg(p1).
//! ...
//! [agent 2]
//! ...
//! [initial]
//! p1 p2 p3
//! [protocol]
//! semantics: st
//! mode: credulous
//! ```
//!
//! `model:` is optional and must be the last entry of an agent block; the
//! following lines up to the next section are APX statements. Without it the
//! agent's model is the true universe. `[protocol]` defaults to `st` and
//! `credulous`.

use std::collections::BTreeSet;

use super::apx::{self, ApxValue};
use crate::af::{AcceptanceMode, ArgumentId, ArgumentationFramework, Semantics};
use crate::error::{Error, Result};
use crate::nego::{AgentId, AgentSpec, NegotiationScenario, Offer};
use crate::stability::Universe;

type Lines<'a> = Vec<(usize, &'a str)>;

struct Section<'a> {
    name: String,
    line: usize,
    body: Lines<'a>,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn is_ignored(text: &str) -> bool {
    let t = text.trim();
    t.is_empty() || t.starts_with('%')
}

fn split_sections(text: &str) -> Result<Vec<Section<'_>>> {
    let mut sections: Vec<Section> = Vec::new();
    for (line, raw) in apx::numbered(text) {
        let t = raw.trim();
        if let Some(name) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let name = name.split_whitespace().collect::<Vec<_>>().join(" ");
            if sections.iter().any(|s| s.name == name) {
                return Err(syntax(line, format!("section [{name}] appears twice")));
            }
            sections.push(Section {
                name,
                line,
                body: Vec::new(),
            });
        } else if let Some(current) = sections.last_mut() {
            current.body.push((line, raw));
        } else if !is_ignored(raw) {
            return Err(syntax(line, "content before the first section"));
        }
    }
    Ok(sections)
}

fn parse_ids(line: usize, text: &str) -> Result<BTreeSet<ArgumentId>> {
    text.split_whitespace()
        .map(|t| ArgumentId::new(t).map_err(|_| syntax(line, format!("invalid argument name {t:?}"))))
        .collect()
}

fn parse_framework(body: &Lines, header_line: usize) -> Result<ArgumentationFramework> {
    match apx::parse_lines(body.iter().copied())? {
        ApxValue::Framework(af) => Ok(af),
        ApxValue::Incomplete(_) => Err(syntax(header_line, "uncertain arguments are not allowed here")),
    }
}

fn parse_offers(body: &Lines) -> Result<Vec<Offer>> {
    let mut offers = Vec::new();
    for &(line, raw) in body.iter().filter(|(_, raw)| !is_ignored(raw)) {
        match raw.split_whitespace().collect::<Vec<_>>()[..] {
            ["offer", name, practical] => offers.push(Offer {
                name: name.to_string(),
                practical_argument: ArgumentId::new(practical)
                    .map_err(|_| syntax(line, format!("invalid argument name {practical:?}")))?,
            }),
            _ => return Err(syntax(line, "expected `offer <name> <practical-argument>`")),
        }
    }
    Ok(offers)
}

fn parse_agent(
    id: AgentId,
    section: &Section,
    universe: &ArgumentationFramework,
) -> Result<AgentSpec> {
    let mut preference = None;
    let mut portfolio = None;
    let mut model = None;
    let mut lines = section.body.iter().copied();
    while let Some((line, raw)) = lines.next() {
        if is_ignored(raw) {
            continue;
        }
        let Some((key, value)) = raw.split_once(':') else {
            return Err(syntax(line, "expected `key: value`"));
        };
        match key.trim() {
            "prefers" => {
                let ranking: Vec<String> = value.split('>').map(|o| o.trim().to_string()).collect();
                if ranking.iter().any(|o| o.is_empty() || o.contains(char::is_whitespace)) {
                    return Err(syntax(line, "expected `prefers: o1 > o2 > ...`"));
                }
                preference = Some(ranking);
            }
            "portfolio" => portfolio = Some(parse_ids(line, value)?),
            "model" => {
                if !value.trim().is_empty() {
                    return Err(syntax(line, "model statements go on the following lines"));
                }
                let rest: Lines = lines.by_ref().collect();
                model = Some(parse_framework(&rest, line)?);
            }
            other => return Err(syntax(line, format!("unknown agent key {other:?}"))),
        }
    }
    let section_line = section.line;
    Ok(AgentSpec {
        id,
        preference: preference.ok_or_else(|| syntax(section_line, "agent block needs `prefers:`"))?,
        portfolio: portfolio.unwrap_or_default(),
        model: Universe::new(model.unwrap_or_else(|| universe.clone())),
    })
}

fn parse_protocol(body: &Lines) -> Result<(Semantics, AcceptanceMode)> {
    let mut semantics = Semantics::Stable;
    let mut mode = AcceptanceMode::Credulous;
    for &(line, raw) in body.iter().filter(|(_, raw)| !is_ignored(raw)) {
        let Some((key, value)) = raw.split_once(':') else {
            return Err(syntax(line, "expected `key: value`"));
        };
        match key.trim() {
            "semantics" => semantics = value.trim().parse().map_err(|e: String| syntax(line, e))?,
            "mode" => mode = value.trim().parse().map_err(|e: String| syntax(line, e))?,
            other => return Err(syntax(line, format!("unknown protocol key {other:?}"))),
        }
    }
    Ok((semantics, mode))
}

pub fn parse_scenario(text: &str) -> Result<NegotiationScenario> {
    let sections = split_sections(text)?;
    let find = |name: &str| sections.iter().find(|s| s.name == name);
    let require = |name: &str| {
        find(name).ok_or_else(|| Error::Scenario(format!("missing section [{name}]")))
    };
    if let Some(s) = sections.iter().find(|s| {
        !matches!(
            s.name.as_str(),
            "universe" | "offers" | "agent 1" | "agent 2" | "initial" | "protocol"
        )
    }) {
        return Err(syntax(s.line, format!("unknown section [{}]", s.name)));
    }

    let universe_section = require("universe")?;
    let universe = parse_framework(&universe_section.body, universe_section.line)?;
    let offers = parse_offers(&require("offers")?.body)?;
    let agent1 = parse_agent(AgentId::Agent1, require("agent 1")?, &universe)?;
    let agent2 = parse_agent(AgentId::Agent2, require("agent 2")?, &universe)?;
    let mut initial_debate = BTreeSet::new();
    for &(line, raw) in &require("initial")?.body {
        if !is_ignored(raw) {
            initial_debate.extend(parse_ids(line, raw)?);
        }
    }
    let (semantics, mode) = match find("protocol") {
        Some(s) => parse_protocol(&s.body)?,
        None => (Semantics::Stable, AcceptanceMode::Credulous),
    };

    let scenario = NegotiationScenario {
        true_universe: Universe::new(universe),
        offers,
        agents: [agent1, agent2],
        initial_debate,
        semantics,
        mode,
    };
    scenario.validate()?;
    Ok(scenario)
}
