use std::collections::BTreeSet;

use crate::af::{ArgumentId, ArgumentationFramework, Attack};
use crate::error::{Error, Result};
use crate::iaf::IncompleteAF;

/// A parsed APX document: a plain framework unless `?arg` statements occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApxValue {
    Framework(ArgumentationFramework),
    Incomplete(IncompleteAF),
}

#[derive(Debug, PartialEq, Eq)]
enum Statement {
    Arg(ArgumentId),
    UncertainArg(ArgumentId),
    Att(ArgumentId, ArgumentId),
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_id(line: usize, raw: &str) -> Result<ArgumentId> {
    ArgumentId::new(raw.trim()).map_err(|_| syntax(line, format!("invalid argument name {:?}", raw.trim())))
}

/// Parses one non-blank, non-comment line.
fn parse_statement(line: usize, text: &str) -> Result<Statement> {
    let body = text
        .strip_suffix('.')
        .ok_or_else(|| syntax(line, "statement must end with `.`"))?
        .trim_end();
    let (keyword, rest) = match body.find('(') {
        Some(open) => (body[..open].trim(), &body[open + 1..]),
        None => return Err(syntax(line, format!("expected `(` in {text:?}"))),
    };
    let inner = rest
        .trim_end()
        .strip_suffix(')')
        .ok_or_else(|| syntax(line, "missing closing `)`"))?;
    match keyword {
        "arg" => Ok(Statement::Arg(parse_id(line, inner)?)),
        "?arg" => Ok(Statement::UncertainArg(parse_id(line, inner)?)),
        "att" => {
            let (src, dst) = inner
                .split_once(',')
                .ok_or_else(|| syntax(line, "att needs two arguments"))?;
            Ok(Statement::Att(parse_id(line, src)?, parse_id(line, dst)?))
        }
        other => Err(syntax(line, format!("unknown statement {other:?}"))),
    }
}

/// Parses APX statements from `(line number, text)` pairs.
pub(crate) fn parse_lines<'a>(lines: impl IntoIterator<Item = (usize, &'a str)>) -> Result<ApxValue> {
    let mut certain = BTreeSet::new();
    let mut uncertain = BTreeSet::new();
    let mut attacks: Vec<(usize, Attack)> = Vec::new();

    for (line, raw) in lines {
        let text = raw.trim();
        if text.is_empty() || text.starts_with('%') {
            continue;
        }
        match parse_statement(line, text)? {
            Statement::Arg(a) | Statement::UncertainArg(a)
                if certain.contains(&a) || uncertain.contains(&a) =>
            {
                return Err(Error::DuplicateDeclaration {
                    line,
                    id: a.to_string(),
                })
            }
            Statement::Arg(a) => {
                certain.insert(a);
            }
            Statement::UncertainArg(a) => {
                uncertain.insert(a);
            }
            Statement::Att(a, b) => attacks.push((line, (a, b))),
        }
    }

    let declared = |a: &ArgumentId| certain.contains(a) || uncertain.contains(a);
    for (line, (a, b)) in &attacks {
        if let Some(missing) = [a, b].into_iter().find(|x| !declared(x)) {
            return Err(Error::UndeclaredEndpoint {
                line: *line,
                id: missing.to_string(),
            });
        }
    }
    let attacks: BTreeSet<Attack> = attacks.into_iter().map(|(_, att)| att).collect();

    if uncertain.is_empty() {
        Ok(ApxValue::Framework(ArgumentationFramework::new(certain, attacks)?))
    } else {
        Ok(ApxValue::Incomplete(IncompleteAF::new(certain, uncertain, attacks)?))
    }
}

pub(crate) fn numbered(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l))
}

pub fn parse_apx(text: &str) -> Result<ApxValue> {
    parse_lines(numbered(text))
}

/// Parses a document that must not contain `?arg` statements.
pub fn parse_af_apx(text: &str) -> Result<ArgumentationFramework> {
    match parse_apx(text)? {
        ApxValue::Framework(af) => Ok(af),
        ApxValue::Incomplete(_) => Err(Error::UnexpectedIncomplete),
    }
}

/// Parses a document as an incomplete framework; a plain framework becomes one
/// without uncertain arguments.
pub fn parse_iaf_apx(text: &str) -> Result<IncompleteAF> {
    Ok(match parse_apx(text)? {
        ApxValue::Framework(af) => af.into(),
        ApxValue::Incomplete(iaf) => iaf,
    })
}

fn write_attacks(out: &mut String, attacks: &BTreeSet<Attack>) {
    for (a, b) in attacks {
        out.push_str(&format!("att({a},{b}).\n"));
    }
}

pub fn serialize_af_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for a in af.arguments() {
        out.push_str(&format!("arg({a}).\n"));
    }
    write_attacks(&mut out, af.attacks());
    out
}

pub fn serialize_iaf_apx(iaf: &IncompleteAF) -> String {
    let mut out = String::new();
    for a in iaf.certain() {
        out.push_str(&format!("arg({a}).\n"));
    }
    for a in iaf.uncertain() {
        out.push_str(&format!("?arg({a}).\n"));
    }
    write_attacks(&mut out, iaf.attacks());
    out
}

pub fn serialize_apx(value: &ApxValue) -> String {
    match value {
        ApxValue::Framework(af) => serialize_af_apx(af),
        ApxValue::Incomplete(iaf) => serialize_iaf_apx(iaf),
    }
}
