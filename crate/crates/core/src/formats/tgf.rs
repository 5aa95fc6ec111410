use std::collections::BTreeSet;

use crate::af::{ArgumentId, ArgumentationFramework};
use crate::error::{Error, Result};

fn token(line: usize, raw: &str) -> Result<ArgumentId> {
    ArgumentId::new(raw).map_err(|_| Error::Syntax {
        line,
        message: format!("invalid argument name {raw:?}"),
    })
}

/// Parses trivial graph format: node lines, a `#` line, then `src dst` edge lines.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut arguments = BTreeSet::new();
    let mut attacks = BTreeSet::new();
    let mut in_edges = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() {
            continue;
        }
        if text == "#" {
            if in_edges {
                return Err(Error::Syntax {
                    line,
                    message: "second `#` separator".into(),
                });
            }
            in_edges = true;
            continue;
        }
        let fields: Vec<&str> = text.split_whitespace().collect();
        if !in_edges {
            let [name] = fields[..] else {
                return Err(Error::Syntax {
                    line,
                    message: format!("expected a single node name, found {text:?}"),
                });
            };
            let a = token(line, name)?;
            if !arguments.insert(a.clone()) {
                return Err(Error::DuplicateDeclaration {
                    line,
                    id: a.to_string(),
                });
            }
        } else {
            let [src, dst] = fields[..] else {
                return Err(Error::Syntax {
                    line,
                    message: format!("expected `<src> <dst>`, found {text:?}"),
                });
            };
            let (src, dst) = (token(line, src)?, token(line, dst)?);
            for end in [&src, &dst] {
                if !arguments.contains(end) {
                    return Err(Error::UndeclaredEndpoint {
                        line,
                        id: end.to_string(),
                    });
                }
            }
            attacks.insert((src, dst));
        }
    }

    if !in_edges {
        return Err(Error::MissingSeparator);
    }
    ArgumentationFramework::new(arguments, attacks)
}

pub fn serialize_tgf(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for a in af.arguments() {
        out.push_str(&format!("{a}\n"));
    }
    out.push_str("#\n");
    for (a, b) in af.attacks() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
