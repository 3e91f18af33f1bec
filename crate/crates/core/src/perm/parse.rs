//! Cycle notation: `(1,2,3)(4,5)`, `(1 2 3)`, `()`. Points are one-based in text.

use crate::error::{Error, Result};

/// Parses one permutation's cycles into zero-based point lists.
pub(super) fn cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    let mut out = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Parse(format!("expected `(` in cycle notation `{text}`")));
        };
        let end = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?;
        let inner = &body[..end];
        let points = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| match s.parse::<usize>() {
                Ok(0) => Err(Error::Parse("points are numbered from 1".into())),
                Ok(x) => Ok(x - 1),
                Err(_) => Err(Error::Parse(format!("bad point `{s}` in `{text}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if points.len() > 1 {
            out.push(points);
        }
        rest = &body[end + 1..];
    }
    Ok(out)
}

/// Splits a generator list such as `Group([ (1,2), (3,4)(5,6) ])` into
/// per-generator cycle lists.
pub(super) fn generator_list(text: &str) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut s = text.trim();
    if let Some(inner) = s.strip_prefix("Group(").and_then(|r| r.strip_suffix(')')) {
        s = inner.trim();
    }
    for (open, close) in [('[', ']'), ('<', '>'), ('⟨', '⟩'), ('{', '}')] {
        if let Some(inner) = s.strip_prefix(open).and_then(|r| r.strip_suffix(close)) {
            s = inner.trim();
        }
    }
    let mut gens = Vec::new();
    let mut current = String::new();
    let mut depth = 0;
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth -= 1;
                current.push(c);
            }
            ',' | ';' if depth == 0 => {
                if !current.trim().is_empty() {
                    gens.push(cycles(&current)?);
                }
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{text}`")));
    }
    if !current.trim().is_empty() {
        gens.push(cycles(&current)?);
    }
    Ok(gens)
}
