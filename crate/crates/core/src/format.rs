//! Text formats for groups and actions.
//!
//! Group files:
//!
//! ```text
//! # comment
//! points: 3
//! gen: (0 1)
//! gen: (0 1 2)
//! ```
//!
//! Action files list, per automorphism generator, the images of the group
//! file's generators in order:
//!
//! ```text
//! aut: g0 -> (0 2 4 6 1 3 5); g1 -> (1 2)(3 6)
//! ```

use std::fmt::Write as _;

use crate::action::{action_closure, ActionGroup, Automorphism};
use crate::error::{GroupError, Result};
use crate::group::{closure_from_generators_on, ElemId, GroupTable};
use crate::perm::{parse_cycles, Permutation};

fn syntax(line: usize, message: impl Into<String>) -> GroupError {
    GroupError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines as `(1-based line number, trimmed text)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn split_key(line: usize, text: &str) -> Result<(&str, &str)> {
    let (key, value) = text
        .split_once(':')
        .ok_or_else(|| syntax(line, format!("expected 'key: value', found {text:?}")))?;
    Ok((key.trim(), value.trim()))
}

fn parse_permutation(line: usize, degree: usize, text: &str) -> Result<Permutation> {
    let cycles = parse_cycles(text).map_err(|m| syntax(line, m))?;
    if let Some(&max) = cycles.iter().flatten().max() {
        if max as usize >= degree {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: max as usize + 1,
            });
        }
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| syntax(line, e.to_string()))
}

/// The group generated by the file's permutations. Generator ids in the
/// result follow file order.
pub fn parse_group_file(text: &str, cap: usize) -> Result<GroupTable> {
    let mut degree: Option<usize> = None;
    let mut pending: Vec<(usize, &str)> = Vec::new();
    for (line, content) in content_lines(text) {
        let (key, value) = split_key(line, content)?;
        match key {
            "points" => {
                if degree.is_some() {
                    return Err(syntax(line, "duplicate 'points' line"));
                }
                let n: usize = value
                    .parse()
                    .map_err(|_| syntax(line, format!("bad point count {value:?}")))?;
                if n == 0 {
                    return Err(syntax(line, "point count must be positive"));
                }
                degree = Some(n);
            }
            "gen" => {
                // validate the cycle syntax early so errors point at this line
                parse_cycles(value).map_err(|m| syntax(line, m))?;
                pending.push((line, value));
            }
            other => return Err(syntax(line, format!("unknown key {other:?}"))),
        }
    }
    let degree = degree.ok_or_else(|| syntax(0, "missing 'points' line"))?;
    let gens = pending
        .into_iter()
        .map(|(line, value)| parse_permutation(line, degree, value))
        .collect::<Result<Vec<_>>>()?;
    closure_from_generators_on(degree, &gens, cap)
}

/// Parses `aut:` lines against `g`, which must come from a group file (it
/// needs permutation labels and file-order generators).
pub fn parse_action_file(g: &GroupTable, text: &str, cap: usize) -> Result<ActionGroup> {
    let labels = g
        .labels()
        .ok_or_else(|| GroupError::InvalidAction("group has no permutation labels".into()))?;
    let degree = labels.first().map_or(1, |p| p.degree());
    let gens = g.generators().to_vec();
    let mut auts = Vec::new();
    for (line, content) in content_lines(text) {
        let (key, value) = split_key(line, content)?;
        if key != "aut" {
            return Err(syntax(line, format!("unknown key {key:?}")));
        }
        let mut images: Vec<Option<ElemId>> = vec![None; gens.len()];
        for part in value.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, perm) = part
                .split_once("->")
                .ok_or_else(|| syntax(line, format!("expected 'gK -> cycles', found {part:?}")))?;
            let idx: usize = name
                .trim()
                .strip_prefix('g')
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| syntax(line, format!("bad generator name {:?}", name.trim())))?;
            if idx >= gens.len() {
                return Err(syntax(line, format!("group has {} generators, no g{idx}", gens.len())));
            }
            if images[idx].is_some() {
                return Err(syntax(line, format!("g{idx} given twice")));
            }
            let p = parse_permutation(line, degree, perm.trim())?;
            let id = g.id_of_label(&p).ok_or_else(|| {
                GroupError::InvalidAutomorphism(format!("line {line}: image of g{idx} is not in the group"))
            })?;
            images[idx] = Some(id);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| syntax(line, format!("missing image of g{i}"))))
            .collect::<Result<Vec<_>>>()?;
        auts.push(Automorphism::from_generator_images(g, &gens, &images)?);
    }
    action_closure(g, &auts, cap)
}

/// Group file for the right regular representation of `g` on its generators.
pub fn write_group_file(g: &GroupTable) -> String {
    let mut out = format!("points: {}\n", g.order());
    for &x in g.generators() {
        writeln!(out, "gen: {}", regular(g, x)).unwrap();
    }
    out
}

/// Action file matching [`write_group_file`].
pub fn write_action_file(g: &GroupTable, a: &ActionGroup) -> String {
    let mut out = String::new();
    for phi in a.generators() {
        let parts: Vec<String> = g
            .generators()
            .iter()
            .enumerate()
            .map(|(i, &x)| format!("g{i} -> {}", regular(g, phi.apply(x))))
            .collect();
        writeln!(out, "aut: {}", parts.join("; ")).unwrap();
    }
    out
}

fn regular(g: &GroupTable, x: ElemId) -> Permutation {
    Permutation::from_images(g.elements().map(|y| g.mul(y, x)).collect()).expect("Latin square row")
}
