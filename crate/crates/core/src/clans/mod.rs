//! Finite families of `[0,1]`-valued functions on a finite point set:
//! effect-clans, Bold algebras, and the set systems and measures they carry.

mod demos;
mod measure;

pub use demos::{midpoint_demo, midpoint_family, parity_family, powerset_grid_family, MidpointReport};
pub use measure::{
    b0_algebra, bk_verify, is_measurable, measure_from_state, s0_family, BkReport, BkRow, SetAlgebra,
    SetMeasure, Subset,
};

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use crate::algebra::{EffectAlgebra, EffectAlgebraTable, Elem, ONE_NAME, ZERO_NAME};
use crate::error::{Error, ParseError, Result};
use crate::scalar::Scalar;

/// Member limit used when the caller does not choose one.
pub const DEFAULT_CAP: usize = 4096;

/// A named function on the points of its family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctionTable<S> {
    pub name: String,
    pub values: Vec<S>,
}

impl<S: Scalar> FunctionTable<S> {
    pub fn new(name: impl Into<String>, values: Vec<S>) -> Self {
        Self {
            name: name.into(),
            values,
        }
    }

    pub fn is_characteristic(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || v.is_one())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    Clan,
    Bold,
    Raw,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFamily<S> {
    pub points: Vec<String>,
    pub members: Vec<FunctionTable<S>>,
    pub kind: ClosureKind,
}

impl<S: Scalar> FunctionFamily<S> {
    pub fn raw(points: Vec<String>, members: Vec<FunctionTable<S>>) -> Self {
        Self {
            points,
            members,
            kind: ClosureKind::Raw,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, values: &[S]) -> Option<usize> {
        self.members.iter().position(|m| m.values == values)
    }

    fn value_set(&self) -> std::collections::HashSet<&[S]> {
        self.members.iter().map(|m| m.values.as_slice()).collect()
    }

    /// Name of the characteristic function of `set` (point indices).
    pub fn chi_name(&self, set: &[usize]) -> String {
        chi_name(&self.points, set)
    }

    /// A violated clan condition, if any: missing `1`, a missing
    /// complement, or a missing allowed sum.
    pub fn clan_violation(&self) -> Option<String> {
        let set = self.value_set();
        let present = |v: &[S]| set.contains(v);
        let n = self.points.len();
        if !present(&vec![S::one(); n]) {
            return Some("the constant 1 is missing".into());
        }
        for f in &self.members {
            if !present(&complement(&f.values)) {
                return Some(format!("complement of {} is missing", f.name));
            }
        }
        for (i, f) in self.members.iter().enumerate() {
            for g in &self.members[i..] {
                if let Some(h) = bounded_sum(&f.values, &g.values) {
                    if !present(&h) {
                        return Some(format!("{} + {} is missing", f.name, g.name));
                    }
                }
            }
        }
        None
    }

    /// Some pair whose truncated sum `min(f + g, 1)` is missing.
    pub fn bold_violation(&self) -> Option<String> {
        let set = self.value_set();
        for (i, f) in self.members.iter().enumerate() {
            for g in &self.members[i..] {
                if !set.contains(truncated_sum(&f.values, &g.values).as_slice()) {
                    return Some(format!("{} ⊕ {} is missing", f.name, g.name));
                }
            }
        }
        None
    }

    /// `func name: v1 v2 …` lines for every member.
    pub fn to_text(&self) -> String {
        let mut out = format!("points: {}\n", self.points.join(" "));
        for m in &self.members {
            let vals: Vec<String> = m.values.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "func {}: {}", m.name, vals.join(" "));
        }
        out
    }
}

fn chi_name(points: &[String], set: &[usize]) -> String {
    let names: Vec<&str> = set.iter().map(|&i| points[i].as_str()).collect();
    format!("χ{{{}}}", names.join(","))
}

fn complement<S: Scalar>(f: &[S]) -> Vec<S> {
    f.iter().map(|v| S::one() - v.clone()).collect()
}

fn bounded_sum<S: Scalar>(f: &[S], g: &[S]) -> Option<Vec<S>> {
    f.iter()
        .zip(g)
        .map(|(a, b)| {
            let s = a.clone() + b.clone();
            (s <= S::one()).then_some(s)
        })
        .collect()
}

fn truncated_sum<S: Scalar>(f: &[S], g: &[S]) -> Vec<S> {
    f.iter()
        .zip(g)
        .map(|(a, b)| (a.clone() + b.clone()).min(S::one()))
        .collect()
}

/// Reads `points: p q r` followed by `func NAME: v1 v2 v3` lines.
pub fn parse_family<S: Scalar>(text: &str) -> Result<FunctionFamily<S>> {
    let mut points: Option<Vec<String>> = None;
    let mut members: Vec<FunctionTable<S>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("points:") {
            if points.is_some() {
                return Err(ParseError::new(line_no, "duplicate `points:` declaration").into());
            }
            let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if list.is_empty() {
                return Err(ParseError::new(line_no, "no points declared").into());
            }
            let mut sorted = list.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != list.len() {
                return Err(ParseError::new(line_no, "duplicate point").into());
            }
            points = Some(list);
        } else if let Some(rest) = line.strip_prefix("func ") {
            let Some(pts) = &points else {
                return Err(ParseError::new(line_no, "`func` before `points:`").into());
            };
            let Some((name, vals)) = rest.split_once(':') else {
                return Err(ParseError::new(line_no, "expected `func NAME: values`").into());
            };
            let name = name.trim();
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(ParseError::new(line_no, format!("invalid name `{name}`")).into());
            }
            if members.iter().any(|m| m.name == name) {
                return Err(ParseError::new(line_no, format!("duplicate function `{name}`")).into());
            }
            let values: Vec<S> = vals
                .split_whitespace()
                .map(|v| S::parse(v).ok_or_else(|| ParseError::new(line_no, format!("bad value `{v}`"))))
                .collect::<std::result::Result<_, _>>()?;
            if values.len() != pts.len() {
                return Err(ParseError::new(
                    line_no,
                    format!("expected {} values, got {}", pts.len(), values.len()),
                )
                .into());
            }
            if let Some(v) = values.iter().find(|v| !v.in_unit_interval()) {
                return Err(ParseError::new(line_no, format!("value {v} outside [0,1]")).into());
            }
            members.push(FunctionTable::new(name, values));
        } else {
            return Err(ParseError::new(line_no, "unknown directive").into());
        }
    }
    let points = points.ok_or_else(|| ParseError::new(0, "missing `points:` declaration"))?;
    Ok(FunctionFamily::raw(points, members))
}

// Canonical member order: total mass, then value vectors in decreasing
// lexicographic order. For characteristic functions this lists subsets by
// size and then lexicographically.
fn canonical_key<S: Scalar>(values: &[S]) -> (S, std::cmp::Reverse<Vec<S>>) {
    (crate::scalar::sum(values), std::cmp::Reverse(values.to_vec()))
}

fn close<S: Scalar>(
    points: &[String],
    generators: &[FunctionTable<S>],
    cap: usize,
    bold: bool,
) -> Result<FunctionFamily<S>> {
    let n = points.len();
    for g in generators {
        if g.values.len() != n {
            return Err(Error::Precondition(format!(
                "{} has the wrong number of values",
                g.name
            )));
        }
        if let Some(v) = g.values.iter().find(|v| !v.in_unit_interval()) {
            return Err(Error::OutOfRange(format!("{} takes the value {v}", g.name)));
        }
    }
    let mut names: BTreeMap<Vec<S>, String> = BTreeMap::new();
    for g in generators.iter().filter(|g| !g.name.is_empty()) {
        names.entry(g.values.clone()).or_insert_with(|| g.name.clone());
    }

    let mut members: Vec<Vec<S>> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<S>> = std::collections::HashSet::new();
    let mut queue: VecDeque<Vec<S>> = VecDeque::new();
    let push = |v: Vec<S>, seen: &mut std::collections::HashSet<Vec<S>>, queue: &mut VecDeque<Vec<S>>| {
        if seen.insert(v.clone()) {
            if seen.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
            queue.push_back(v);
        }
        Ok(())
    };
    push(vec![S::zero(); n], &mut seen, &mut queue)?;
    push(vec![S::one(); n], &mut seen, &mut queue)?;
    for g in generators {
        push(g.values.clone(), &mut seen, &mut queue)?;
    }
    while let Some(f) = queue.pop_front() {
        push(complement(&f), &mut seen, &mut queue)?;
        members.push(f.clone());
        for g in &members {
            let next = if bold {
                Some(truncated_sum(&f, g))
            } else {
                bounded_sum(&f, g)
            };
            if let Some(h) = next {
                push(h, &mut seen, &mut queue)?;
            }
        }
    }

    members.sort_by_cached_key(|v| canonical_key(v));
    let mut used: std::collections::HashSet<String> = std::collections::HashSet::new();
    let members = members
        .into_iter()
        .map(|values| {
            let mut name = if values.iter().all(|v| v.is_zero()) {
                ZERO_NAME.to_string()
            } else if values.iter().all(|v| v.is_one()) {
                ONE_NAME.to_string()
            } else if let Some(given) = names.get(&values).filter(|g| *g != ZERO_NAME && *g != ONE_NAME) {
                given.clone()
            } else if values.iter().all(|v| v.is_zero() || v.is_one()) {
                let set: Vec<usize> = (0..n).filter(|&i| values[i].is_one()).collect();
                chi_name(points, &set)
            } else {
                let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                format!("f({})", vals.join(","))
            };
            while !used.insert(name.clone()) {
                name.push('\'');
            }
            FunctionTable::new(name, values)
        })
        .collect();
    Ok(FunctionFamily {
        points: points.to_vec(),
        members,
        kind: if bold {
            ClosureKind::Bold
        } else {
            ClosureKind::Clan
        },
    })
}

/// The least clan containing the generators: closed under `f ↦ 1 - f` and
/// under `f + g` whenever `f + g <= 1` pointwise.
pub fn clan_closure<S: Scalar>(
    points: &[String],
    generators: &[FunctionTable<S>],
    cap: usize,
) -> Result<FunctionFamily<S>> {
    close(points, generators, cap, false)
}

/// The least Bold algebra containing the generators: additionally closed
/// under `min(f + g, 1)`.
pub fn bold_closure<S: Scalar>(
    points: &[String],
    generators: &[FunctionTable<S>],
    cap: usize,
) -> Result<FunctionFamily<S>> {
    close(points, generators, cap, true)
}

/// One element per member, with `f + g = h` whenever the pointwise sum is
/// at most 1 and is itself a member. The result is verified.
pub fn as_effect_algebra<S: Scalar>(family: &FunctionFamily<S>) -> Result<EffectAlgebra> {
    let n = family.points.len();
    let zero = vec![S::zero(); n];
    let one = vec![S::one(); n];
    if family.position(&zero).is_none() || family.position(&one).is_none() {
        return Err(Error::Precondition(
            "the family must contain the constants 0 and 1".into(),
        ));
    }
    let names: Vec<String> = family
        .members
        .iter()
        .map(|m| {
            if m.values == zero {
                ZERO_NAME.to_string()
            } else if m.values == one {
                ONE_NAME.to_string()
            } else {
                m.name.clone()
            }
        })
        .collect();
    let index: std::collections::HashMap<&[S], usize> = family
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| (m.values.as_slice(), i))
        .collect();
    let mut builder = EffectAlgebraTable::builder(names)?;
    for (i, f) in family.members.iter().enumerate() {
        for (j, g) in family.members.iter().enumerate().skip(i) {
            if let Some(h) = bounded_sum(&f.values, &g.values) {
                if let Some(&k) = index.get(h.as_slice()) {
                    builder.sum(Elem::new(i), Elem::new(j), Elem::new(k))?;
                }
            }
        }
    }
    EffectAlgebra::new(builder.build()?)
}

#[cfg(test)]
mod tests;
