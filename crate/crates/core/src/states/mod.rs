//! States on a finite effect algebra: the state polytope, extremality and
//! the state-level criteria.

mod polytope;

pub use polytope::{is_extremal, state_system, vertices, PolytopeV, StateSpace, StateSystem};

use std::fmt::Write as _;

use crate::algebra::{EffectAlgebra, Elem};
use crate::error::{Error, ParseError, Result};
use crate::linalg::{self, Equation};
use crate::scalar::Scalar;
use crate::structure::Check;

/// Values of a function on the elements, indexed by element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateVector<S> {
    values: Vec<S>,
}

impl<S: Scalar> StateVector<S> {
    pub fn new(values: Vec<S>) -> Self {
        Self { values }
    }

    pub fn value(&self, e: Elem) -> &S {
        &self.values[e.index()]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn into_values(self) -> Vec<S> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `name=value` pairs in element order, separated by spaces.
    pub fn render(&self, algebra: &EffectAlgebra) -> String {
        let mut out = String::new();
        for (e, v) in algebra.elements().zip(&self.values) {
            if !out.is_empty() {
                out.push(' ');
            }
            let _ = write!(out, "{}={}", algebra.name(e), v);
        }
        out
    }
}

/// Checks every state constraint exactly.
pub fn is_state<S: Scalar>(algebra: &EffectAlgebra, s: &StateVector<S>) -> bool {
    if s.len() != algebra.len() {
        return false;
    }
    if !s.value(algebra.zero()).is_zero() || !s.value(algebra.one()).is_one() {
        return false;
    }
    if !s.values.iter().all(Scalar::in_unit_interval) {
        return false;
    }
    algebra
        .sum_entries()
        .all(|(a, b, c)| *s.value(c) == s.value(a).clone() + s.value(b).clone())
}

/// For every `x, y`: `min{s(x), s(y)} = max{s(z) : z <= x, z <= y}`.
/// Fails with the first pair where the two sides differ.
pub fn criterion32<S: Scalar>(algebra: &EffectAlgebra, s: &StateVector<S>) -> Check {
    for x in algebra.elements() {
        for y in algebra.elements().filter(|y| y.index() >= x.index()) {
            let low = s.value(x).min(s.value(y));
            let best = algebra
                .lower_bounds(x, y)
                .ones()
                .map(|z| &s.values[z])
                .max()
                .expect("0 is below everything");
            if best != low {
                return Check::fail(vec![x, y], format!("min {low} but max below {best}"));
            }
        }
    }
    Check::pass()
}

/// Whenever `s(a) = s(b) = 1` some `c <= a, b` has `s(c) = 1`.
pub fn is_jauch_piron<S: Scalar>(algebra: &EffectAlgebra, s: &StateVector<S>) -> Check {
    let full: Vec<Elem> = algebra.elements().filter(|&e| s.value(e).is_one()).collect();
    for (i, &a) in full.iter().enumerate() {
        for &b in &full[i + 1..] {
            let found = algebra.lower_bounds(a, b).ones().any(|c| s.values[c].is_one());
            if !found {
                return Check::fail(vec![a, b], "no common lower bound with value 1");
            }
        }
    }
    Check::pass()
}

/// `Σ weights[i]·states[i]`. Weights must be nonnegative and sum to exactly 1.
pub fn sigma_convex<S: Scalar>(states: &[StateVector<S>], weights: &[S]) -> Result<StateVector<S>> {
    if states.len() != weights.len() {
        return Err(Error::InvalidWeights(format!(
            "{} states but {} weights",
            states.len(),
            weights.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| w.is_negative()) {
        return Err(Error::InvalidWeights(format!("negative weight {w}")));
    }
    let total = crate::scalar::sum(weights);
    if !total.is_one() {
        return Err(Error::InvalidWeights(format!("weights sum to {total}")));
    }
    let n = states[0].len();
    if states.iter().any(|s| s.len() != n) {
        return Err(Error::InvalidWeights("states of different lengths".into()));
    }
    let mut values = vec![S::zero(); n];
    for (s, w) in states.iter().zip(weights) {
        if w.is_zero() {
            continue;
        }
        for (acc, v) in values.iter_mut().zip(&s.values) {
            *acc = acc.clone() + w.clone() * v.clone();
        }
    }
    Ok(StateVector::new(values))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemProperties {
    /// `s(a) <= s(b)` for all members implies `a <= b`; fails with `(a,b)`.
    pub order_determining: Check,
    /// Distinct elements are told apart by some member; fails with `(a,b)`.
    pub separating: Check,
}

pub fn state_system_properties<S: Scalar>(
    algebra: &EffectAlgebra,
    states: &[StateVector<S>],
) -> SystemProperties {
    let mut order_determining = Check::pass();
    let mut separating = Check::pass();
    for a in algebra.elements() {
        for b in algebra.elements() {
            if order_determining.holds
                && !algebra.leq(a, b)
                && states.iter().all(|s| s.value(a) <= s.value(b))
            {
                order_determining = Check::fail(vec![a, b], "dominated but not below");
            }
            if separating.holds && a.index() < b.index() && states.iter().all(|s| s.value(a) == s.value(b)) {
                separating = Check::fail(vec![a, b], "no state tells them apart");
            }
        }
    }
    SystemProperties {
        order_determining,
        separating,
    }
}

/// Reads `name = value` lines (`#` comments). Elements left out are filled
/// in when the state equations determine them from the given values.
/// Values that contradict the equations give [`Error::Infeasible`].
pub fn parse_state<S: Scalar>(algebra: &EffectAlgebra, text: &str) -> Result<StateVector<S>> {
    let mut given: Vec<Option<S>> = vec![None; algebra.len()];
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((name, value)) = line.split_once('=') else {
            return Err(ParseError::new(line_no, "expected `element = value`").into());
        };
        let e = algebra.elem(name.trim())?;
        let v = S::parse(value)
            .ok_or_else(|| ParseError::new(line_no, format!("bad value `{}`", value.trim())))?;
        if given[e.index()].replace(v).is_some() {
            return Err(ParseError::new(line_no, format!("duplicate value for `{}`", name.trim())).into());
        }
    }
    if given.iter().all(Option::is_some) {
        return Ok(StateVector::new(given.into_iter().flatten().collect()));
    }

    let mut system = state_system::<S>(algebra);
    for (i, v) in given.iter().enumerate() {
        if let Some(v) = v {
            system.equalities.push(Equation::fix(i, v.clone()));
        }
    }
    let param = linalg::solve_equalities(algebra.len(), &system.equalities)
        .ok_or_else(|| Error::Infeasible("values contradict the state equations".into()))?;
    let mut values = Vec::with_capacity(algebra.len());
    for (e, v) in algebra.elements().zip(given) {
        match v {
            Some(v) => values.push(v),
            None if param.dirs[e.index()].iter().all(|m| m.is_zero()) => {
                values.push(param.offset[e.index()].clone())
            }
            None => return Err(Error::Underdetermined(algebra.name(e).to_string())),
        }
    }
    Ok(StateVector::new(values))
}

#[cfg(test)]
mod tests;
