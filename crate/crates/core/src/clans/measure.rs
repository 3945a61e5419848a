use super::FunctionFamily;
use crate::algebra::{EffectAlgebra, Elem};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::states::{is_state, StateVector};
use crate::structure::is_central;

/// A subset of the points, as sorted point indices.
pub type Subset = Vec<usize>;

/// A family of subsets of the points, with the atoms it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetAlgebra {
    pub universe: Vec<String>,
    /// Sorted by size, then lexicographically.
    pub members: Vec<Subset>,
    /// For each point, the smallest member containing it; distinct sets only.
    pub atoms: Vec<Subset>,
    /// Contains the empty set and the universe and is closed under
    /// complement and intersection.
    pub verified: bool,
}

impl SetAlgebra {
    fn new(universe: Vec<String>, mut members: Vec<Subset>) -> Self {
        members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        members.dedup();
        let n = universe.len();
        let all: Subset = (0..n).collect();
        let has = |s: &Subset| {
            members
                .binary_search_by(|m| m.len().cmp(&s.len()).then_with(|| m.cmp(s)))
                .is_ok()
        };
        let mut verified = has(&Vec::new()) && has(&all);
        for a in &members {
            let comp: Subset = (0..n).filter(|i| !a.contains(i)).collect();
            verified &= has(&comp);
            for b in &members {
                let meet: Subset = a.iter().copied().filter(|i| b.contains(i)).collect();
                verified &= has(&meet);
            }
        }
        let mut atoms: Vec<Subset> = (0..n)
            .map(|p| {
                members
                    .iter()
                    .filter(|m| m.contains(&p))
                    .fold(all.clone(), |acc, m| {
                        acc.into_iter().filter(|i| m.contains(i)).collect()
                    })
            })
            .collect();
        atoms.sort();
        atoms.dedup();
        Self {
            universe,
            members,
            atoms,
            verified,
        }
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        self.members.iter().any(|m| m == set)
    }

    /// `{p,q}` using point names.
    pub fn render(&self, set: &[usize]) -> String {
        let names: Vec<&str> = set.iter().map(|&i| self.universe[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

fn support<S: Scalar>(values: &[S]) -> Option<Subset> {
    values
        .iter()
        .all(|v| v.is_zero() || v.is_one())
        .then(|| (0..values.len()).filter(|&i| values[i].is_one()).collect())
}

/// Sets whose characteristic function is a member that is central in the
/// induced table. `algebra` must be the table built from `family`.
pub fn b0_algebra<S: Scalar>(family: &FunctionFamily<S>, algebra: &EffectAlgebra) -> SetAlgebra {
    let members = family
        .members
        .iter()
        .enumerate()
        .filter_map(|(i, m)| support(&m.values).filter(|_| is_central(algebra, Elem::new(i)).is_central()))
        .collect();
    SetAlgebra::new(family.points.clone(), members)
}

/// Sets whose characteristic function is a member, central or not.
pub fn s0_family<S: Scalar>(family: &FunctionFamily<S>) -> Vec<Subset> {
    let mut sets: Vec<Subset> = family.members.iter().filter_map(|m| support(&m.values)).collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets
}

/// Constant on every atom.
pub fn is_measurable<S: Scalar>(f: &[S], sets: &SetAlgebra) -> Result<bool> {
    if f.len() != sets.universe.len() {
        return Err(Error::Precondition(format!(
            "function has {} values but the universe has {} points",
            f.len(),
            sets.universe.len()
        )));
    }
    Ok(sets
        .atoms
        .iter()
        .all(|atom| atom.iter().all(|&p| f[p] == f[atom[0]])))
}

/// `μ(A) = s(χ_A)` on the sets of a set algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetMeasure<S> {
    pub sets: Vec<Subset>,
    pub values: Vec<S>,
    /// `μ(A ∪ B) = μ(A) + μ(B)` for disjoint members.
    pub additive: bool,
    /// `μ(X) = 1`.
    pub normalised: bool,
}

impl<S: Scalar> SetMeasure<S> {
    pub fn of(&self, set: &[usize]) -> Option<&S> {
        self.sets.iter().position(|s| s == set).map(|i| &self.values[i])
    }
}

pub fn measure_from_state<S: Scalar>(
    family: &FunctionFamily<S>,
    algebra: &EffectAlgebra,
    sets: &SetAlgebra,
    s: &StateVector<S>,
) -> Result<SetMeasure<S>> {
    if !is_state(algebra, s) {
        return Err(Error::Precondition("not a state".into()));
    }
    let n = family.points.len();
    let mut values = Vec::with_capacity(sets.members.len());
    for set in &sets.members {
        let chi: Vec<S> = (0..n)
            .map(|i| if set.contains(&i) { S::one() } else { S::zero() })
            .collect();
        let member = family
            .position(&chi)
            .ok_or_else(|| Error::Precondition(format!("{} is not a member", sets.render(set))))?;
        values.push(s.value(Elem::new(member)).clone());
    }
    let measure = |set: &Subset| {
        sets.members
            .iter()
            .position(|m| m == set)
            .map(|i| values[i].clone())
    };
    let mut additive = true;
    for (i, a) in sets.members.iter().enumerate() {
        for b in &sets.members[i..] {
            if a.iter().any(|p| b.contains(p)) {
                continue;
            }
            let mut union: Subset = a.iter().chain(b).copied().collect();
            union.sort();
            match (measure(a), measure(b), measure(&union)) {
                (Some(x), Some(y), Some(z)) => additive &= x + y == z,
                _ => additive = false,
            }
        }
    }
    let all: Subset = (0..n).collect();
    let normalised = measure(&all).is_some_and(|v| v.is_one());
    Ok(SetMeasure {
        sets: sets.members.clone(),
        values,
        additive,
        normalised,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BkRow<S> {
    pub member: usize,
    pub measurable: bool,
    pub state_value: S,
    /// `Σ_atoms f·μ`, for measurable members only.
    pub integral: Option<S>,
}

impl<S: Scalar> BkRow<S> {
    pub fn agrees(&self) -> Option<bool> {
        self.integral.as_ref().map(|i| *i == self.state_value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BkReport<S> {
    pub rows: Vec<BkRow<S>>,
    pub measure: SetMeasure<S>,
    pub all_measurable: bool,
    /// Every measurable member integrates to its state value.
    pub holds: bool,
}

impl<S: Scalar> BkReport<S> {
    /// The measurable members, in member order.
    pub fn measurable_members(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.measurable)
            .map(|r| r.member)
            .collect()
    }
}

/// Compares `s(f)` with the finite integral `Σ_P f(P)·μ_s(P)` over the atoms
/// `P` of `sets` for every member `f` that is constant on atoms.
pub fn bk_verify<S: Scalar>(
    family: &FunctionFamily<S>,
    algebra: &EffectAlgebra,
    sets: &SetAlgebra,
    s: &StateVector<S>,
) -> Result<BkReport<S>> {
    let measure = measure_from_state(family, algebra, sets, s)?;
    let atom_mass: Vec<S> = sets
        .atoms
        .iter()
        .map(|a| measure.of(a).cloned().unwrap_or_else(S::zero))
        .collect();
    let mut rows = Vec::with_capacity(family.len());
    for (i, f) in family.members.iter().enumerate() {
        let measurable = is_measurable(&f.values, sets)?;
        let integral = measurable.then(|| {
            sets.atoms
                .iter()
                .zip(&atom_mass)
                .fold(S::zero(), |acc, (atom, mu)| {
                    acc + f.values[atom[0]].clone() * mu.clone()
                })
        });
        rows.push(BkRow {
            member: i,
            measurable,
            state_value: s.value(Elem::new(i)).clone(),
            integral,
        });
    }
    let all_measurable = rows.iter().all(|r| r.measurable);
    let holds = measure.additive && measure.normalised && rows.iter().all(|r| r.agrees() != Some(false));
    Ok(BkReport {
        rows,
        measure,
        all_measurable,
        holds,
    })
}
