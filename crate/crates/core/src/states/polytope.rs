use std::collections::BTreeMap;

use super::{is_state, StateVector};
use crate::algebra::{EffectAlgebra, Elem};
use crate::linalg::{self, AffineParam, Equation};
use crate::scalar::Scalar;

/// The state equations of an algebra: one unknown per element, in element
/// order, with `s(0) = 0`, `s(1) = 1` and `s(c) = s(a) + s(b)` for each
/// stored sum. The bounds `0 <= s(e) <= 1` are implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSystem<S> {
    pub variables: Vec<Elem>,
    pub equalities: Vec<Equation<S>>,
}

pub fn state_system<S: Scalar>(algebra: &EffectAlgebra) -> StateSystem<S> {
    let mut equalities = vec![
        Equation::fix(algebra.zero().index(), S::zero()),
        Equation::fix(algebra.one().index(), S::one()),
    ];
    for (a, b, c) in algebra.sum_entries() {
        if a == algebra.zero() || b == algebra.zero() {
            continue;
        }
        let mut terms = vec![(c.index(), S::one())];
        if a == b {
            terms.push((a.index(), -S::from_int(2)));
        } else {
            terms.push((a.index(), -S::one()));
            terms.push((b.index(), -S::one()));
        }
        equalities.push(Equation {
            constant: S::zero(),
            terms,
        });
    }
    StateSystem {
        variables: algebra.elements().collect(),
        equalities,
    }
}

/// Extremal states and the affine dimension of the state space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeV<S> {
    /// Sorted lexicographically by the value vector.
    pub vertices: Vec<StateVector<S>>,
    /// -1 when there are no states.
    pub affine_dimension: isize,
}

/// The state space in parametrised form, `s = offset + dirs·t` with
/// `0 <= s <= 1`.
#[derive(Clone, Debug)]
pub struct StateSpace<S> {
    param: Option<AffineParam<S>>,
    ineqs: Vec<(S, Vec<S>)>,
}

impl<S: Scalar> StateSpace<S> {
    pub fn new(algebra: &EffectAlgebra) -> Self {
        Self::with_constraints(algebra, &[])
    }

    /// The states that additionally satisfy `s(e) = v` for every `(e, v)`.
    pub fn with_constraints(algebra: &EffectAlgebra, fixed: &[(Elem, S)]) -> Self {
        let mut system = state_system::<S>(algebra);
        for (e, v) in fixed {
            system.equalities.push(Equation::fix(e.index(), v.clone()));
        }
        let Some(param) = linalg::solve_equalities(algebra.len(), &system.equalities) else {
            return Self {
                param: None,
                ineqs: Vec::new(),
            };
        };
        match bounds(&param) {
            Some(ineqs) => Self {
                param: Some(param),
                ineqs,
            },
            None => Self {
                param: None,
                ineqs: Vec::new(),
            },
        }
    }

    /// Number of free parameters left by the equations; `None` if the
    /// equations alone are inconsistent.
    pub fn parameters(&self) -> Option<usize> {
        self.param.as_ref().map(AffineParam::dim)
    }

    pub fn vertices(&self) -> PolytopeV<S> {
        let Some(param) = &self.param else {
            return PolytopeV {
                vertices: Vec::new(),
                affine_dimension: -1,
            };
        };
        let mut points: Vec<Vec<S>> = linalg::polytope_vertices(param.dim(), &self.ineqs)
            .iter()
            .map(|t| param.point(t))
            .collect();
        points.sort();
        points.dedup();
        let affine_dimension = linalg::affine_dimension(&points);
        PolytopeV {
            vertices: points.into_iter().map(StateVector::new).collect(),
            affine_dimension,
        }
    }

    /// Vertex test for a point already known to lie in the space: the
    /// constraints `s(e) = 0` and `s(e) = 1` tight at `s` must pin down every
    /// parameter.
    pub fn is_vertex(&self, s: &StateVector<S>) -> bool {
        let Some(param) = &self.param else {
            return false;
        };
        let tight: Vec<Vec<S>> = s
            .values()
            .iter()
            .zip(&param.dirs)
            .filter(|(v, _)| v.is_zero() || v.is_one())
            .map(|(_, row)| row.clone())
            .collect();
        linalg::rank(&tight) == param.dim()
    }

    pub fn param(&self) -> Option<&AffineParam<S>> {
        self.param.as_ref()
    }
}

// 0 <= s_e <= 1 rewritten as b + a·t >= 0, normalised and deduplicated.
// None when a constant coordinate already violates its bounds.
fn bounds<S: Scalar>(param: &AffineParam<S>) -> Option<Vec<(S, Vec<S>)>> {
    let mut tightest: BTreeMap<Vec<S>, S> = BTreeMap::new();
    for (c, row) in param.offset.iter().zip(&param.dirs) {
        let Some(lead) = row.iter().find(|x| !x.is_zero()).map(|x| x.abs()) else {
            if !c.in_unit_interval() {
                return None;
            }
            continue;
        };
        let lower: Vec<S> = row.iter().map(|m| m.clone() / lead.clone()).collect();
        let upper: Vec<S> = lower.iter().map(|m| -m.clone()).collect();
        for (a, b) in [
            (lower, c.clone() / lead.clone()),
            (upper, (S::one() - c.clone()) / lead.clone()),
        ] {
            tightest
                .entry(a)
                .and_modify(|old| {
                    if b < *old {
                        *old = b.clone();
                    }
                })
                .or_insert(b);
        }
    }
    Some(tightest.into_iter().map(|(a, b)| (b, a)).collect())
}

/// All extremal states, exactly.
pub fn vertices<S: Scalar>(algebra: &EffectAlgebra) -> PolytopeV<S> {
    StateSpace::new(algebra).vertices()
}

/// A state is extremal iff it is a vertex of the state polytope.
pub fn is_extremal<S: Scalar>(algebra: &EffectAlgebra, s: &StateVector<S>) -> bool {
    is_state(algebra, s) && StateSpace::new(algebra).is_vertex(s)
}
