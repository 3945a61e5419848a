//! Finite integral representation: states as discrete measures on the
//! extremal states, simplex classification, restriction to the center, and
//! two symbolic interval algebras over `Q × Q`.

mod affine;
mod strictpair;
mod theorem51;

pub use affine::{aff_decompose, aff_leq, aff_meet, aff_min_membership, aff_state, aff_sum, MinMembership};
pub use strictpair::{
    sp_clan_witness, sp_grid, sp_is_element, sp_leq, sp_state, sp_sum, sp_system_properties, ClanWitness,
    StrictProperties, StrictState,
};
pub use theorem51::{theorem51_report, theta_map, Condition, Theorem51Report, ThetaReport};

pub use crate::linalg::PivotOrder;

use crate::algebra::EffectAlgebra;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::states::{is_state, PolytopeV, StateVector};

/// A pair of rationals: `(g1, g2)` in `Q × Q`, or the endpoint values
/// `(f(0), f(1))` of an affine function on `[0,1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPair<S> {
    pub first: S,
    pub second: S,
}

impl<S: Scalar> RationalPair<S> {
    pub fn new(first: S, second: S) -> Self {
        Self { first, second }
    }
}

impl<S: Scalar> std::fmt::Display for RationalPair<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// Weights on a finite set of extremal states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteMeasure<S> {
    /// Indices into the vertex list the measure was computed against.
    pub support: Vec<usize>,
    pub weights: Vec<S>,
}

impl<S: Scalar> DiscreteMeasure<S> {
    /// The weight of vertex `i`, zero outside the support.
    pub fn weight(&self, i: usize) -> S {
        self.support
            .iter()
            .position(|&j| j == i)
            .map_or_else(S::zero, |k| self.weights[k].clone())
    }

    /// `Σ weight·vertex`.
    pub fn barycenter(&self, vertices: &[StateVector<S>]) -> Result<StateVector<S>> {
        let states: Vec<StateVector<S>> = self.support.iter().map(|&i| vertices[i].clone()).collect();
        crate::states::sigma_convex(&states, &self.weights)
    }
}

/// Writes `s` as a convex combination of the vertices by an exact
/// feasibility LP. Only vertices with positive weight are kept in the
/// support. On a simplex the weights are the barycentric coordinates and
/// do not depend on `order`.
pub fn decompose<S: Scalar>(
    algebra: &EffectAlgebra,
    polytope: &PolytopeV<S>,
    s: &StateVector<S>,
    order: PivotOrder,
) -> Result<DiscreteMeasure<S>> {
    if !is_state(algebra, s) {
        return Err(Error::Precondition("not a state".into()));
    }
    if polytope.vertices.is_empty() {
        return Err(Error::Precondition("the algebra has no states".into()));
    }
    let k = polytope.vertices.len();
    let mut rows: Vec<Vec<S>> = algebra
        .elements()
        .map(|e| polytope.vertices.iter().map(|v| v.value(e).clone()).collect())
        .collect();
    let mut rhs: Vec<S> = s.values().to_vec();
    rows.push(vec![S::one(); k]);
    rhs.push(S::one());
    let x = linalg::find_nonnegative_solution(&rows, &rhs, order)
        .ok_or_else(|| Error::Infeasible("state is not in the convex hull of the vertices".into()))?;
    let (support, weights) = x.into_iter().enumerate().filter(|(_, w)| !w.is_zero()).unzip();
    Ok(DiscreteMeasure { support, weights })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimplexClass {
    Empty,
    /// Finitely many extreme points form a closed set, so a finite simplex
    /// is always Bauer.
    Simplex {
        bauer: bool,
    },
    NotSimplex,
}

impl SimplexClass {
    pub fn is_simplex(self) -> bool {
        matches!(self, SimplexClass::Simplex { .. })
    }
}

impl std::fmt::Display for SimplexClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SimplexClass::Empty => write!(f, "empty"),
            SimplexClass::Simplex { bauer: true } => write!(f, "simplex(Bauer)"),
            SimplexClass::Simplex { bauer: false } => write!(f, "simplex"),
            SimplexClass::NotSimplex => write!(f, "not_simplex"),
        }
    }
}

/// A polytope is a simplex iff it has one more vertex than its dimension.
pub fn classify_simplex<S: Scalar>(polytope: &PolytopeV<S>) -> SimplexClass {
    if polytope.vertices.is_empty() {
        SimplexClass::Empty
    } else if polytope.vertices.len() as isize == polytope.affine_dimension + 1 {
        SimplexClass::Simplex { bauer: true }
    } else {
        SimplexClass::NotSimplex
    }
}
