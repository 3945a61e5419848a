//! Affine functions `f(x) = αx + β` on `[0,1]` with values in `[0,1]`,
//! stored by their endpoint values `(f(0), f(1))`.

use super::{DiscreteMeasure, RationalPair};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Pair<S> = RationalPair<S>;

/// Affine functions compare pointwise iff they compare at both endpoints.
pub fn aff_leq<S: Scalar>(f: &Pair<S>, g: &Pair<S>) -> bool {
    f.first <= g.first && f.second <= g.second
}

/// `f + g` when it stays below the constant 1.
pub fn aff_sum<S: Scalar>(f: &Pair<S>, g: &Pair<S>) -> Option<Pair<S>> {
    let h = Pair::new(
        f.first.clone() + g.first.clone(),
        f.second.clone() + g.second.clone(),
    );
    (h.first <= S::one() && h.second <= S::one()).then_some(h)
}

/// `s_x(f) = f(x) = (1 - x)·f(0) + x·f(1)`.
pub fn aff_state<S: Scalar>(x: &S, f: &Pair<S>) -> Result<S> {
    if !x.in_unit_interval() {
        return Err(Error::OutOfRange(format!("point {x}")));
    }
    Ok((S::one() - x.clone()) * f.first.clone() + x.clone() * f.second.clone())
}

/// The greatest affine function below both, taken endpoint by endpoint.
pub fn aff_meet<S: Scalar>(f: &Pair<S>, g: &Pair<S>) -> Pair<S> {
    Pair::new(
        f.first.clone().min(g.first.clone()),
        f.second.clone().min(g.second.clone()),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinMembership<S> {
    pub meet: Pair<S>,
    /// The pointwise minimum is itself affine.
    pub pointwise_min_affine: bool,
    /// Where the two lines cross inside `(0,1)`, if they do.
    pub crossing: Option<S>,
}

/// The pointwise minimum of two affine functions is affine iff the lines
/// do not cross strictly inside the interval.
pub fn aff_min_membership<S: Scalar>(f: &Pair<S>, g: &Pair<S>) -> MinMembership<S> {
    let d0 = f.first.clone() - g.first.clone();
    let d1 = f.second.clone() - g.second.clone();
    let crossing = (d0.is_positive() && d1.is_negative() || d0.is_negative() && d1.is_positive())
        .then(|| d0.clone() / (d0 - d1));
    MinMembership {
        meet: aff_meet(f, g),
        pointwise_min_affine: crossing.is_none(),
        crossing,
    }
}

/// `s_x = (1 - x)·s0 + x·s1`; the support is `[s0, s1]` in that order.
pub fn aff_decompose<S: Scalar>(x: &S) -> Result<DiscreteMeasure<S>> {
    if !x.in_unit_interval() {
        return Err(Error::OutOfRange(format!("point {x}")));
    }
    Ok(DiscreteMeasure {
        support: vec![0, 1],
        weights: vec![S::one() - x.clone(), x.clone()],
    })
}
