//! The interval `[0,(1,1)]` of `Q × Q` under the strict order, where
//! `(g1,g2) <= (h1,h2)` iff both coordinates increase strictly or the pairs
//! are equal.

use super::RationalPair;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Pair<S> = RationalPair<S>;

fn zero<S: Scalar>() -> Pair<S> {
    Pair::new(S::zero(), S::zero())
}

fn unit<S: Scalar>() -> Pair<S> {
    Pair::new(S::one(), S::one())
}

pub fn sp_leq<S: Scalar>(a: &Pair<S>, b: &Pair<S>) -> bool {
    a == b || (a.first < b.first && a.second < b.second)
}

/// `0 <= a <= (1,1)`.
pub fn sp_is_element<S: Scalar>(a: &Pair<S>) -> bool {
    sp_leq(&zero(), a) && sp_leq(a, &unit())
}

fn require_element<S: Scalar>(a: &Pair<S>) -> Result<()> {
    if sp_is_element(a) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("{a} is not in [0,(1,1)]")))
    }
}

/// `a + b` when it stays below `(1,1)`.
pub fn sp_sum<S: Scalar>(a: &Pair<S>, b: &Pair<S>) -> Result<Option<Pair<S>>> {
    require_element(a)?;
    require_element(b)?;
    let c = Pair::new(
        a.first.clone() + b.first.clone(),
        a.second.clone() + b.second.clone(),
    );
    Ok(sp_leq(&c, &unit()).then_some(c))
}

/// The two extremal states: `S0` reads the second coordinate, `S1` the
/// first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrictState {
    S0,
    S1,
}

impl StrictState {
    pub const BOTH: [StrictState; 2] = [StrictState::S0, StrictState::S1];
}

pub fn sp_state<S: Scalar>(which: StrictState, a: &Pair<S>) -> S {
    match which {
        StrictState::S0 => a.second.clone(),
        StrictState::S1 => a.first.clone(),
    }
}

/// Whether `â + b̂` lies in the image of the hat map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClanWitness<S> {
    /// `s(a) <= 1 - s(b)` at `s0` and at `s1`.
    pub below_complement: [bool; 2],
    /// The only candidate `c` with `ĉ = â + b̂`.
    pub candidate: Pair<S>,
    pub candidate_is_element: bool,
}

impl<S> ClanWitness<S> {
    /// True when `â <= 1 - b̂` but `â + b̂` has no preimage, which shows the
    /// hat image is not closed under allowed sums.
    pub fn breaks_clan(&self) -> bool {
        self.below_complement.iter().all(|&b| b) && !self.candidate_is_element
    }
}

/// Since `s0` and `s1` recover both coordinates, `ĉ = â + b̂` forces
/// `c = a + b` coordinatewise; the test is whether that pair is an element.
pub fn sp_clan_witness<S: Scalar>(a: &Pair<S>, b: &Pair<S>) -> Result<ClanWitness<S>> {
    require_element(a)?;
    require_element(b)?;
    let below_complement = StrictState::BOTH.map(|s| sp_state(s, a) <= S::one() - sp_state(s, b));
    let candidate = Pair::new(
        a.first.clone() + b.first.clone(),
        a.second.clone() + b.second.clone(),
    );
    Ok(ClanWitness {
        below_complement,
        candidate_is_element: sp_is_element(&candidate),
        candidate,
    })
}

/// Every element whose coordinates have denominators at most `max_den`.
pub fn sp_grid<S: Scalar>(max_den: i64) -> Vec<Pair<S>> {
    let mut inner: Vec<S> = (2..=max_den)
        .flat_map(|d| (1..d).map(move |n| S::ratio(n, d)))
        .collect();
    inner.sort();
    inner.dedup();
    let mut out = vec![zero()];
    for x in &inner {
        for y in &inner {
            out.push(Pair::new(x.clone(), y.clone()));
        }
    }
    out.push(unit());
    out
}

/// Separation and order determination of `{s0, s1}` over a sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictProperties<S> {
    /// Two distinct elements on which both states agree.
    pub separating_witness: Option<(Pair<S>, Pair<S>)>,
    /// `a, b` with `s(a) <= s(b)` at both states but `a` not below `b`.
    pub order_witness: Option<(Pair<S>, Pair<S>)>,
}

impl<S> StrictProperties<S> {
    pub fn separating(&self) -> bool {
        self.separating_witness.is_none()
    }

    pub fn order_determining(&self) -> bool {
        self.order_witness.is_none()
    }
}

pub fn sp_system_properties<S: Scalar>(sample: &[Pair<S>]) -> StrictProperties<S> {
    let mut props = StrictProperties {
        separating_witness: None,
        order_witness: None,
    };
    for a in sample {
        for b in sample {
            let vals = |x: &Pair<S>| StrictState::BOTH.map(|s| sp_state(s, x));
            let (va, vb) = (vals(a), vals(b));
            if props.separating_witness.is_none() && a != b && va == vb {
                props.separating_witness = Some((a.clone(), b.clone()));
            }
            if props.order_witness.is_none() && va.iter().zip(&vb).all(|(x, y)| x <= y) && !sp_leq(a, b) {
                props.order_witness = Some((a.clone(), b.clone()));
            }
        }
    }
    props
}
