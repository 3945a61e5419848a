use std::fmt;

use super::{classify_simplex, SimplexClass};
use crate::algebra::{EffectAlgebra, Elem};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::states::{is_extremal, vertices, PolytopeV, StateSpace, StateVector};
use crate::structure::{
    center, center_algebra, check_general_comparability, check_lattice, check_rdp, mv_construct, Center,
};

/// Restriction of the extremal states to the center.
#[derive(Clone, Debug)]
pub struct ThetaReport<S> {
    pub center: Center,
    /// The center as an algebra; its element `i` is `center.elements[i]`.
    pub center_algebra: EffectAlgebra,
    pub center_vertices: PolytopeV<S>,
    /// `image[i]` is the index in `center_vertices` of the restriction of
    /// vertex `i`, or `None` when that restriction is not extremal.
    pub image: Vec<Option<usize>>,
    pub all_extremal: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl<S> ThetaReport<S> {
    pub fn bijective(&self) -> bool {
        self.all_extremal && self.injective && self.surjective
    }
}

pub fn theta_map<S: Scalar>(algebra: &EffectAlgebra, polytope: &PolytopeV<S>) -> Result<ThetaReport<S>> {
    let center = center(algebra);
    if !center.boolean_verified {
        return Err(Error::Precondition(
            "center failed the Boolean algebra check".into(),
        ));
    }
    let sub = center_algebra(algebra, &center)?;
    let center_vertices = vertices::<S>(&sub);
    let image: Vec<Option<usize>> = polytope
        .vertices
        .iter()
        .map(|v| {
            let r = restrict(&center, v);
            if !is_extremal(&sub, &r) {
                return None;
            }
            center_vertices.vertices.binary_search(&r).ok()
        })
        .collect();
    let all_extremal = image.iter().all(Option::is_some);
    let mut hits = vec![0usize; center_vertices.vertices.len()];
    for i in image.iter().flatten() {
        hits[*i] += 1;
    }
    Ok(ThetaReport {
        injective: hits.iter().all(|&h| h <= 1),
        surjective: hits.iter().all(|&h| h >= 1),
        all_extremal,
        image,
        center_vertices,
        center_algebra: sub,
        center,
    })
}

fn restrict<S: Scalar>(center: &Center, s: &StateVector<S>) -> StateVector<S> {
    StateVector::new(center.elements.iter().map(|&e| s.value(e).clone()).collect())
}

/// Every extremal state of the center extends to exactly one state of the
/// whole algebra, and that extension is extremal. The extensions are found
/// by fixing the center values and enumerating what is left of the state
/// polytope.
fn unique_extremal_extension<S: Scalar>(algebra: &EffectAlgebra, theta: &ThetaReport<S>) -> bool {
    theta.center_vertices.vertices.iter().all(|w| {
        let fixed: Vec<(Elem, S)> = theta
            .center
            .elements
            .iter()
            .zip(w.values())
            .map(|(&e, v)| (e, v.clone()))
            .collect();
        let slice = StateSpace::with_constraints(algebra, &fixed).vertices();
        slice.vertices.len() == 1 && is_extremal(algebra, &slice.vertices[0])
    })
}

/// The six equivalent conditions, in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    UniqueExtension,
    Simplex,
    Lattice,
    GeneralComparability,
    ThetaBijective,
    MvAlgebra,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::UniqueExtension,
        Condition::Simplex,
        Condition::Lattice,
        Condition::GeneralComparability,
        Condition::ThetaBijective,
        Condition::MvAlgebra,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Condition::UniqueExtension => "unique_extension",
            Condition::Simplex => "simplex",
            Condition::Lattice => "lattice",
            Condition::GeneralComparability => "general_comparability",
            Condition::ThetaBijective => "theta_bijective",
            Condition::MvAlgebra => "mv",
        }
    }

    pub fn roman(self) -> &'static str {
        match self {
            Condition::UniqueExtension => "i",
            Condition::Simplex => "ii",
            Condition::Lattice => "iii",
            Condition::GeneralComparability => "iv",
            Condition::ThetaBijective => "v",
            Condition::MvAlgebra => "vi",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem51Report {
    pub rows: Vec<(Condition, bool)>,
    pub class: SimplexClass,
    /// All six conditions hold or all six fail.
    pub agree: bool,
}

impl Theorem51Report {
    pub fn get(&self, c: Condition) -> bool {
        self.rows
            .iter()
            .find(|(k, _)| *k == c)
            .map(|r| r.1)
            .expect("all rows present")
    }
}

/// Evaluates the six conditions on an RDP algebra.
pub fn theorem51_report<S: Scalar>(algebra: &EffectAlgebra) -> Result<Theorem51Report> {
    if !check_rdp(algebra).holds {
        return Err(Error::Precondition("algebra lacks RDP".into()));
    }
    let polytope = vertices::<S>(algebra);
    let theta = theta_map(algebra, &polytope)?;
    let class = classify_simplex(&polytope);
    let rows = vec![
        (
            Condition::UniqueExtension,
            unique_extremal_extension(algebra, &theta),
        ),
        (Condition::Simplex, class.is_simplex()),
        (Condition::Lattice, check_lattice(algebra).holds),
        (
            Condition::GeneralComparability,
            check_general_comparability(algebra).holds,
        ),
        (Condition::ThetaBijective, theta.bijective()),
        (Condition::MvAlgebra, mv_construct(algebra).is_some()),
    ];
    let agree = rows.iter().all(|r| r.1) || rows.iter().all(|r| !r.1);
    Ok(Theorem51Report { rows, class, agree })
}
