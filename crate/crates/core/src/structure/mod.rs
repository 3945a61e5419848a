//! Structural classifiers on verified effect algebras.

mod center;
mod lattice;
mod riesz;

pub use center::{
    center, center_algebra, check_general_comparability, check_rdp_central_criterion, is_central, Center,
    CentralityWitness,
};
pub use lattice::{check_lattice, mv_construct, MvAlgebra};
pub use riesz::{check_interpolation, check_rdp};

use crate::algebra::{EffectAlgebra, Elem};

/// Outcome of a property check. A failing check carries the elements that
/// witness the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<Elem>,
    pub note: String,
}

impl Check {
    pub fn pass() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(elements: Vec<Elem>, note: impl Into<String>) -> Self {
        Self {
            holds: false,
            witness: Some(Witness {
                elements,
                note: note.into(),
            }),
        }
    }

    /// `(a,b,…)` using element names, or `None` when the check passed.
    pub fn witness_names(&self, algebra: &EffectAlgebra) -> Option<String> {
        self.witness.as_ref().map(|w| {
            let names: Vec<&str> = w.elements.iter().map(|&e| algebra.name(e)).collect();
            format!("({})", names.join(","))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityEntry {
    pub element: Elem,
    pub n: usize,
    /// Some `y` with `n·y = element`.
    pub root: Option<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub nmax: usize,
    pub entries: Vec<DivisibilityEntry>,
    /// Every element has an `n`-th part for every `n <= nmax`.
    pub divisible: bool,
}

/// For each element `x` and `1 <= n <= nmax`, looks for `y` with
/// `y + y + … + y = x` (`n` terms, all partial sums defined).
pub fn check_divisible(algebra: &EffectAlgebra, nmax: usize) -> DivisibilityReport {
    let mut entries = Vec::new();
    for x in algebra.elements() {
        for n in 1..=nmax {
            let root = algebra
                .elements()
                .filter(|&y| algebra.leq(y, x))
                .find(|&y| algebra.multiple(y, n) == Some(x));
            entries.push(DivisibilityEntry { element: x, n, root });
        }
    }
    let divisible = entries.iter().all(|e| e.root.is_some());
    DivisibilityReport {
        nmax,
        entries,
        divisible,
    }
}
