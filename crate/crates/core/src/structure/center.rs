use fixedbitset::FixedBitSet;

use super::{check_rdp, Check};
use crate::algebra::{EffectAlgebra, EffectAlgebraTable, Elem};
use crate::error::{Error, Result};

/// Result of testing one element for centrality against the product
/// decomposition definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityWitness {
    pub element: Elem,
    /// `decomposition[x] = (x1, x2)` with `x = x1 + x2`, `x1 <= e`, `x2 <= e'`.
    /// `None` where no decomposition exists.
    pub decomposition: Vec<Option<(Elem, Elem)>>,
    /// Every element has exactly one decomposition.
    pub unique: bool,
    /// `x ↦ (x1, x2)` is an isomorphism onto `[0,e] × [0,e']`.
    pub iso_verified: bool,
    /// Why the element is not central, when it is not.
    pub reason: Option<String>,
}

impl CentralityWitness {
    pub fn is_central(&self) -> bool {
        self.unique && self.iso_verified
    }
}

/// Decides whether `e` is central by brute force: every `x` must split
/// uniquely as `x1 + x2` with `x1 <= e`, `x2 <= e'`, and the splitting map
/// must be a bijection onto `[0,e] × [0,e']` that preserves and reflects
/// sums (the interval sums being the restrictions of `+`).
pub fn is_central(algebra: &EffectAlgebra, e: Elem) -> CentralityWitness {
    let n = algebra.len();
    let ep = algebra.orthosupplement(e);
    let below_e = algebra.down_set(e);
    let below_ep = algebra.down_set(ep);
    let mut witness = CentralityWitness {
        element: e,
        decomposition: vec![None; n],
        unique: false,
        iso_verified: false,
        reason: None,
    };

    for x in algebra.elements() {
        let mut found = None;
        for i in algebra.lower_bounds(x, e).ones() {
            let x1 = Elem::new(i);
            let Some(x2) = algebra.try_difference(x1, x) else {
                continue;
            };
            if !below_ep.contains(x2.index()) {
                continue;
            }
            if found.is_some() {
                witness.reason = Some(format!("{} splits twice", algebra.name(x)));
                return witness;
            }
            found = Some((x1, x2));
        }
        if found.is_none() {
            witness.reason = Some(format!("{} does not split", algebra.name(x)));
            return witness;
        }
        witness.decomposition[x.index()] = found;
    }
    witness.unique = true;

    // onto: every pair (a, b) in [0,e] × [0,e'] is hit
    let mut hit = FixedBitSet::with_capacity(n * n);
    for &(x1, x2) in witness.decomposition.iter().flatten() {
        hit.insert(x1.index() * n + x2.index());
    }
    for a in below_e.ones() {
        for b in below_ep.ones() {
            if !hit.contains(a * n + b) {
                witness.reason = Some(format!(
                    "({},{}) is not an image",
                    algebra.name(Elem::new(a)),
                    algebra.name(Elem::new(b))
                ));
                return witness;
            }
        }
    }

    // interval sum: defined iff defined in E and the result stays below the top
    let interval_sum = |a: Elem, b: Elem, top: Elem| algebra.sum(a, b).filter(|&c| algebra.leq(c, top));
    let split = |x: Elem| witness.decomposition[x.index()].expect("all split");
    for x in algebra.elements() {
        let (x1, x2) = split(x);
        for y in algebra.elements() {
            let (y1, y2) = split(y);
            let image = interval_sum(x1, y1, e).zip(interval_sum(x2, y2, ep));
            let preserved = match (algebra.sum(x, y), image) {
                (Some(z), Some(pair)) => split(z) == pair,
                (None, None) => true,
                _ => false,
            };
            if !preserved {
                witness.reason = Some(format!(
                    "sum of {} and {} not preserved",
                    algebra.name(x),
                    algebra.name(y)
                ));
                return witness;
            }
        }
    }
    witness.iso_verified = true;
    witness
}

/// The central elements, with the outcome of the Boolean-subalgebra check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Center {
    pub elements: Vec<Elem>,
    pub boolean_verified: bool,
}

impl Center {
    pub fn contains(&self, e: Elem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }
}

pub fn center(algebra: &EffectAlgebra) -> Center {
    let elements: Vec<Elem> = algebra
        .elements()
        .filter(|&e| is_central(algebra, e).is_central())
        .collect();
    let boolean_verified = is_boolean_subalgebra(algebra, &elements);
    Center {
        elements,
        boolean_verified,
    }
}

/// The center as an effect algebra in its own right: its elements in
/// their original order and names, with the sums of `algebra` that stay
/// inside. Element `i` of the result is `center.elements[i]`.
pub fn center_algebra(algebra: &EffectAlgebra, center: &Center) -> Result<EffectAlgebra> {
    let names: Vec<&str> = center.elements.iter().map(|&e| algebra.name(e)).collect();
    let mut builder = EffectAlgebraTable::builder(names)?;
    for (i, &a) in center.elements.iter().enumerate() {
        for (j, &b) in center.elements.iter().enumerate().skip(i) {
            let Some(c) = algebra.sum(a, b) else { continue };
            if let Ok(k) = center.elements.binary_search(&c) {
                builder.sum(Elem::new(i), Elem::new(j), Elem::new(k))?;
            }
        }
    }
    EffectAlgebra::new(builder.build()?)
}

// Meets and joins taken in E must stay in the set, complements are
// orthosupplements, `+` is disjoint join, and the distributive law holds.
fn is_boolean_subalgebra(algebra: &EffectAlgebra, set: &[Elem]) -> bool {
    let inside = |x: Option<Elem>| x.filter(|x| set.binary_search(x).is_ok());
    let (zero, one) = (algebra.zero(), algebra.one());
    if set.binary_search(&zero).is_err() || set.binary_search(&one).is_err() {
        return false;
    }
    for &e in set {
        let ep = algebra.orthosupplement(e);
        if inside(Some(ep)).is_none() || algebra.meet(e, ep) != Some(zero) || algebra.join(e, ep) != Some(one)
        {
            return false;
        }
        for &f in set {
            let (Some(m), Some(j)) = (inside(algebra.meet(e, f)), inside(algebra.join(e, f))) else {
                return false;
            };
            match algebra.sum(e, f) {
                Some(s) if m == zero && s == j => {}
                None if m != zero => {}
                _ => return false,
            }
        }
    }
    for &e in set {
        for &f in set {
            for &g in set {
                let lhs = algebra.join(f, g).and_then(|fg| algebra.meet(e, fg));
                let rhs = algebra
                    .meet(e, f)
                    .zip(algebra.meet(e, g))
                    .and_then(|(a, b)| algebra.join(a, b));
                if lhs.is_none() || lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// On an RDP algebra, checks that `e` is central exactly when `e ∧ e' = 0`.
/// Fails with the first element where the two tests disagree.
pub fn check_rdp_central_criterion(algebra: &EffectAlgebra) -> Result<Check> {
    if !check_rdp(algebra).holds {
        return Err(Error::Precondition("algebra lacks RDP".into()));
    }
    for e in algebra.elements() {
        let sharp = algebra.meet(e, algebra.orthosupplement(e)) == Some(algebra.zero());
        if is_central(algebra, e).is_central() != sharp {
            return Ok(Check::fail(vec![e], "centrality and e∧e'=0 disagree"));
        }
    }
    Ok(Check::pass())
}

/// For every `x, y` some central `e` gives `x∧e <= y∧e` and `x∧e' >= y∧e'`.
/// Fails with the first pair `(x,y)` that no central element separates.
pub fn check_general_comparability(algebra: &EffectAlgebra) -> Check {
    let central = center(algebra).elements;
    let mut parts = Vec::with_capacity(central.len());
    for &e in &central {
        let ep = algebra.orthosupplement(e);
        let mut row = Vec::with_capacity(algebra.len());
        for x in algebra.elements() {
            match algebra.meet(x, e).zip(algebra.meet(x, ep)) {
                Some(pair) => row.push(pair),
                None => return Check::fail(vec![x, e], "meet with a central element missing"),
            }
        }
        parts.push(row);
    }
    for x in algebra.elements() {
        for y in algebra.elements() {
            let comparable = parts.iter().any(|row| {
                let (xe, xep) = row[x.index()];
                let (ye, yep) = row[y.index()];
                algebra.leq(xe, ye) && algebra.leq(yep, xep)
            });
            if !comparable {
                return Check::fail(vec![x, y], "no central element separates the pair");
            }
        }
    }
    Check::pass()
}
