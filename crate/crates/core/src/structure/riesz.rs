use super::Check;
use crate::algebra::{EffectAlgebra, Elem};

/// Riesz decomposition: every `x1 + x2 = y1 + y2` refines into
/// `c11 + c12 = x1`, `c21 + c22 = x2`, `c11 + c21 = y1`, `c12 + c22 = y2`.
/// Fails with the first unrefinable quadruple `(x1,x2,y1,y2)`.
pub fn check_rdp(algebra: &EffectAlgebra) -> Check {
    let n = algebra.len();
    let mut decompositions: Vec<Vec<(Elem, Elem)>> = vec![Vec::new(); n];
    for x1 in algebra.elements() {
        for x2 in algebra.elements() {
            if let Some(z) = algebra.sum(x1, x2) {
                decompositions[z.index()].push((x1, x2));
            }
        }
    }
    for pairs in &decompositions {
        for &(x1, x2) in pairs {
            for &(y1, y2) in pairs {
                if refine(algebra, x1, x2, y1, y2).is_none() {
                    return Check::fail(vec![x1, x2, y1, y2], "no refinement");
                }
            }
        }
    }
    Check::pass()
}

/// A refinement `[c11, c12, c21, c22]` of `x1 + x2 = y1 + y2`, if any.
pub(crate) fn refine(algebra: &EffectAlgebra, x1: Elem, x2: Elem, y1: Elem, y2: Elem) -> Option<[Elem; 4]> {
    algebra.lower_bounds(x1, y1).ones().find_map(|i| {
        let c11 = Elem::new(i);
        let c12 = algebra.try_difference(c11, x1)?;
        let c21 = algebra.try_difference(c11, y1)?;
        let c22 = algebra.try_difference(c12, y2)?;
        (algebra.sum(c21, c22) == Some(x2)).then_some([c11, c12, c21, c22])
    })
}

/// Order interpolation: whenever `x1, x2 <= y1, y2` some `z` satisfies
/// `x1, x2 <= z <= y1, y2`. On a finite poset this also settles the
/// countable version. Fails with `(x1,x2,y1,y2)`.
pub fn check_interpolation(algebra: &EffectAlgebra) -> Check {
    for x1 in algebra.elements() {
        for x2 in algebra.elements().filter(|x2| x2.index() >= x1.index()) {
            let above = algebra.upper_bounds(x1, x2);
            let ys: Vec<usize> = above.ones().collect();
            for (k, &y1) in ys.iter().enumerate() {
                for &y2 in &ys[k..] {
                    let mut between = above.clone();
                    between.intersect_with(algebra.down_set(Elem::new(y1)));
                    between.intersect_with(algebra.down_set(Elem::new(y2)));
                    if between.is_clear() {
                        return Check::fail(vec![x1, x2, Elem::new(y1), Elem::new(y2)], "no interpolant");
                    }
                }
            }
        }
    }
    Check::pass()
}
