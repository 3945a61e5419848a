use super::Check;
use crate::algebra::{EffectAlgebra, Elem};

/// Whether every pair has a meet and a join. All meets are checked before
/// any join, so a failing meet is reported in preference to a failing join.
pub fn check_lattice(algebra: &EffectAlgebra) -> Check {
    let elems: Vec<Elem> = algebra.elements().collect();
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            if algebra.meet(a, b).is_none() {
                return Check::fail(vec![a, b], "no meet");
            }
        }
    }
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            if algebra.join(a, b).is_none() {
                return Check::fail(vec![a, b], "no join");
            }
        }
    }
    Check::pass()
}

/// A total truncated sum `⊕` on the elements of an effect algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvAlgebra {
    n: usize,
    oplus: Vec<Elem>,
}

impl MvAlgebra {
    pub fn oplus(&self, a: Elem, b: Elem) -> Elem {
        self.oplus[a.index() * self.n + b.index()]
    }
}

/// Turns a lattice-ordered effect algebra into an MV-algebra via
/// `a ⊕ b = a + (b ∧ a')`, then verifies the MV axioms and that the partial
/// sum recovered from `⊕` is the original one. `None` when any meet is
/// missing or any check fails.
pub fn mv_construct(algebra: &EffectAlgebra) -> Option<MvAlgebra> {
    let n = algebra.len();
    let elems: Vec<Elem> = algebra.elements().collect();
    let star = |a: Elem| algebra.orthosupplement(a);

    let mut oplus = Vec::with_capacity(n * n);
    for &a in &elems {
        for &b in &elems {
            let part = algebra.meet(b, star(a))?;
            oplus.push(algebra.sum(a, part)?);
        }
    }
    let mv = MvAlgebra { n, oplus };
    let op = |a: Elem, b: Elem| mv.oplus(a, b);
    let (zero, one) = (algebra.zero(), algebra.one());

    // commutative monoid with neutral 0
    for &a in &elems {
        if op(a, zero) != a {
            return None;
        }
        for &b in &elems {
            if op(a, b) != op(b, a) {
                return None;
            }
            for &c in &elems {
                if op(op(a, b), c) != op(a, op(b, c)) {
                    return None;
                }
            }
        }
    }
    if star(zero) != one {
        return None;
    }
    for &x in &elems {
        if star(star(x)) != x || op(x, one) != one {
            return None;
        }
        for &y in &elems {
            if op(x, star(op(x, star(y)))) != op(y, star(op(y, star(x)))) {
                return None;
            }
        }
    }
    // a + b defined  <=>  a <= b* in the MV order (a* ⊕ b* = 1), and then ⊕ = +
    for &a in &elems {
        for &b in &elems {
            let mv_defined = op(star(a), star(b)) == one;
            match algebra.sum(a, b) {
                Some(c) if mv_defined && op(a, b) == c => {}
                None if !mv_defined => {}
                _ => return None,
            }
        }
    }
    Some(mv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus::{boolean, chain, corpus, mo, parity};
    use crate::structure::check_rdp;

    #[test]
    fn lattices() {
        assert!(check_lattice(&boolean(3).unwrap()).holds);
        for n in 1..=6 {
            assert!(check_lattice(&chain(n).unwrap()).holds);
        }
    }

    #[test]
    fn parity_meet_witness() {
        let e = parity(6).unwrap();
        let check = check_lattice(&e);
        assert!(!check.holds);
        assert_eq!(check.witness_names(&e).unwrap(), "(χ{1,2,3,4},χ{1,2,3,5})");
        let (a, b) = (e.elem("χ{1,2,3,4}").unwrap(), e.elem("χ{1,2,3,5}").unwrap());
        assert_eq!(e.meet(a, b), None);
    }

    #[test]
    fn boolean_oplus_is_join() {
        let b = boolean(2).unwrap();
        let mv = mv_construct(&b).expect("Boolean algebras are MV");
        for x in b.elements() {
            for y in b.elements() {
                assert_eq!(Some(mv.oplus(x, y)), b.join(x, y));
            }
        }
    }

    #[test]
    fn chain_oplus_truncates() {
        let c = chain(4).unwrap();
        let mv = mv_construct(&c).unwrap();
        let g = |name| c.elem(name).unwrap();
        assert_eq!(mv.oplus(g("g"), g("2g")), g("3g"));
        assert_eq!(mv.oplus(g("2g"), g("2g")), c.one());
        assert_eq!(mv.oplus(g("3g"), g("3g")), c.one());
    }

    #[test]
    fn mo2_is_not_mv() {
        assert!(mv_construct(&mo(2).unwrap()).is_none());
    }

    #[test]
    fn mv_iff_lattice_and_rdp() {
        for entry in corpus("standard").unwrap() {
            let e = &entry.algebra;
            if e.len() > 40 {
                continue;
            }
            let expected = check_lattice(e).holds && check_rdp(e).holds;
            assert_eq!(mv_construct(e).is_some(), expected, "{}", entry.label);
        }
    }
}
