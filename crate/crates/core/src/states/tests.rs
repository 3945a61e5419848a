use num_traits::{One, Zero};

use super::*;
use crate::algebra::corpus::{boolean, chain, corpus, mo};
use crate::algebra::EffectAlgebraTable;
use crate::scalar::BigRational as Q;

fn q(n: i64, d: i64) -> Q {
    Q::ratio(n, d)
}

fn c2() -> EffectAlgebra {
    EffectAlgebra::new(EffectAlgebraTable::parse("elements: a\nzero: 0\none: 1\nsum: a a 1").unwrap())
        .unwrap()
}

// Basis enumeration: fix up to `dim` coordinates to 0 or 1 and keep the
// feasible points the equations then determine uniquely.
fn vertices_brute(e: &EffectAlgebra) -> Vec<Vec<Q>> {
    let sys = state_system::<Q>(e);
    let Some(base) = linalg::solve_equalities(e.len(), &sys.equalities) else {
        return Vec::new();
    };
    let d = base.dim();
    let elems: Vec<usize> = (0..e.len()).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<(usize, Q)>)> = vec![(0, Vec::new())];
    while let Some((from, fixed)) = stack.pop() {
        let mut eqs = sys.equalities.clone();
        eqs.extend(fixed.iter().map(|(i, v)| Equation::fix(*i, v.clone())));
        let Some(p) = linalg::solve_equalities(e.len(), &eqs) else {
            continue;
        };
        if p.dim() == 0 {
            if p.offset.iter().all(Scalar::in_unit_interval) {
                out.push(p.offset.clone());
            }
            continue;
        }
        if fixed.len() == d {
            continue;
        }
        for &i in &elems[from..] {
            for v in [q(0, 1), q(1, 1)] {
                let mut f = fixed.clone();
                f.push((i, v));
                stack.push((i + 1, f));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[test]
fn c2_has_a_single_state() {
    let e = c2();
    let p = vertices::<Q>(&e);
    assert_eq!(p.vertices.len(), 1);
    assert_eq!(p.affine_dimension, 0);
    assert_eq!(p.vertices[0].values(), &[q(0, 1), q(1, 2), q(1, 1)]);
    assert_eq!(p.vertices[0].render(&e), "0=0 a=1/2 1=1");
}

#[test]
fn boolean_vertices_are_dirac() {
    for n in 1..=4 {
        let e = boolean(n).unwrap();
        let p = vertices::<Q>(&e);
        assert_eq!(p.vertices.len(), n);
        assert_eq!(p.affine_dimension, n as isize - 1);
        for v in &p.vertices {
            assert!(v.values().iter().all(|x| x.is_zero() || x.is_one()));
        }
    }
}

#[test]
fn mo2_square() {
    let e = mo(2).unwrap();
    let p = vertices::<Q>(&e);
    assert_eq!(p.vertices.len(), 4);
    assert_eq!(p.affine_dimension, 2);
    let sys = state_system::<Q>(&e);
    let param = linalg::solve_equalities(e.len(), &sys.equalities).unwrap();
    assert_eq!(param.dim(), 2);
}

#[test]
fn dd_matches_basis_enumeration() {
    let spec = "exhaustive(5);mo(2);mo(3);boolean(3);grid(2,2);grid(1,2);chain(4);parity(4);\
                product(chain(2),boolean(1))";
    for entry in corpus(spec).unwrap() {
        let got: Vec<Vec<Q>> = vertices::<Q>(&entry.algebra)
            .vertices
            .into_iter()
            .map(StateVector::into_values)
            .collect();
        assert_eq!(got, vertices_brute(&entry.algebra), "{}", entry.label);
    }
}

#[test]
fn every_vertex_is_an_extremal_state() {
    for entry in corpus("exhaustive(5);mo(2);grid(2,2);boolean(3)").unwrap() {
        let e = &entry.algebra;
        for v in vertices::<Q>(e).vertices {
            assert!(is_state(e, &v));
            assert!(is_extremal(e, &v), "{}", entry.label);
        }
    }
}

#[test]
fn midpoints_are_not_extremal() {
    let e = mo(2).unwrap();
    let p = vertices::<Q>(&e);
    let mid = sigma_convex(&p.vertices[..2], &[q(1, 2), q(1, 2)]).unwrap();
    assert!(is_state(&e, &mid));
    assert!(!is_extremal(&e, &mid));

    let b = boolean(2).unwrap();
    let s: StateVector<Q> = parse_state(&b, "{1} = 1/3").unwrap();
    assert_eq!(s.value(b.elem("{2}").unwrap()), &q(2, 3));
    assert!(is_state(&b, &s));
    assert!(!is_extremal(&b, &s));
}

#[test]
fn criterion_on_boolean_states() {
    let b = boolean(3).unwrap();
    for v in vertices::<Q>(&b).vertices {
        assert!(criterion32(&b, &v).holds);
    }
    let b2 = boolean(2).unwrap();
    let uniform: StateVector<Q> = parse_state(&b2, "{1} = 1/2").unwrap();
    let check = criterion32(&b2, &uniform);
    assert!(!check.holds);
    assert_eq!(check.witness_names(&b2).unwrap(), "({1},{2})");
}

#[test]
fn jauch_piron_examples() {
    let b = boolean(2).unwrap();
    let uniform: StateVector<Q> = parse_state(&b, "{1} = 1/2").unwrap();
    assert!(is_jauch_piron(&b, &uniform).holds);
    // on MO2 the vertex with s(a) = s(b) = 1 has only 0 below both
    let m = mo(2).unwrap();
    let s: StateVector<Q> = parse_state(&m, "a = 1\nb = 1").unwrap();
    let check = is_jauch_piron(&m, &s);
    assert!(!check.holds);
    assert_eq!(check.witness_names(&m).unwrap(), "(a,b)");
}

#[test]
fn sigma_convex_validation() {
    let b = boolean(2).unwrap();
    let p = vertices::<Q>(&b);
    assert_eq!(sigma_convex(&p.vertices[..1], &[q(1, 1)]).unwrap(), p.vertices[0]);
    let uniform = sigma_convex(&p.vertices, &[q(1, 2), q(1, 2)]).unwrap();
    assert!(uniform.values()[1..3].iter().all(|v| *v == q(1, 2)));
    assert!(matches!(
        sigma_convex(&p.vertices, &[q(1, 2), q(1, 3)]),
        Err(Error::InvalidWeights(_))
    ));
    assert!(matches!(
        sigma_convex(&p.vertices, &[q(3, 2), q(-1, 2)]),
        Err(Error::InvalidWeights(_))
    ));
    assert!(matches!(
        sigma_convex::<Q>(&[], &[]),
        Err(Error::InvalidWeights(_))
    ));

    let m = mo(2).unwrap();
    let v = vertices::<Q>(&m).vertices;
    let mix = sigma_convex(&v[..2], &[q(1, 3), q(2, 3)]).unwrap();
    assert!(is_state(&m, &mix));
    for (i, x) in mix.values().iter().enumerate() {
        assert_eq!(
            *x,
            q(1, 3) * v[0].values()[i].clone() + q(2, 3) * v[1].values()[i].clone()
        );
    }
}

#[test]
fn system_properties() {
    let b = boolean(3).unwrap();
    let all = vertices::<Q>(&b).vertices;
    let props = state_system_properties(&b, &all);
    assert!(props.order_determining.holds);
    assert!(props.separating.holds);

    let b2 = boolean(2).unwrap();
    let uniform: StateVector<Q> = parse_state(&b2, "{1} = 1/2").unwrap();
    let props = state_system_properties(&b2, &[uniform]);
    assert!(!props.separating.holds);
    assert_eq!(props.separating.witness_names(&b2).unwrap(), "({1},{2})");
}

#[test]
fn state_file_errors() {
    let m = mo(2).unwrap();
    assert!(matches!(
        parse_state::<Q>(&m, "a = 1/2"),
        Err(Error::Underdetermined(name)) if name == "b"
    ));
    assert!(matches!(
        parse_state::<Q>(&m, "z = 1"),
        Err(Error::UnknownElement(_))
    ));
    assert!(matches!(
        parse_state::<Q>(&m, "a = 1\na = 1"),
        Err(Error::Parse(ParseError { line: 2, .. }))
    ));
    assert!(matches!(parse_state::<Q>(&m, "a 1"), Err(Error::Parse(_))));
    assert!(matches!(parse_state::<Q>(&m, "a = x"), Err(Error::Parse(_))));
    assert!(matches!(
        parse_state::<Q>(&m, "a = 1\na' = 1\nb = 0"),
        Err(Error::Infeasible(_))
    ));
    // a full list is accepted as given, even when it is not a state
    let s: StateVector<Q> = parse_state(&chain(1).unwrap(), "0 = 0\n1 = 1/2").unwrap();
    assert!(!is_state(&chain(1).unwrap(), &s));
}

#[test]
fn slicing_can_empty_the_space() {
    let e = c2();
    let a = e.elem("a").unwrap();
    let space = StateSpace::<Q>::with_constraints(&e, &[(a, q(0, 1))]);
    assert_eq!(space.parameters(), None);
    let p = space.vertices();
    assert!(p.vertices.is_empty());
    assert_eq!(p.affine_dimension, -1);
}
