use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::*;
use crate::algebra::corpus::parity;
use crate::scalar::BigRational as Q;
use crate::states::StateVector;
use crate::structure::{center, check_lattice, mv_construct};

fn q(n: i64, d: i64) -> Q {
    Q::ratio(n, d)
}

fn pts(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn gen(values: &[Q]) -> FunctionTable<Q> {
    FunctionTable::new("g", values.to_vec())
}

// Repeats full passes over all pairs until nothing new appears.
fn closure_oracle(n: usize, gens: &[Vec<Q>], bold: bool) -> BTreeSet<Vec<Q>> {
    let mut set: BTreeSet<Vec<Q>> = gens.iter().cloned().collect();
    set.insert(vec![Q::zero(); n]);
    set.insert(vec![Q::one(); n]);
    loop {
        let cur: Vec<Vec<Q>> = set.iter().cloned().collect();
        let before = set.len();
        for f in &cur {
            set.insert(f.iter().map(|v| Q::one() - v).collect());
            for g in &cur {
                let s: Vec<Q> = f.iter().zip(g).map(|(a, b)| a + b).collect();
                if s.iter().all(|v| *v <= Q::one()) {
                    set.insert(s);
                } else if bold {
                    set.insert(s.into_iter().map(|v| v.min(Q::one())).collect());
                }
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

fn value_set(f: &FunctionFamily<Q>) -> BTreeSet<Vec<Q>> {
    f.members.iter().map(|m| m.values.clone()).collect()
}

#[test]
fn empty_generators_give_zero_and_one() {
    let f = clan_closure::<Q>(&pts(3), &[], DEFAULT_CAP).unwrap();
    let names: Vec<&str> = f.members.iter().map(|m| m.name.as_str()).collect();
    assert_eq!(names, ["0", "1"]);
    assert!(f.clan_violation().is_none());
}

#[test]
fn closures_match_oracle() {
    let cases: Vec<Vec<Vec<Q>>> = vec![
        vec![vec![q(1, 2), q(1, 4)]],
        vec![vec![q(1, 3), q(0, 1)], vec![q(1, 2), q(1, 2)]],
        vec![vec![q(1, 1), q(0, 1), q(1, 2)]],
    ];
    for gens in cases {
        let n = gens[0].len();
        let tables: Vec<_> = gens.iter().map(|g| gen(g)).collect();
        for bold in [false, true] {
            let f = if bold {
                bold_closure(&pts(n), &tables, DEFAULT_CAP).unwrap()
            } else {
                clan_closure(&pts(n), &tables, DEFAULT_CAP).unwrap()
            };
            assert_eq!(
                value_set(&f),
                closure_oracle(n, &gens, bold),
                "{gens:?} bold={bold}"
            );
            assert!(f.clan_violation().is_none());
            if bold {
                assert!(f.bold_violation().is_none());
            }
        }
    }
}

#[test]
fn quarter_generator() {
    let f = clan_closure(&pts(2), &[gen(&[q(1, 2), q(1, 4)])], DEFAULT_CAP).unwrap();
    // 2·(0,1/2) = (0,1) brings in the indicators of both points
    let expect: BTreeSet<Vec<Q>> = [
        [q(0, 1), q(0, 1)],
        [q(0, 1), q(1, 1)],
        [q(1, 1), q(0, 1)],
        [q(1, 2), q(1, 4)],
        [q(1, 1), q(1, 2)],
        [q(1, 2), q(3, 4)],
        [q(0, 1), q(1, 2)],
        [q(1, 1), q(1, 1)],
    ]
    .into_iter()
    .map(|a| a.to_vec())
    .collect();
    assert_eq!(value_set(&f), expect);
    assert_eq!(f.members[f.position(&[q(1, 2), q(1, 4)]).unwrap()].name, "g");
}

#[test]
fn cap_is_enforced() {
    let err = bold_closure(&pts(2), &[gen(&[q(1, 7), q(1, 5)])], 10).unwrap_err();
    assert!(matches!(err, Error::CapExceeded(10)));
}

#[test]
fn parity_family_matches_corpus() {
    let f = parity_family::<Q>(6).unwrap();
    assert_eq!(f.len(), 32);
    assert!(f.members.iter().all(|m| m.is_characteristic()));
    let e = as_effect_algebra(&f).unwrap();
    assert_eq!(e.names(), parity(6).unwrap().names());
    let w = check_lattice(&e);
    assert!(!w.holds);
    assert_eq!(w.witness_names(&e).unwrap(), "(χ{1,2,3,4},χ{1,2,3,5})");
}

#[test]
fn b0_can_be_smaller_than_the_center() {
    let f = FunctionFamily::raw(
        pts(2),
        vec![
            FunctionTable::new("0", vec![q(0, 1), q(0, 1)]),
            FunctionTable::new("f", vec![q(1, 1), q(1, 3)]),
            FunctionTable::new("f'", vec![q(0, 1), q(2, 3)]),
            FunctionTable::new("1", vec![q(1, 1), q(1, 1)]),
        ],
    );
    assert!(f.clan_violation().is_none());
    let e = as_effect_algebra(&f).unwrap();
    assert_eq!(center(&e).elements.len(), 4);
    let b0 = b0_algebra(&f, &e);
    assert_eq!(b0.members, vec![vec![], vec![0, 1]]);
    assert!(b0.verified);
    assert_eq!(b0.atoms, vec![vec![0, 1]]);
    assert!(!is_measurable(&f.members[1].values, &b0).unwrap());
    assert!(is_measurable(&[q(1, 1)], &b0).is_err());
}

#[test]
fn b0_of_parity_is_trivial() {
    let f = parity_family::<Q>(4).unwrap();
    let e = as_effect_algebra(&f).unwrap();
    let b0 = b0_algebra(&f, &e);
    assert_eq!(b0.members.len(), 2);
    assert_eq!(s0_family(&f).len(), 8);
}

fn product_is_meet(f: &FunctionFamily<Q>) {
    let e = as_effect_algebra(f).unwrap();
    let b0 = b0_algebra(f, &e);
    assert!(b0.verified);
    let chi = |set: &Subset| -> Vec<Q> {
        (0..f.points.len())
            .map(|i| if set.contains(&i) { Q::one() } else { Q::zero() })
            .collect()
    };
    for a in &b0.members {
        let ia = f.position(&chi(a)).unwrap();
        for (j, g) in f.members.iter().enumerate() {
            let prod: Vec<Q> = g.values.iter().zip(chi(a)).map(|(x, y)| x * y).collect();
            let k = f.position(&prod).expect("g·χ_A is a member");
            assert_eq!(e.meet(Elem::new(ia), Elem::new(j)), Some(Elem::new(k)));
        }
        for b in &b0.members {
            let meet: Subset = a.iter().copied().filter(|i| b.contains(i)).collect();
            let ib = f.position(&chi(b)).unwrap();
            let im = f.position(&chi(&meet)).unwrap();
            assert_eq!(e.meet(Elem::new(ia), Elem::new(ib)), Some(Elem::new(im)));
        }
    }
}

#[test]
fn central_indicators_multiply_as_meets() {
    product_is_meet(&powerset_grid_family::<Q>(2, 2, DEFAULT_CAP).unwrap());
    product_is_meet(&midpoint_family::<Q>(2).unwrap());
    let g = clan_closure(
        &pts(3),
        &[
            gen(&[q(1, 1), q(0, 1), q(0, 1)]),
            gen(&[q(0, 1), q(1, 3), q(1, 3)]),
        ],
        DEFAULT_CAP,
    )
    .unwrap();
    product_is_meet(&g);
}

#[test]
fn bold_algebras_are_mv() {
    for f in [
        powerset_grid_family::<Q>(2, 3, DEFAULT_CAP).unwrap(),
        bold_closure(&pts(2), &[gen(&[q(1, 2), q(1, 3)])], DEFAULT_CAP).unwrap(),
    ] {
        let e = as_effect_algebra(&f).unwrap();
        let mv = mv_construct(&e).expect("MV-algebra");
        for (i, a) in f.members.iter().enumerate() {
            for (j, b) in f.members.iter().enumerate() {
                let t: Vec<Q> = a
                    .values
                    .iter()
                    .zip(&b.values)
                    .map(|(x, y)| (x + y).min(Q::one()))
                    .collect();
                assert_eq!(
                    mv.oplus(Elem::new(i), Elem::new(j)),
                    Elem::new(f.position(&t).unwrap())
                );
            }
        }
    }
}

#[test]
fn powerset_grid_size() {
    let f = powerset_grid_family::<Q>(2, 4, DEFAULT_CAP).unwrap();
    assert_eq!(f.len(), 25);
    let f = powerset_grid_family::<Q>(3, 2, DEFAULT_CAP).unwrap();
    assert_eq!(f.len(), 27);
}

#[test]
fn integral_matches_state_on_bold_family() {
    let f = powerset_grid_family::<Q>(3, 2, DEFAULT_CAP).unwrap();
    let e = as_effect_algebra(&f).unwrap();
    let b0 = b0_algebra(&f, &e);
    assert_eq!(b0.members.len(), 8);
    let w = [q(1, 6), q(1, 2), q(1, 3)];
    let s = StateVector::new(
        f.members
            .iter()
            .map(|m| m.values.iter().zip(&w).map(|(v, x)| v * x).sum())
            .collect(),
    );
    let r = bk_verify(&f, &e, &b0, &s).unwrap();
    assert!(r.all_measurable && r.holds);
    assert!(r.measure.additive && r.measure.normalised);
    assert_eq!(r.measure.of(&[1]), Some(&q(1, 2)));
}

#[test]
fn midpoint_demo_findings() {
    let r = midpoint_demo::<Q>(2).unwrap();
    assert!(r.clan);
    assert_eq!(r.family.len(), 5);
    assert!(!r.rdp.holds);
    assert_eq!(r.b0.members, vec![vec![], vec![0, 1, 2]]);
    assert!(r.non_measurable.is_some());
    assert!(r.integrals_agree && r.states_valid && r.midpoint);
    assert!(!r.sc_extremal);
    assert!(midpoint_family::<Q>(3).is_err());
}

#[test]
fn parse_family_errors() {
    let ok = parse_family::<Q>("points: a b\nfunc f: 1/2 1 # c\n").unwrap();
    assert_eq!(ok.members[0].values, vec![q(1, 2), q(1, 1)]);
    for (text, line) in [
        ("func f: 1 1", 1),
        ("points: a b\nfunc f: 1", 2),
        ("points: a b\nfunc f: 2 0", 2),
        ("points: a a", 1),
        ("points: a\nfunc f: 0\nfunc f: 1", 3),
        ("points: a\nbogus", 2),
        ("points: a\nfunc f: x", 2),
    ] {
        match parse_family::<Q>(text) {
            Err(Error::Parse(p)) => assert_eq!(p.line, line, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    let text = ok.to_text();
    assert_eq!(parse_family::<Q>(&text).unwrap(), ok);
}
