mod common;

use effalg::represent::{
    aff_state, aff_sum, classify_simplex, decompose, sp_is_element, sp_leq, sp_sum, theorem51_report,
    PivotOrder, RationalPair,
};
use effalg::states::{sigma_convex, vertices};
use effalg::structure::check_rdp;
use effalg::{Rational as Q, Scalar};
use proptest::prelude::*;

type Pair = RationalPair<Q>;

fn unit_rational() -> impl Strategy<Value = Q> {
    (1i64..=12).prop_flat_map(|d| (0..=d).prop_map(move |n| Q::ratio(n, d)))
}

fn pair() -> impl Strategy<Value = Pair> {
    (unit_rational(), unit_rational()).prop_map(|(a, b)| Pair::new(a, b))
}

fn element() -> impl Strategy<Value = Pair> {
    pair().prop_filter("element of the strict interval", sp_is_element)
}

proptest! {
    #[test]
    fn strict_order_is_partial(a in pair(), b in pair(), c in pair()) {
        prop_assert!(sp_leq(&a, &a));
        if sp_leq(&a, &b) && sp_leq(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if sp_leq(&a, &b) && sp_leq(&b, &c) {
            prop_assert!(sp_leq(&a, &c));
        }
    }

    #[test]
    fn strict_sum_commutes_and_associates(a in element(), b in element(), c in element()) {
        prop_assert_eq!(sp_sum(&a, &b).unwrap(), sp_sum(&b, &a).unwrap());
        let left = sp_sum(&a, &b).unwrap().and_then(|ab| sp_sum(&ab, &c).unwrap());
        let right = sp_sum(&b, &c).unwrap().and_then(|bc| sp_sum(&a, &bc).unwrap());
        if left.is_some() && right.is_some() {
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn affine_point_evaluations_are_states(x in unit_rational(), f in pair(), g in pair()) {
        let one = Pair::new(Q::ratio(1, 1), Q::ratio(1, 1));
        prop_assert_eq!(aff_state(&x, &one).unwrap(), Q::ratio(1, 1));
        let v = aff_state(&x, &f).unwrap();
        prop_assert!(v.in_unit_interval());
        if let Some(h) = aff_sum(&f, &g) {
            prop_assert_eq!(aff_state(&x, &h).unwrap(), v + aff_state(&x, &g).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn theorem_conditions_agree(e in common::algebra()) {
        prop_assume!(check_rdp(&e).holds);
        let r = theorem51_report::<Q>(&e).unwrap();
        prop_assert!(r.agree, "{:?}", r);
    }

    #[test]
    fn simplex_weights_ignore_pivot_order(e in common::algebra(), raw in prop::collection::vec(1i64..20, 16)) {
        let p = vertices::<Q>(&e);
        prop_assume!(classify_simplex(&p).is_simplex());
        let k = p.vertices.len();
        prop_assume!(k <= raw.len());
        let total: i64 = raw[..k].iter().sum();
        let w: Vec<Q> = raw[..k].iter().map(|&r| Q::ratio(r, total)).collect();
        let s = sigma_convex(&p.vertices, &w).unwrap();
        let fwd = decompose(&e, &p, &s, PivotOrder::Forward).unwrap();
        let rev = decompose(&e, &p, &s, PivotOrder::Reverse).unwrap();
        prop_assert_eq!(&fwd, &rev);
        prop_assert_eq!(fwd.weights, w);
    }
}
