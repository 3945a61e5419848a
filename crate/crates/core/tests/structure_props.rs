mod common;

use effalg::structure::{
    center, check_general_comparability, check_lattice, check_rdp, is_central, mv_construct,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn center_is_boolean(e in common::algebra()) {
        let c = center(&e);
        prop_assert!(c.contains(e.zero()) && c.contains(e.one()));
        for &x in &c.elements {
            prop_assert!(c.contains(e.orthosupplement(x)));
        }
        prop_assert!(c.boolean_verified);
    }

    #[test]
    fn rdp_centrality_shortcut(e in common::algebra()) {
        prop_assume!(check_rdp(&e).holds);
        for x in e.elements() {
            let shortcut = e.meet(x, e.orthosupplement(x)) == Some(e.zero());
            prop_assert_eq!(is_central(&e, x).is_central(), shortcut, "{}", e.name(x));
        }
    }

    #[test]
    fn mv_iff_lattice_and_rdp(e in common::algebra()) {
        prop_assert_eq!(mv_construct(&e).is_some(), check_lattice(&e).holds && check_rdp(&e).holds);
    }

    #[test]
    fn comparability_gives_lattice(e in common::algebra()) {
        if check_general_comparability(&e).holds {
            prop_assert!(check_lattice(&e).holds);
        }
    }
}
