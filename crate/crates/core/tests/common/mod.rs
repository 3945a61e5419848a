#![allow(dead_code)]

use std::sync::OnceLock;

use effalg::algebra::corpus::{boolean, chain, exhaustive, grid, mo, parity, product};
use effalg::EffectAlgebra;
use proptest::prelude::*;

pub fn small_exhaustive() -> &'static [EffectAlgebra] {
    static CACHE: OnceLock<Vec<EffectAlgebra>> = OnceLock::new();
    CACHE.get_or_init(|| exhaustive(5).unwrap())
}

/// Small algebras from every constructor the corpus knows.
pub fn algebra() -> impl Strategy<Value = EffectAlgebra> {
    prop_oneof![
        (1usize..=4).prop_map(|n| boolean(n).unwrap()),
        (1usize..=7).prop_map(|n| chain(n).unwrap()),
        (1usize..=3, 1usize..=3).prop_map(|(m, n)| grid(m, n).unwrap()),
        (2usize..=4).prop_map(|n| mo(n).unwrap()),
        prop_oneof![Just(2usize), Just(4)].prop_map(|n| parity(n).unwrap()),
        (1usize..=3, 1usize..=3).prop_map(|(a, b)| product(&chain(a).unwrap(), &chain(b).unwrap())),
        (0..small_exhaustive().len()).prop_map(|i| small_exhaustive()[i].clone()),
    ]
}
