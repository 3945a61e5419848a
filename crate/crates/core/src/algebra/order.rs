use std::ops::Deref;

use fixedbitset::FixedBitSet;

use super::axioms::verify_axioms;
use super::table::{EffectAlgebraTable, Elem};
use crate::error::{Error, Result};

/// A table that passed [`verify_axioms`], with the derived order,
/// orthosupplements and differences precomputed.
#[derive(Clone, Debug)]
pub struct EffectAlgebra {
    table: EffectAlgebraTable,
    ortho: Vec<Elem>,
    // diff[a * n + b] = c with a + c = b
    diff: Vec<Option<Elem>>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    down_size: Vec<usize>,
}

impl Deref for EffectAlgebra {
    type Target = EffectAlgebraTable;

    fn deref(&self) -> &EffectAlgebraTable {
        &self.table
    }
}

impl TryFrom<EffectAlgebraTable> for EffectAlgebra {
    type Error = Error;

    fn try_from(table: EffectAlgebraTable) -> Result<Self> {
        Self::new(table)
    }
}

impl EffectAlgebra {
    pub fn new(table: EffectAlgebraTable) -> Result<Self> {
        let report = verify_axioms(&table);
        if !report.passed {
            return Err(Error::AxiomsFailed(Box::new(report)));
        }
        Ok(Self::new_unchecked(table))
    }

    /// Builds the caches without re-running the axiom checks. The caller
    /// must know the table is an effect algebra.
    pub(crate) fn new_unchecked(table: EffectAlgebraTable) -> Self {
        let n = table.len();
        let mut ortho = vec![table.zero(); n];
        let mut diff = vec![None; n * n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, b, c) in table.sum_entries() {
            for (x, y) in [(a, b), (b, a)] {
                diff[x.index() * n + c.index()] = Some(y);
                down[c.index()].insert(x.index());
                up[x.index()].insert(c.index());
                if c == table.one() {
                    ortho[x.index()] = y;
                }
            }
        }
        let down_size = down.iter().map(|s| s.count_ones(..)).collect();
        Self {
            table,
            ortho,
            diff,
            down,
            up,
            down_size,
        }
    }

    pub fn table(&self) -> &EffectAlgebraTable {
        &self.table
    }

    pub fn into_table(self) -> EffectAlgebraTable {
        self.table
    }

    /// `a <= b` iff `a + c = b` for some `c`.
    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.down[b.index()].contains(a.index())
    }

    /// The unique `a'` with `a + a' = 1`.
    #[inline]
    pub fn orthosupplement(&self, a: Elem) -> Elem {
        self.ortho[a.index()]
    }

    /// `b - a`, the unique `c` with `a + c = b`.
    pub fn difference(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.try_difference(a, b).ok_or_else(|| Error::NotBelow {
            a: self.name(a).to_string(),
            b: self.name(b).to_string(),
        })
    }

    #[inline]
    pub fn try_difference(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.diff[a.index() * self.len() + b.index()]
    }

    /// Elements below `a`, as a bitset over element indices.
    pub fn down_set(&self, a: Elem) -> &FixedBitSet {
        &self.down[a.index()]
    }

    pub fn up_set(&self, a: Elem) -> &FixedBitSet {
        &self.up[a.index()]
    }

    /// Common lower bounds of `a` and `b`.
    pub fn lower_bounds(&self, a: Elem, b: Elem) -> FixedBitSet {
        let mut set = self.down[a.index()].clone();
        set.intersect_with(&self.down[b.index()]);
        set
    }

    pub fn upper_bounds(&self, a: Elem, b: Elem) -> FixedBitSet {
        let mut set = self.up[a.index()].clone();
        set.intersect_with(&self.up[b.index()]);
        set
    }

    /// Greatest lower bound in the derived poset, if one exists.
    pub fn meet(&self, a: Elem, b: Elem) -> Option<Elem> {
        let bounds = self.lower_bounds(a, b);
        // the glb, if any, is the common lower bound with the largest down-set
        let candidate = bounds
            .ones()
            .max_by_key(|&i| (self.down_size[i], usize::MAX - i))?;
        bounds
            .is_subset(&self.down[candidate])
            .then(|| Elem::new(candidate))
    }

    /// Least upper bound in the derived poset, if one exists.
    pub fn join(&self, a: Elem, b: Elem) -> Option<Elem> {
        let bounds = self.upper_bounds(a, b);
        let candidate = bounds.ones().min_by_key(|&i| (self.down_size[i], i))?;
        bounds
            .is_subset(&self.up[candidate])
            .then(|| Elem::new(candidate))
    }

    /// Checks that `map` sends 0 to 0, 1 to 1 and preserves every defined sum.
    /// `map[i]` is the image of element `i`.
    pub fn is_homomorphism(&self, target: &EffectAlgebra, map: &[Elem]) -> HomomorphismCheck {
        assert_eq!(map.len(), self.len(), "map must cover every element");
        let img = |e: Elem| map[e.index()];
        if img(self.zero()) != target.zero() {
            return HomomorphismCheck::broken(format!("map(0) = {} != 0", target.name(img(self.zero()))));
        }
        if img(self.one()) != target.one() {
            return HomomorphismCheck::broken(format!("map(1) = {} != 1", target.name(img(self.one()))));
        }
        for (a, b, c) in self.sum_entries() {
            let lhs = target.sum(img(a), img(b));
            if lhs != Some(img(c)) {
                let got = lhs.map_or("undefined".to_string(), |e| target.name(e).to_string());
                return HomomorphismCheck::broken(format!(
                    "{}+{}={} but map({})+map({})={} != {}",
                    self.name(a),
                    self.name(b),
                    self.name(c),
                    self.name(a),
                    self.name(b),
                    got,
                    target.name(img(c))
                ));
            }
        }
        HomomorphismCheck {
            holds: true,
            witness: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

impl HomomorphismCheck {
    fn broken(witness: String) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ea(text: &str) -> EffectAlgebra {
        EffectAlgebra::new(EffectAlgebraTable::parse(text).unwrap()).unwrap()
    }

    fn c2() -> EffectAlgebra {
        ea("elements: a\nzero: 0\none: 1\nsum: a a 1")
    }

    fn mo2() -> EffectAlgebra {
        ea("elements: a a' b b'\nzero: 0\none: 1\nsum: a a' 1\nsum: b b' 1")
    }

    fn c4() -> EffectAlgebra {
        ea("elements: g 2g\nzero: 0\none: 1\nsum: g g 2g\nsum: g 2g 1")
    }

    #[test]
    fn zero_is_below_everything() {
        for e in [c2(), mo2(), c4()] {
            for x in e.elements() {
                assert!(e.leq(e.zero(), x));
            }
        }
    }

    #[test]
    fn chain_order() {
        let e = c2();
        let a = e.elem("a").unwrap();
        assert!(e.leq(a, e.one()));
        assert!(!e.leq(e.one(), a));
    }

    #[test]
    fn mo2_incomparable() {
        let e = mo2();
        let (a, b) = (e.elem("a").unwrap(), e.elem("b").unwrap());
        assert!(!e.leq(a, b));
        assert!(matches!(e.difference(a, b), Err(Error::NotBelow { .. })));
        assert_eq!(e.difference(a, b).unwrap_err().to_string(), "a not <= b");
    }

    #[test]
    fn orthosupplement_and_difference() {
        let e = c4();
        assert_eq!(e.orthosupplement(e.zero()), e.one());
        let g = e.elem("g").unwrap();
        let g2 = e.elem("2g").unwrap();
        assert_eq!(e.orthosupplement(g), g2);
        assert_eq!(e.difference(g, e.one()).unwrap(), g2);
        assert_eq!(e.difference(g, g).unwrap(), e.zero());
    }

    #[test]
    fn meets_and_joins() {
        let b = ea("elements: x x'\nzero: 0\none: 1\nsum: x x' 1");
        let (x, xp) = (b.elem("x").unwrap(), b.elem("x'").unwrap());
        assert_eq!(b.meet(x, x), Some(x));
        assert_eq!(b.meet(x, xp), Some(b.zero()));
        assert_eq!(b.join(x, xp), Some(b.one()));

        // MO2: a and b have only 0 below and only 1 above
        let m = mo2();
        let (a, bb) = (m.elem("a").unwrap(), m.elem("b").unwrap());
        assert_eq!(m.meet(a, bb), Some(m.zero()));
        assert_eq!(m.join(a, bb), Some(m.one()));
    }

    #[test]
    fn homomorphisms() {
        let e = c4();
        let id: Vec<Elem> = e.elements().collect();
        assert!(e.is_homomorphism(&e, &id).holds);

        let zero_map = vec![e.zero(); e.len()];
        let check = e.is_homomorphism(&e, &zero_map);
        assert!(!check.holds);
        assert!(check.witness.unwrap().contains("map(1)"));

        // C4 -> C2 collapsing g to 0 and 2g to a breaks g+2g=1
        let c = c2();
        let collapse: Vec<Elem> = ["0", "0", "a", "1"].iter().map(|n| c.elem(n).unwrap()).collect();
        let check = e.is_homomorphism(&c, &collapse);
        assert!(!check.holds);
        assert!(check.witness.is_some());
    }
}
