use std::fmt;

use super::table::{EffectAlgebraTable, Elem};

/// Which defining property a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomId {
    /// `a + b` defined iff `b + a` defined, and equal.
    Commutativity,
    /// `(a + b) + c = a + (b + c)` with matching definedness.
    Associativity,
    /// Every `a` has exactly one `a'` with `a + a' = 1`.
    Orthosupplement,
    /// `a + 1` defined forces `a = 0`.
    ZeroOne,
    /// The derived relation is a partial order and differences are unique.
    Order,
}

impl AxiomId {
    pub fn code(self) -> &'static str {
        match self {
            AxiomId::Commutativity => "i",
            AxiomId::Associativity => "ii",
            AxiomId::Orthosupplement => "iii",
            AxiomId::ZeroOne => "iv",
            AxiomId::Order => "order",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: AxiomId,
    pub witness: Vec<String>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) ({}) {}",
            self.axiom,
            self.witness.join(","),
            self.message
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn summary(&self) -> String {
        match self.violations.first() {
            None => "all axioms hold".to_string(),
            Some(v) if self.violations.len() == 1 => v.to_string(),
            Some(v) => format!("{v} (and {} more)", self.violations.len() - 1),
        }
    }

    pub fn first(&self, axiom: AxiomId) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// Checks axioms (i)-(iv), that the derived `<=` is a partial order, and
/// that `b - a` is unique whenever it exists. Failures are collected, not
/// thrown.
pub fn verify_axioms(table: &EffectAlgebraTable) -> AxiomReport {
    let mut violations = Vec::new();
    check(table, &mut |v| {
        violations.push(v);
        true
    });
    AxiomReport {
        passed: violations.is_empty(),
        violations,
    }
}

/// Like [`verify_axioms`] but stops at the first violation.
pub fn is_effect_algebra(table: &EffectAlgebraTable) -> bool {
    let mut ok = true;
    check(table, &mut |_| {
        ok = false;
        false
    });
    ok
}

// `sink` returns whether to keep going.
fn check(table: &EffectAlgebraTable, sink: &mut dyn FnMut(Violation) -> bool) {
    let n = table.len();
    let name = |e: Elem| table.name(e).to_string();
    let elems: Vec<Elem> = table.elements().collect();
    let (zero, one) = (table.zero(), table.one());

    macro_rules! report {
        ($axiom:expr, [$($w:expr),*], $($msg:tt)*) => {
            if !sink(Violation {
                axiom: $axiom,
                witness: vec![$(name($w)),*],
                message: format!($($msg)*),
            }) {
                return;
            }
        };
    }

    for &a in &elems {
        for &b in &elems {
            if b.index() < a.index() {
                continue;
            }
            if table.sum(a, b) != table.sum(b, a) {
                report!(AxiomId::Commutativity, [a, b], "a+b and b+a disagree");
            }
        }
    }

    let defined: Vec<(Elem, Elem, Elem)> = elems
        .iter()
        .flat_map(|&a| {
            elems
                .iter()
                .filter_map(move |&b| table.sum(a, b).map(|c| (a, b, c)))
        })
        .collect();

    // (a+b)+c defined => a+(b+c) defined and equal
    for &(a, b, ab) in &defined {
        for &c in &elems {
            if let Some(lhs) = table.sum(ab, c) {
                match table.sum(b, c).and_then(|bc| table.sum(a, bc)) {
                    Some(rhs) if rhs == lhs => {}
                    Some(rhs) => report!(
                        AxiomId::Associativity,
                        [a, b, c],
                        "(a+b)+c = {} but a+(b+c) = {}",
                        name(lhs),
                        name(rhs)
                    ),
                    None => report!(
                        AxiomId::Associativity,
                        [a, b, c],
                        "(a+b)+c defined but a+(b+c) undefined"
                    ),
                }
            }
        }
    }
    // a+(b+c) defined => (a+b)+c defined
    for &(b, c, bc) in &defined {
        for &a in &elems {
            if table.sum(a, bc).is_some() && table.sum(a, b).and_then(|ab| table.sum(ab, c)).is_none() {
                report!(
                    AxiomId::Associativity,
                    [a, b, c],
                    "a+(b+c) defined but (a+b)+c undefined"
                );
            }
        }
    }

    for &a in &elems {
        let complements: Vec<Elem> = elems
            .iter()
            .copied()
            .filter(|&c| table.sum(a, c) == Some(one))
            .collect();
        match complements.len() {
            1 => {}
            0 => report!(AxiomId::Orthosupplement, [a], "no a' with a+a'=1"),
            _ => {
                let list: Vec<String> = complements.iter().map(|&c| name(c)).collect();
                report!(
                    AxiomId::Orthosupplement,
                    [a],
                    "a+a'=1 has several solutions: {}",
                    list.join(",")
                );
            }
        }
    }

    for &a in &elems {
        if a != zero && table.sum(a, one).is_some() {
            report!(AxiomId::ZeroOne, [a], "a+1 is defined for a != 0");
        }
    }

    // derived order and uniqueness of differences
    let mut leq = vec![false; n * n];
    let mut diff: Vec<Option<Elem>> = vec![None; n * n];
    for &(a, c, b) in &defined {
        leq[a.index() * n + b.index()] = true;
        let slot = &mut diff[a.index() * n + b.index()];
        match *slot {
            Some(prev) if prev != c => report!(
                AxiomId::Order,
                [a, b],
                "difference not unique: a+{}=b and a+{}=b",
                name(prev),
                name(c)
            ),
            _ => *slot = Some(c),
        }
    }
    for &a in &elems {
        if !leq[a.index() * n + a.index()] {
            report!(AxiomId::Order, [a], "a <= a fails");
        }
        for &b in &elems {
            if a.index() < b.index() && leq[a.index() * n + b.index()] && leq[b.index() * n + a.index()] {
                report!(AxiomId::Order, [a, b], "a <= b and b <= a with a != b");
            }
        }
    }
    for &a in &elems {
        for &b in &elems {
            if !leq[a.index() * n + b.index()] {
                continue;
            }
            for &c in &elems {
                if leq[b.index() * n + c.index()] && !leq[a.index() * n + c.index()] {
                    report!(AxiomId::Order, [a, b, c], "a <= b <= c but not a <= c");
                }
            }
        }
    }
}
