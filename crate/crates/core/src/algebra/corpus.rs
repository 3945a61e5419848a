//! Deterministic families of effect algebras used by the property suites.
//!
//! A corpus spec is a `;`-separated list of generators:
//!
//! | generator          | algebra                                                   |
//! |--------------------|-----------------------------------------------------------|
//! | `boolean(n)`       | subsets of `{1..n}`, disjoint unions                      |
//! | `chain(n)`         | `Γ(ℤ, n)`: `0, g, 2g, …, 1 = ng`                          |
//! | `grid(m,n)`        | `Γ(ℤ², (m,n))`, the product of two chains                 |
//! | `mo(n)`            | horizontal sum of `n` four-element Boolean blocks          |
//! | `product(A,B)`     | direct product of two generated algebras                  |
//! | `parity(n)`        | even-size subsets of `{1..n}`, `n` even                   |
//! | `exhaustive(k)`    | every effect algebra with `2..=k` elements, `k <= 5`,     |
//! |                    | one representative per isomorphism class                  |
//! | `standard`         | the acceptance corpus                                     |
//! | `empty`            | nothing                                                   |

use super::axioms::is_effect_algebra;
use super::order::EffectAlgebra;
use super::table::{EffectAlgebraTable, Elem, ONE_NAME, ZERO_NAME};
use crate::error::{Error, Result};

pub const MAX_EXHAUSTIVE: usize = 5;

pub const STANDARD_CORPUS: &str = "boolean(1);boolean(2);boolean(3);boolean(4);\
chain(2);chain(3);chain(4);chain(5);chain(6);grid(2,2);grid(2,3);\
product(boolean(2),chain(2));product(chain(3),boolean(1));\
mo(2);mo(3);parity(4);exhaustive(5)";

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub algebra: EffectAlgebra,
}

/// Expands a corpus spec into its algebras, in spec order.
pub fn corpus(spec: &str) -> Result<Vec<CorpusEntry>> {
    let spec = spec.trim();
    match spec {
        "empty" | "" => return Ok(Vec::new()),
        "standard" => return corpus(STANDARD_CORPUS),
        _ => {}
    }
    let mut out = Vec::new();
    for item in split_top_level(spec, ';') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let generator = Generator::parse(item)?;
        if let Generator::Exhaustive(k) = generator {
            for (i, algebra) in exhaustive(k)?.into_iter().enumerate() {
                out.push(CorpusEntry {
                    label: format!("exhaustive({k})#{i}"),
                    algebra,
                });
            }
        } else {
            out.push(CorpusEntry {
                label: item.replace(' ', ""),
                algebra: generator.build()?,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Generator {
    Boolean(usize),
    Chain(usize),
    Grid(usize, usize),
    Mo(usize),
    Parity(usize),
    Product(Box<Generator>, Box<Generator>),
    Exhaustive(usize),
}

impl Generator {
    fn parse(text: &str) -> Result<Self> {
        let unsupported = || Error::UnsupportedCorpus(text.to_string());
        let text = text.trim();
        let open = text.find('(').ok_or_else(unsupported)?;
        if !text.ends_with(')') {
            return Err(unsupported());
        }
        let head = &text[..open];
        let args: Vec<&str> = split_top_level(&text[open + 1..text.len() - 1], ',');
        let int = |s: &str| s.trim().parse::<usize>().map_err(|_| unsupported());
        let g = match (head, args.as_slice()) {
            ("boolean", [n]) => Generator::Boolean(int(n)?),
            ("chain", [n]) => Generator::Chain(int(n)?),
            ("grid", [m, n]) => Generator::Grid(int(m)?, int(n)?),
            ("mo", [n]) => Generator::Mo(int(n)?),
            ("parity", [n]) => Generator::Parity(int(n)?),
            ("exhaustive", [k]) => Generator::Exhaustive(int(k)?),
            ("product", [a, b]) => {
                let a = Generator::parse(a)?;
                let b = Generator::parse(b)?;
                if matches!(a, Generator::Exhaustive(_)) || matches!(b, Generator::Exhaustive(_)) {
                    return Err(unsupported());
                }
                Generator::Product(Box::new(a), Box::new(b))
            }
            _ => return Err(unsupported()),
        };
        Ok(g)
    }

    fn build(&self) -> Result<EffectAlgebra> {
        match self {
            Generator::Boolean(n) => boolean(*n),
            Generator::Chain(n) => chain(*n),
            Generator::Grid(m, n) => grid(*m, *n),
            Generator::Mo(n) => mo(*n),
            Generator::Parity(n) => parity(*n),
            Generator::Product(a, b) => Ok(product(&a.build()?, &b.build()?)),
            Generator::Exhaustive(_) => unreachable!("expanded by the caller"),
        }
    }
}

fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn invalid(reason: String) -> Error {
    Error::UnsupportedCorpus(reason)
}

fn finish(builder: super::table::TableBuilder) -> EffectAlgebra {
    let table = builder.build().expect("generated table is consistent");
    EffectAlgebra::new(table).expect("generated table is an effect algebra")
}

/// Subsets of `{1..points}` ordered by size, then lexicographically.
fn subsets_by_size(points: usize, keep: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u64..1 << points)
        .map(|mask| {
            (0..points)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect()
        })
        .filter(|s: &Vec<usize>| keep(s))
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

fn set_algebra(points: usize, prefix: &str, keep: impl Fn(&[usize]) -> bool) -> EffectAlgebra {
    let sets = subsets_by_size(points, keep);
    let names: Vec<String> = sets
        .iter()
        .map(|s| {
            if s.is_empty() {
                ZERO_NAME.to_string()
            } else if s.len() == points {
                ONE_NAME.to_string()
            } else {
                let inner: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                format!("{prefix}{{{}}}", inner.join(","))
            }
        })
        .collect();
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, p| m | 1 << (p - 1)))
        .collect();
    let index: std::collections::HashMap<u64, usize> =
        masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut builder = EffectAlgebraTable::builder(names).expect("distinct names");
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i) {
            if a & b == 0 {
                if let Some(&k) = index.get(&(a | b)) {
                    builder
                        .sum(Elem::new(i), Elem::new(j), Elem::new(k))
                        .expect("consistent");
                }
            }
        }
    }
    finish(builder)
}

/// The Boolean algebra of subsets of `{1..n}`, `n >= 1`.
pub fn boolean(n: usize) -> Result<EffectAlgebra> {
    if n == 0 || n > 12 {
        return Err(invalid(format!("boolean({n})")));
    }
    Ok(set_algebra(n, "", |_| true))
}

/// Even-size subsets of `{1..n}` with disjoint union; `n` even. Elements are
/// named `χ{…}` and ordered by size, then lexicographically.
pub fn parity(n: usize) -> Result<EffectAlgebra> {
    if n == 0 || n % 2 == 1 || n > 12 {
        return Err(invalid(format!("parity({n})")));
    }
    Ok(set_algebra(n, "χ", |s| s.len() % 2 == 0))
}

/// `Γ(ℤ, n)` with elements `0, g, 2g, …, (n-1)g, 1`.
pub fn chain(n: usize) -> Result<EffectAlgebra> {
    if n == 0 {
        return Err(invalid("chain(0)".into()));
    }
    let names: Vec<String> = (0..=n)
        .map(|i| match i {
            0 => ZERO_NAME.to_string(),
            i if i == n => ONE_NAME.to_string(),
            1 => "g".to_string(),
            i => format!("{i}g"),
        })
        .collect();
    let mut builder = EffectAlgebraTable::builder(names).expect("distinct names");
    for i in 0..=n {
        for j in i..=n - i {
            builder
                .sum(Elem::new(i), Elem::new(j), Elem::new(i + j))
                .expect("consistent");
        }
    }
    Ok(finish(builder))
}

/// `Γ(ℤ², (m, n))` with elements named `(i,j)`.
pub fn grid(m: usize, n: usize) -> Result<EffectAlgebra> {
    if m == 0 || n == 0 {
        return Err(invalid(format!("grid({m},{n})")));
    }
    let cells: Vec<(usize, usize)> = (0..=m).flat_map(|i| (0..=n).map(move |j| (i, j))).collect();
    let names: Vec<String> = cells
        .iter()
        .map(|&(i, j)| match (i, j) {
            (0, 0) => ZERO_NAME.to_string(),
            (i, j) if i == m && j == n => ONE_NAME.to_string(),
            (i, j) => format!("({i},{j})"),
        })
        .collect();
    let at = |i: usize, j: usize| Elem::new(i * (n + 1) + j);
    let mut builder = EffectAlgebraTable::builder(names).expect("distinct names");
    for &(i1, j1) in &cells {
        for &(i2, j2) in &cells {
            if i1 + i2 <= m && j1 + j2 <= n {
                builder
                    .sum(at(i1, j1), at(i2, j2), at(i1 + i2, j1 + j2))
                    .expect("consistent");
            }
        }
    }
    Ok(finish(builder))
}

/// Horizontal sum of `n` blocks `{0, x, x', 1}`; block names are `a, b, …`.
pub fn mo(n: usize) -> Result<EffectAlgebra> {
    if n == 0 || n > 26 {
        return Err(invalid(format!("mo({n})")));
    }
    let mut names = vec![ZERO_NAME.to_string()];
    for k in 0..n {
        let letter = (b'a' + k as u8) as char;
        names.push(letter.to_string());
        names.push(format!("{letter}'"));
    }
    names.push(ONE_NAME.to_string());
    let one = Elem::new(names.len() - 1);
    let mut builder = EffectAlgebraTable::builder(names).expect("distinct names");
    for k in 0..n {
        builder
            .sum(Elem::new(1 + 2 * k), Elem::new(2 + 2 * k), one)
            .expect("consistent");
    }
    Ok(finish(builder))
}

/// Direct product with componentwise sums. Elements are named `(x,y)` except
/// for the reserved `0` and `1`.
pub fn product(left: &EffectAlgebra, right: &EffectAlgebra) -> EffectAlgebra {
    let (n, m) = (left.len(), right.len());
    let pair = |x: Elem, y: Elem| Elem::new(x.index() * m + y.index());
    let names: Vec<String> = left
        .elements()
        .flat_map(|x| right.elements().map(move |y| (x, y)))
        .map(|(x, y)| {
            if x == left.zero() && y == right.zero() {
                ZERO_NAME.to_string()
            } else if x == left.one() && y == right.one() {
                ONE_NAME.to_string()
            } else {
                format!("({},{})", left.name(x), right.name(y))
            }
        })
        .collect();
    debug_assert_eq!(names.len(), n * m);
    let mut builder = EffectAlgebraTable::builder(names).expect("distinct names");
    for (x1, x2, x) in left.sum_entries() {
        for y1 in right.elements() {
            for y2 in right.elements() {
                if let Some(y) = right.sum(y1, y2) {
                    builder
                        .sum(pair(x1, y1), pair(x2, y2), pair(x, y))
                        .expect("consistent");
                }
            }
        }
    }
    finish(builder)
}

/// Every effect algebra with between 2 and `k` elements, one per isomorphism
/// class. Nontrivial elements are named `a, b, c`; within a class the
/// representative is the labelling with the smallest encoded table.
pub fn exhaustive(k: usize) -> Result<Vec<EffectAlgebra>> {
    if !(2..=MAX_EXHAUSTIVE).contains(&k) {
        return Err(invalid(format!("exhaustive({k})")));
    }
    let mut out = Vec::new();
    for size in 2..=k {
        out.extend(exhaustive_exact(size - 2));
    }
    Ok(out)
}

// Candidate tables over 0, m nontrivial elements, 1. Each unordered pair of
// nontrivial elements is undefined or sums to 0, some nontrivial, or 1.
fn exhaustive_exact(m: usize) -> Vec<EffectAlgebra> {
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    // choice 0 = undefined, 1 = "0", 2..2+m = nontrivial, 2+m = "1"
    let choices = m + 3;
    let total = choices.pow(pairs.len() as u32);
    let mut out = Vec::new();
    let mut assignment = vec![0usize; pairs.len()];
    for code in 0..total {
        let mut c = code;
        for slot in assignment.iter_mut() {
            *slot = c % choices;
            c /= choices;
        }
        let Some(table) = candidate(m, &pairs, &assignment) else {
            continue;
        };
        // exactly one labelling per class equals its canonical code
        if is_effect_algebra(&table) && canonical_code(m, &pairs, &assignment) == assignment {
            out.push(EffectAlgebra::new_unchecked(table));
        }
    }
    out
}

fn element_names(m: usize) -> Vec<String> {
    let mut names = vec![ZERO_NAME.to_string()];
    names.extend((0..m).map(|i| ((b'a' + i as u8) as char).to_string()));
    names.push(ONE_NAME.to_string());
    names
}

fn candidate(m: usize, pairs: &[(usize, usize)], assignment: &[usize]) -> Option<EffectAlgebraTable> {
    let mut builder = EffectAlgebraTable::builder(element_names(m)).ok()?;
    let one = Elem::new(m + 1);
    for (&(i, j), &choice) in pairs.iter().zip(assignment) {
        let target = match choice {
            0 => continue,
            1 => Elem::new(0),
            c if c == m + 2 => one,
            c => Elem::new(c - 1),
        };
        builder.sum(Elem::new(i + 1), Elem::new(j + 1), target).ok()?;
    }
    builder.build().ok()
}

// Smallest assignment vector over all relabellings of the nontrivial elements.
fn canonical_code(m: usize, pairs: &[(usize, usize)], assignment: &[usize]) -> Vec<usize> {
    let lookup = |i: usize, j: usize| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        pairs.iter().position(|&p| p == (i, j)).expect("pair exists")
    };
    let mut best: Option<Vec<usize>> = None;
    for perm in permutations(m) {
        // perm maps old label -> new label; inverse gives new -> old
        let mut inverse = vec![0; m];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let relabelled: Vec<usize> = pairs
            .iter()
            .map(|&(i, j)| {
                let choice = assignment[lookup(inverse[i], inverse[j])];
                if (2..m + 2).contains(&choice) {
                    perm[choice - 2] + 2
                } else {
                    choice
                }
            })
            .collect();
        if best.as_ref().is_none_or(|b| relabelled < *b) {
            best = Some(relabelled);
        }
    }
    best.unwrap_or_default()
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(m - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, m - 1);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::verify_axioms;

    #[test]
    fn sizes() {
        assert_eq!(boolean(2).unwrap().len(), 4);
        assert_eq!(boolean(3).unwrap().len(), 8);
        assert_eq!(chain(4).unwrap().len(), 5);
        assert_eq!(grid(2, 3).unwrap().len(), 12);
        assert_eq!(mo(2).unwrap().len(), 6);
        assert_eq!(parity(6).unwrap().len(), 32);
        assert_eq!(product(&chain(2).unwrap(), &boolean(2).unwrap()).len(), 12);
    }

    #[test]
    fn chain_names() {
        let c = chain(4).unwrap();
        assert_eq!(c.names(), ["0", "g", "2g", "3g", "1"]);
        let g = c.elem("g").unwrap();
        assert_eq!(c.sum(g, c.elem("3g").unwrap()), Some(c.one()));
    }

    #[test]
    fn boolean_names_and_order() {
        let b = boolean(3).unwrap();
        assert_eq!(
            b.names(),
            ["0", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "1"]
        );
    }

    #[test]
    fn exhaustive_three_is_two_chains() {
        let all = exhaustive(3).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].names(), ["0", "1"]);
        assert_eq!(all[1].names(), ["0", "a", "1"]);
        let a = all[1].elem("a").unwrap();
        assert_eq!(all[1].sum(a, a), Some(all[1].one()));
    }

    // Brute-force oracle: count isomorphism classes by direct pairwise
    // isomorphism testing over all permutations, independent of the
    // canonical-code shortcut.
    fn classes_by_pairwise_iso(m: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
        let choices = m + 3;
        let mut reps: Vec<EffectAlgebraTable> = Vec::new();
        let mut assignment = vec![0; pairs.len()];
        for code in 0..choices.pow(pairs.len() as u32) {
            let mut c = code;
            for slot in assignment.iter_mut() {
                *slot = c % choices;
                c /= choices;
            }
            let Some(t) = candidate(m, &pairs, &assignment) else {
                continue;
            };
            if !verify_axioms(&t).passed {
                continue;
            }
            let iso = reps.iter().any(|r| {
                permutations(m).into_iter().any(|p| {
                    let map = |e: Elem| {
                        let i = e.index();
                        if i == 0 || i == m + 1 {
                            e
                        } else {
                            Elem::new(p[i - 1] + 1)
                        }
                    };
                    t.elements().all(|x| {
                        t.elements()
                            .all(|y| t.sum(x, y).map(map) == r.sum(map(x), map(y)))
                    })
                })
            });
            if !iso {
                reps.push(t);
            }
        }
        reps.len()
    }

    #[test]
    fn exhaustive_matches_pairwise_isomorphism_oracle() {
        for m in 0..=3 {
            assert_eq!(
                exhaustive_exact(m).len(),
                classes_by_pairwise_iso(m),
                "{} elements",
                m + 2
            );
        }
    }

    #[test]
    fn exhaustive_four_contents() {
        // four elements: Boolean 2^2, the chain Γ(ℤ,3), and two glued 3-chains
        let four = exhaustive_exact(2);
        assert_eq!(four.len(), 3);
    }

    #[test]
    fn corpus_specs() {
        assert!(corpus("empty").unwrap().is_empty());
        let c = corpus("chain(2); product(chain(1),boolean(2))").unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[1].label, "product(chain(1),boolean(2))");
        assert_eq!(c[1].algebra.len(), 8);
        assert!(matches!(corpus("zz(1)"), Err(Error::UnsupportedCorpus(_))));
        assert!(matches!(
            corpus("exhaustive(6)"),
            Err(Error::UnsupportedCorpus(_))
        ));
        assert!(matches!(corpus("parity(5)"), Err(Error::UnsupportedCorpus(_))));
        assert!(corpus("standard").unwrap().len() > 20);
    }

    #[test]
    fn every_generated_algebra_is_verified() {
        for entry in corpus("standard").unwrap() {
            assert!(verify_axioms(entry.algebra.table()).passed, "{}", entry.label);
        }
    }
}
