use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, ParseError, Result};

/// Handle to an element of a table. Indices follow declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub fn new(index: usize) -> Self {
        Elem(u32::try_from(index).expect("element index fits u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub const ZERO_NAME: &str = "0";
pub const ONE_NAME: &str = "1";

/// A finite partial algebra `(E; +, 0, 1)` stored as a symmetric partial
/// Cayley table. Not necessarily an effect algebra; see
/// [`verify_axioms`](super::verify_axioms).
#[derive(Clone, PartialEq, Eq)]
pub struct EffectAlgebraTable {
    names: Vec<String>,
    index: HashMap<String, Elem>,
    zero: Elem,
    one: Elem,
    // n * n, row-major
    sum: Vec<Option<Elem>>,
}

impl fmt::Debug for EffectAlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EffectAlgebraTable")
            .field("elements", &self.names)
            .field("sums", &self.sum_entries().count())
            .finish()
    }
}

impl EffectAlgebraTable {
    /// Starts a table over `names`, which must contain the reserved `0` and
    /// `1` exactly once each.
    pub fn builder<I, T>(names: I) -> Result<TableBuilder, ParseError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        TableBuilder::new(names.into_iter().map(Into::into).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone + '_ {
        (0..self.names.len()).map(Elem::new)
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// `a + b`, if defined.
    #[inline]
    pub fn sum(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.sum[a.index() * self.names.len() + b.index()]
    }

    /// Every defined sum `a + b = c` with `a <= b` (by index), including the
    /// auto-completed `a + 0` entries.
    pub fn sum_entries(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        let n = self.names.len();
        (0..n).flat_map(move |i| {
            (i..n).filter_map(move |j| self.sum[i * n + j].map(|c| (Elem::new(i), Elem::new(j), c)))
        })
    }

    /// `y + y + ... + y` (`times` copies), evaluated left to right.
    pub fn multiple(&self, y: Elem, times: usize) -> Option<Elem> {
        if times == 0 {
            return Some(self.zero);
        }
        let mut acc = y;
        for _ in 1..times {
            acc = self.sum(acc, y)?;
        }
        Some(acc)
    }

    /// Renders the table in the line-oriented file format. Parsing the output
    /// yields an equal table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let declared: Vec<&str> = self
            .elements()
            .filter(|&e| e != self.zero && e != self.one)
            .map(|e| self.name(e))
            .collect();
        out.push_str("elements:");
        for name in &declared {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        out.push_str("zero: 0\none: 1\n");
        for (a, b, c) in self.sum_entries() {
            if a == self.zero || b == self.zero {
                continue;
            }
            out.push_str(&format!(
                "sum: {} {} {}\n",
                self.name(a),
                self.name(b),
                self.name(c)
            ));
        }
        out
    }

    /// Reads the line-oriented format:
    ///
    /// ```text
    /// # comment
    /// elements: a b c
    /// zero: 0
    /// one: 1
    /// sum: a b c
    /// ```
    ///
    /// Element order is `0`, the declared elements, then `1`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut declared: Option<(usize, Vec<String>)> = None;
        let mut zero_seen = false;
        let mut one_seen = false;
        let mut sums: Vec<(usize, [String; 3])> = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| ParseError::new(lineno, format!("expected `key: ...`, got `{line}`")))?;
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            match key.trim() {
                "elements" => {
                    if declared.is_some() {
                        return Err(ParseError::new(lineno, "duplicate `elements:` line"));
                    }
                    for t in &tokens {
                        if *t == ZERO_NAME || *t == ONE_NAME {
                            return Err(ParseError::new(
                                lineno,
                                format!("`{t}` is reserved and must not be listed in `elements:`"),
                            ));
                        }
                    }
                    declared = Some((lineno, tokens.iter().map(|t| t.to_string()).collect()));
                }
                "zero" => {
                    if tokens != [ZERO_NAME] {
                        return Err(ParseError::new(lineno, "expected `zero: 0`"));
                    }
                    zero_seen = true;
                }
                "one" => {
                    if tokens != [ONE_NAME] {
                        return Err(ParseError::new(lineno, "expected `one: 1`"));
                    }
                    one_seen = true;
                }
                "sum" => {
                    let [a, b, c] = tokens.as_slice() else {
                        return Err(ParseError::new(lineno, "expected `sum: A B C`"));
                    };
                    sums.push((lineno, [a.to_string(), b.to_string(), c.to_string()]));
                }
                other => {
                    return Err(ParseError::new(lineno, format!("unknown directive `{other}`")));
                }
            }
        }

        let (decl_line, declared) =
            declared.ok_or_else(|| ParseError::new(0, "missing `elements:` declaration"))?;
        if !zero_seen {
            return Err(ParseError::new(0, "missing `zero: 0` declaration"));
        }
        if !one_seen {
            return Err(ParseError::new(0, "missing `one: 1` declaration"));
        }

        let mut names = Vec::with_capacity(declared.len() + 2);
        names.push(ZERO_NAME.to_string());
        names.extend(declared);
        names.push(ONE_NAME.to_string());
        let mut builder = TableBuilder::new(names).map_err(|e| ParseError::new(decl_line, e.reason))?;
        for (lineno, [a, b, c]) in sums {
            builder
                .sum_by_name(&a, &b, &c)
                .map_err(|e| ParseError::new(lineno, e.reason))?;
        }
        builder.build()
    }
}

/// Incremental construction of an [`EffectAlgebraTable`].
#[derive(Debug, Clone)]
pub struct TableBuilder {
    names: Vec<String>,
    index: HashMap<String, Elem>,
    sum: Vec<Option<Elem>>,
    // slot was written in the orientation it was stated
    stated: Vec<bool>,
}

impl TableBuilder {
    fn new(names: Vec<String>) -> Result<Self, ParseError> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(ParseError::new(0, format!("invalid element name `{name}`")));
            }
            if index.insert(name.clone(), Elem::new(i)).is_some() {
                return Err(ParseError::new(0, format!("duplicate element `{name}`")));
            }
        }
        for reserved in [ZERO_NAME, ONE_NAME] {
            if !index.contains_key(reserved) {
                return Err(ParseError::new(
                    0,
                    format!("missing reserved element `{reserved}`"),
                ));
            }
        }
        let n = names.len();
        let zero = index[ZERO_NAME].index();
        let mut sum = vec![None; n * n];
        let mut stated = vec![false; n * n];
        // a + 0 = a is a theorem; seed it so explicit entries are checked against it
        for i in 0..n {
            for at in [i * n + zero, zero * n + i] {
                sum[at] = Some(Elem::new(i));
                stated[at] = true;
            }
        }
        Ok(Self {
            names,
            index,
            sum,
            stated,
        })
    }

    pub fn elem(&self, name: &str) -> Result<Elem, ParseError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ParseError::new(0, format!("unknown element `{name}`")))
    }

    pub fn sum_by_name(&mut self, a: &str, b: &str, c: &str) -> Result<&mut Self, ParseError> {
        let (a, b, c) = (self.elem(a)?, self.elem(b)?, self.elem(c)?);
        self.sum(a, b, c)
    }

    /// Records `a + b = c` together with `b + a = c`.
    pub fn sum(&mut self, a: Elem, b: Elem, c: Elem) -> Result<&mut Self, ParseError> {
        let n = self.names.len();
        for (x, y) in [(a, b), (b, a)] {
            let at = x.index() * n + y.index();
            match self.sum[at] {
                Some(prev) if prev != c => {
                    let reason = if self.stated[at] {
                        "conflicting sum entries"
                    } else {
                        "conflicting commutative entries"
                    };
                    return Err(ParseError::new(
                        0,
                        format!(
                            "{reason}: {} + {} = {} and = {}",
                            self.names[a.index()],
                            self.names[b.index()],
                            self.names[prev.index()],
                            self.names[c.index()]
                        ),
                    ));
                }
                _ => self.sum[at] = Some(c),
            }
        }
        self.stated[a.index() * n + b.index()] = true;
        Ok(self)
    }

    /// Freezes the table. `a + 0 = a` is present for every `a`.
    pub fn build(self) -> Result<EffectAlgebraTable, ParseError> {
        let zero = self.index[ZERO_NAME];
        let one = self.index[ONE_NAME];
        Ok(EffectAlgebraTable {
            names: self.names,
            index: self.index,
            zero,
            one,
            sum: self.sum,
        })
    }
}
