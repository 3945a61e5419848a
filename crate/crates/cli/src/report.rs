use std::fmt::Display;

/// Line-oriented output. Every `PROP` line ends in `PASS` or `FAIL`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<String>,
    failed: bool,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn prop(&mut self, key: &str, holds: bool, witness: Option<String>) -> bool {
        let verdict = if holds { "PASS" } else { "FAIL" };
        let line = match witness.filter(|_| !holds) {
            Some(w) => format!("PROP {key} {verdict} witness={w}"),
            None => format!("PROP {key} {verdict}"),
        };
        self.failed |= !holds;
        self.lines.push(line);
        holds
    }

    pub fn value(&mut self, key: &str, payload: impl Display) {
        self.lines.push(format!("VALUE {key} {payload}"));
    }

    pub fn witness(&mut self, key: &str, payload: impl Display) {
        self.lines.push(format!("WITNESS {key} {payload}"));
    }

    pub fn info(&mut self, key: &str, payload: impl Display) {
        self.lines.push(format!("INFO {key} {payload}"));
    }

    /// A line in a documented fixed format such as `vertex 0: …`.
    pub fn plain(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn lines(&self) -> &[String] {
        &self.lines
    }

    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }
}
