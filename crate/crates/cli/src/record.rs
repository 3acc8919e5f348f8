//! Line-oriented result records: `key: value` lines, with multi-line values
//! written as an indented block under `key:`.

use std::fmt::{self, Display};

use gins_core::{BettiTable, KoszulBettiTensor};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    entries: Vec<(String, String)>,
    failed: bool,
}

impl Record {
    pub fn new(command: &str) -> Self {
        let mut r = Record::default();
        r.field("command", command);
        r
    }

    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    /// A pass/fail line; any failure marks the record as failed.
    pub fn check(&mut self, name: &str, pass: bool, detail: impl Display) -> &mut Self {
        self.failed |= !pass;
        let verdict = if pass { "pass" } else { "FAIL" };
        let detail = detail.to_string();
        if detail.is_empty() {
            self.field("check", format!("{name}: {verdict}"))
        } else {
            self.field("check", format!("{name}: {verdict} ({detail})"))
        }
    }

    pub fn fail(&mut self) {
        self.failed = true;
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn checks(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().filter(|(k, _)| k == "check").map(|(_, v)| v.as_str())
    }

    pub fn append(&mut self, other: &Record) {
        self.entries.extend(other.entries.iter().filter(|(k, _)| k != "command").cloned());
        self.failed |= other.failed;
    }
}

impl Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            if v.contains('\n') {
                writeln!(f, "{k}:")?;
                for line in v.trim_end_matches('\n').lines() {
                    writeln!(f, "  {line}")?;
                }
            } else {
                writeln!(f, "{k}: {v}")?;
            }
        }
        Ok(())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// `i j beta` triples, one per line.
pub fn betti_triples(t: &BettiTable) -> String {
    t.entries().map(|((i, j), b)| format!("{i} {j} {b}\n")).collect()
}

/// `p i j beta` quadruples, one per line.
pub fn tensor_lines(t: &KoszulBettiTensor) -> String {
    let mut lines: Vec<(u32, u32, u32, u64)> = t.entries().map(|((i, j, p), b)| (p, i, j, b)).collect();
    lines.sort();
    lines.iter().map(|(p, i, j, b)| format!("{p} {i} {j} {b}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_are_indented() {
        let mut r = Record::new("demo");
        r.field("seed", 7).field("table", "a\nb\n");
        assert_eq!(r.to_string(), "command: demo\nseed: 7\ntable:\n  a\n  b\n");
        assert!(!r.failed());
        r.check("x", false, "");
        assert!(r.failed());
        assert_eq!(r.checks().collect::<Vec<_>>(), ["x: FAIL"]);
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
