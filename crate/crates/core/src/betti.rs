//! Graded Betti tables and Koszul-Betti tensors.

use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported table `(i, j) -> b_ij` of nonnegative integers.
///
/// Only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: u32, j: u32, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn add(&mut self, i: u32, j: u32, value: u64) {
        let v = self.get(i, j) + value;
        self.set(i, j, v);
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_i(&self) -> u32 {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_j(&self) -> u32 {
        self.entries.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// `sum_j b_ij`.
    pub fn total(&self, i: u32) -> u64 {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum()
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &BettiTable) -> bool {
        self.entries.iter().all(|(&(i, j), &v)| v <= other.get(i, j))
    }

    /// First entry where `self > other`, if any.
    pub fn first_excess(&self, other: &BettiTable) -> Option<((u32, u32), u64, u64)> {
        self.entries.iter().find(|(&(i, j), &v)| v > other.get(i, j)).map(|(&k, &v)| (k, v, other.get(k.0, k.1)))
    }

    /// Entries with `i >= 1` laid out by rows `j - i` (ascending) and columns
    /// `i = 1..=max_i`.
    pub fn diagram(&self) -> Vec<(i64, Vec<u64>)> {
        let pos: Vec<(i64, u32)> =
            self.entries.keys().filter(|k| k.0 >= 1).map(|&(i, j)| (i64::from(j) - i64::from(i), i)).collect();
        if pos.is_empty() {
            return Vec::new();
        }
        let lo = pos.iter().map(|p| p.0).min().unwrap();
        let hi = pos.iter().map(|p| p.0).max().unwrap();
        let width = pos.iter().map(|p| p.1).max().unwrap();
        (lo..=hi)
            .map(|k| {
                let row = (1..=width)
                    .map(|i| {
                        let j = k + i64::from(i);
                        if j < 0 {
                            0
                        } else {
                            self.get(i, j as u32)
                        }
                    })
                    .collect();
                (k, row)
            })
            .collect()
    }

    /// Diagram rendered one line per row, `row j-i=K: a b c`.
    pub fn diagram_string(&self) -> String {
        let mut out = String::new();
        for (k, row) in self.diagram() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            out.push_str(&format!("row j-i={k}: {}\n", cells.join(" ")));
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.diagram_string())
    }
}

/// `(i, j, p) -> beta_ijp`, nonzero entries only, for `p <= p_max` and
/// `j <= j_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulBettiTensor {
    n: usize,
    p_max: u32,
    j_bound: u32,
    entries: BTreeMap<(u32, u32, u32), u64>,
}

impl KoszulBettiTensor {
    pub fn new(n: usize, p_max: u32, j_bound: u32) -> Self {
        KoszulBettiTensor { n, p_max, j_bound, entries: BTreeMap::new() }
    }

    /// Assemble from one `(i, j)` table per `p = 0..=p_max`.
    pub fn from_slices(n: usize, j_bound: u32, slices: &[BettiTable]) -> Self {
        let mut t = KoszulBettiTensor::new(n, slices.len().saturating_sub(1) as u32, j_bound);
        for (p, s) in slices.iter().enumerate() {
            for ((i, j), v) in s.entries() {
                if j <= j_bound {
                    t.set(i, j, p as u32, v);
                }
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p_max(&self) -> u32 {
        self.p_max
    }

    pub fn j_bound(&self) -> u32 {
        self.j_bound
    }

    pub fn get(&self, i: u32, j: u32, p: u32) -> u64 {
        self.entries.get(&(i, j, p)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: u32, j: u32, p: u32, value: u64) {
        if value == 0 {
            self.entries.remove(&(i, j, p));
        } else {
            self.entries.insert((i, j, p), value);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32, u32), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn slice(&self, p: u32) -> BettiTable {
        let mut t = BettiTable::new();
        for (&(i, j, q), &v) in &self.entries {
            if q == p {
                t.set(i, j, v);
            }
        }
        t
    }

    /// Entrywise `self <= other` over the common range.
    pub fn le(&self, other: &KoszulBettiTensor) -> bool {
        self.first_excess(other).is_none()
    }

    pub fn first_excess(&self, other: &KoszulBettiTensor) -> Option<((u32, u32, u32), u64, u64)> {
        let jb = self.j_bound.min(other.j_bound);
        let pm = self.p_max.min(other.p_max);
        self.entries
            .iter()
            .filter(|(k, _)| k.1 <= jb && k.2 <= pm)
            .find(|(k, &v)| v > other.get(k.0, k.1, k.2))
            .map(|(&k, &v)| (k, v, other.get(k.0, k.1, k.2)))
    }

    /// Equality over the common range.
    pub fn agrees_with(&self, other: &KoszulBettiTensor) -> bool {
        self.le(other) && other.le(self)
    }

    /// Restrict to `j <= j_bound`.
    pub fn truncate(&self, j_bound: u32) -> KoszulBettiTensor {
        let mut t = KoszulBettiTensor::new(self.n, self.p_max, j_bound.min(self.j_bound));
        for (&(i, j, p), &v) in &self.entries {
            if j <= t.j_bound {
                t.set(i, j, p, v);
            }
        }
        t
    }
}

impl fmt::Display for KoszulBettiTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..=self.p_max {
            writeln!(f, "p={p}")?;
            for ((i, j), v) in self.slice(p).entries() {
                writeln!(f, "  {i} {j} {v}")?;
            }
        }
        Ok(())
    }
}
