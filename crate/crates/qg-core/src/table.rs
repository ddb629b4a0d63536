//! Cayley tables of finite binary operations on `{0, 1, …, n−1}`.
//!
//! A [`CayleyTable`] of order `n` stores the full n×n multiplication table of
//! a groupoid whose elements are the residues `0..n`. The structural probes
//! used throughout the crate live here:
//!
//! * Latin-square / cancellativity checks ([`CayleyTable::is_quasigroup`],
//!   [`CayleyTable::is_left_cancellative`], …),
//! * the exhaustive scan for shift constants `k` with
//!   `x·y = (x+1)·(y+k)` (indices mod n) — *k-translatability*,
//! * the dual (transposed) groupoid and the cyclic relabelling
//!   `i ↦ i−1 (mod n)` that rotates a translatable first row,
//! * construction from a first row extended `k`-translatably,
//! * lossless JSON and CSV round-trips.
//!
//! Everything here works on raw tables and never assumes a closed form; the
//! linear-form layer is built on top in [`crate::linear`].

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors raised when constructing or parsing a table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    /// The row list was empty; tables have order at least 1.
    #[error("empty table: at least one row is required")]
    Empty,
    /// A row length disagrees with the number of rows.
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    Shape {
        row: usize,
        len: usize,
        expected: usize,
    },
    /// An entry is not an element of `{0, …, n−1}`.
    #[error("entry {value} at row {row}, column {col} is out of range for order {n}")]
    Range {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    /// Text that could not be parsed as a table at all.
    #[error("malformed table text: {0}")]
    Parse(String),
}

/// The multiplication table of a groupoid on `{0, …, n−1}`, row-major.
///
/// `entries[x·n + y]` is the product `x · y`. Tables compare, hash and order
/// by exact contents, so collections of tables can be deduplicated and
/// reported deterministically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
}

/// All shift constants under which a table is translatable.
///
/// `ks` is the sorted list of every `k ∈ {1, …, n−1}` with
/// `x·y = (x+1)·(y+k)` for all `x, y` (indices mod n). The degenerate order-1
/// table has an empty report: there is no shift in range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslatabilityReport {
    pub ks: Vec<usize>,
}

impl TranslatabilityReport {
    /// The unique shift constant, when the report holds exactly one.
    pub fn unique(&self) -> Option<usize> {
        match self.ks.as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }
}

impl CayleyTable {
    /// Builds a table from explicit rows, validating shape and entry range.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let n = rows.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(TableError::Shape {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &value) in row.iter().enumerate() {
                if value >= n {
                    return Err(TableError::Range {
                        row: i,
                        col: j,
                        value,
                        n,
                    });
                }
                entries.push(value);
            }
        }
        Ok(CayleyTable { n, entries })
    }

    /// Builds a table from a row-major entry slice of length `n·n`.
    pub fn from_flat(n: usize, entries: Vec<usize>) -> Result<Self, TableError> {
        if n == 0 {
            return Err(TableError::Empty);
        }
        if entries.len() != n * n {
            return Err(TableError::Shape {
                row: entries.len() / n,
                len: entries.len() % n,
                expected: n,
            });
        }
        for (pos, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(TableError::Range {
                    row: pos / n,
                    col: pos % n,
                    value,
                    n,
                });
            }
        }
        Ok(CayleyTable { n, entries })
    }

    /// Extends a first row to the unique table that repeats it with shift `k`:
    /// row `i` is the first row read from position `−k·i (mod n)` onwards, so
    /// the result satisfies `x·y = (x+1)·(y+k)` by construction.
    ///
    /// Requires `1 ≤ k < n`. The first row itself is `row 0` verbatim.
    pub fn from_first_row(first_row: &[usize], k: usize) -> Result<Self, TableError> {
        let n = first_row.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        assert!(
            (1..n).contains(&k),
            "shift constant k={k} out of range 1..{n}"
        );
        for (j, &value) in first_row.iter().enumerate() {
            if value >= n {
                return Err(TableError::Range {
                    row: 0,
                    col: j,
                    value,
                    n,
                });
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            // Position of column j in the first row: j − k·i (mod n).
            let off = (k * i) % n;
            for j in 0..n {
                entries.push(first_row[(j + n - off) % n]);
            }
        }
        Ok(CayleyTable { n, entries })
    }

    /// The order of the groupoid.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The product `x · y`.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.n + y]
    }

    /// Row-major entries, length `n·n`.
    #[inline]
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The table as a vector of rows (the JSON representation).
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// Whether every row is a permutation of the elements, i.e. the operation
    /// is left cancellative (`x·y = x·z` implies `y = z`).
    pub fn is_left_cancellative(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        for row in self.entries.chunks(n) {
            seen.fill(false);
            for &v in row {
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    /// Whether every column is a permutation of the elements, i.e. the
    /// operation is right cancellative (`y·x = z·x` implies `y = z`).
    pub fn is_right_cancellative(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        for col in 0..n {
            seen.fill(false);
            for row in 0..n {
                let v = self.entries[row * n + col];
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    /// Whether the table is a Latin square: every element occurs exactly once
    /// in every row and every column, so all equations `a·x = b` and
    /// `y·a = b` are uniquely solvable and the groupoid is a quasigroup.
    pub fn is_quasigroup(&self) -> bool {
        let n = self.n;
        let mut count = vec![0usize; n];
        // Solvability of a·x = b: every row holds each element exactly once.
        for row in self.entries.chunks(n) {
            count.fill(0);
            for &v in row {
                count[v] += 1;
            }
            if count.iter().any(|&c| c != 1) {
                return false;
            }
        }
        // Solvability of y·a = b: every column holds each element exactly once.
        for col in 0..n {
            count.fill(0);
            for row in 0..n {
                count[self.entries[row * n + col]] += 1;
            }
            if count.iter().any(|&c| c != 1) {
                return false;
            }
        }
        true
    }

    /// Whether `x·y = (x+1)·(y+k)` holds for all `x, y` (indices mod n).
    ///
    /// Only shifts in `{1, …, n−1}` qualify; anything else is `false`.
    pub fn is_k_translatable(&self, k: usize) -> bool {
        let n = self.n;
        if !(1..n).contains(&k) {
            return false;
        }
        for x in 0..n {
            let x1 = (x + 1) % n;
            for y in 0..n {
                if self.entries[x * n + y] != self.entries[x1 * n + (y + k) % n] {
                    return false;
                }
            }
        }
        true
    }

    /// Scans every candidate shift and reports all that work, sorted.
    pub fn translatability(&self) -> TranslatabilityReport {
        TranslatabilityReport {
            ks: (1..self.n).filter(|&k| self.is_k_translatable(k)).collect(),
        }
    }

    /// The dual groupoid `x ∗ y = y · x` (the transposed table).
    pub fn dual(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[x * n + y] = self.entries[y * n + x];
            }
        }
        CayleyTable { n, entries }
    }

    /// Relabels the elements by the cyclic shift `i ↦ i−1 (mod n)`,
    /// i.e. re-lists them in the order `n−1, 0, 1, …, n−2`.
    ///
    /// This is the one ordering move that keeps every shift constant intact:
    /// the relabelled table is k-translatable exactly when the original is,
    /// and n successive applications give back the original table.
    pub fn cyclic_reorder(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                let v = self.entries[((x + n - 1) % n) * n + (y + n - 1) % n];
                entries[x * n + y] = (v + 1) % n;
            }
        }
        CayleyTable { n, entries }
    }

    /// Serializes as the canonical JSON object `{"n": …, "rows": [[…], …]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serialization cannot fail")
    }

    /// Parses the canonical JSON object, validating `n` against the rows.
    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let repr: TableRepr =
            serde_json::from_str(text).map_err(|e| TableError::Parse(e.to_string()))?;
        repr.try_into()
    }

    /// Serializes as CSV: one row per line, entries comma-separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.entries.chunks(self.n) {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses the CSV form produced by [`CayleyTable::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self, TableError> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|cell| {
                    cell.trim()
                        .parse::<usize>()
                        .map_err(|e| TableError::Parse(format!("bad entry {cell:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Self::from_rows(&rows)
    }
}

impl fmt::Display for CayleyTable {
    /// A plain grid of 0-based entries, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = (self.n - 1).max(1).to_string().len();
        for row in self.entries.chunks(self.n) {
            let mut first = true;
            for &v in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
                first = false;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Serde mirror of the canonical JSON shape.
#[derive(Serialize, Deserialize)]
struct TableRepr {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableRepr> for CayleyTable {
    type Error = TableError;

    fn try_from(repr: TableRepr) -> Result<Self, TableError> {
        if repr.rows.len() != repr.n {
            return Err(TableError::Parse(format!(
                "declared order {} disagrees with {} rows",
                repr.n,
                repr.rows.len()
            )));
        }
        CayleyTable::from_rows(&repr.rows)
    }
}

impl Serialize for CayleyTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableRepr {
            n: self.n,
            rows: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CayleyTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TableRepr::deserialize(deserializer)?;
        repr.try_into().map_err(D::Error::custom)
    }
}
