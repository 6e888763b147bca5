//! Text interchange: graph-description export, OEIS b-files, CSV tables.
//!
//! Everything here is a pure text transform with deterministic output, so
//! equal inputs always serialise to identical bytes.

use std::fmt;
use std::fmt::Write as _;

use crate::graph::PartiteGraph;

/// Renders a graph as Graphviz-compatible text: one `cluster` block per part
/// (parts in index order, vertices in ascending id order, empty parts
/// included), then every edge as `a -- b` with `a < b`, in sorted order.
///
/// ```text
/// graph {
///   subgraph cluster_0 {
///     label = "part 0";
///     1;
///   }
///   ..
///   1 -- 2;
/// }
/// ```
pub fn export_graph(g: &PartiteGraph) -> String {
    let mut out = String::new();
    out.push_str("graph {\n");
    for (part, members) in g.parts() {
        writeln!(out, "  subgraph cluster_{part} {{").unwrap();
        writeln!(out, "    label = \"part {part}\";").unwrap();
        for v in members {
            writeln!(out, "    {v};").unwrap();
        }
        out.push_str("  }\n");
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// One line of an OEIS b-file: the position in the sequence and its value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BFileEntry {
    pub index: i64,
    pub value: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BFileError {
    /// A non-comment line did not parse as two integers.
    Malformed { line: usize, reason: String },
    /// An index did not follow its predecessor by exactly 1.
    IndexGap { line: usize, expected: i64, found: i64 },
}

impl fmt::Display for BFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BFileError::Malformed { line, reason } => {
                write!(f, "line {line}: {reason}")
            }
            BFileError::IndexGap { line, expected, found } => {
                write!(f, "line {line}: expected index {expected}, found {found}")
            }
        }
    }
}

impl std::error::Error for BFileError {}

/// Writes `values` as b-file lines `index value`, indexing from `offset`.
/// Panics on an empty slice; an empty b-file has no defined offset.
pub fn write_bfile(values: &[i64], offset: i64) -> String {
    assert!(!values.is_empty(), "cannot write an empty b-file");
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{} {v}", offset + i as i64).unwrap();
    }
    out
}

/// Parses b-file text. Lines starting with `#` and blank lines are ignored,
/// surrounding whitespace is tolerated. Indices must increase by exactly 1.
pub fn read_bfile(text: &str) -> Result<Vec<BFileEntry>, BFileError> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(first), Some(second), None) = (tokens.next(), tokens.next(), tokens.next())
        else {
            return Err(BFileError::Malformed {
                line,
                reason: format!("expected two fields, got {trimmed:?}"),
            });
        };
        let index: i64 = first.parse().map_err(|e| BFileError::Malformed {
            line,
            reason: format!("bad index {first:?}: {e}"),
        })?;
        let value: i64 = second.parse().map_err(|e| BFileError::Malformed {
            line,
            reason: format!("bad value {second:?}: {e}"),
        })?;
        if let Some(last) = entries.last() {
            if index != last.index + 1 {
                return Err(BFileError::IndexGap { line, expected: last.index + 1, found: index });
            }
        }
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}

/// Result of comparing two sequences position by position over their
/// overlapping prefixes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceMatch {
    /// The overlap agrees; `overlap` is its length (0 if either is empty).
    Agree { overlap: usize },
    /// First differing position (0-based within the overlap).
    Mismatch { index: usize },
}

pub fn compare_sequences(a: &[i64], b: &[i64]) -> SequenceMatch {
    let overlap = a.len().min(b.len());
    match (0..overlap).find(|&i| a[i] != b[i]) {
        Some(index) => SequenceMatch::Mismatch { index },
        None => SequenceMatch::Agree { overlap },
    }
}

/// Renders `(n, sr, diff)` rows under the `n,sr,diff` header.
pub fn sequence_table_csv<I>(rows: I) -> String
where
    I: IntoIterator<Item = (u64, u64, u64)>,
{
    let mut out = String::from("n,sr,diff\n");
    for (n, sr, diff) in rows {
        writeln!(out, "{n},{sr},{diff}").unwrap();
    }
    out
}
