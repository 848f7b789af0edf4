//! The `TOURN 1` text format and the one-set-per-line stream format.
//!
//! A tournament file holds the order `n` on its first line, followed by `n`
//! rows of `n` characters: `'1'` at row `u`, column `v` iff `u` beats `v`.

use std::fmt::Write as _;
use std::io::{self, Write};

use thiserror::Error;

use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected the vertex count, found {found:?}")]
    BadCount { line: usize, found: String },
    #[error("line {line}, column {column}: expected '0' or '1', found {found:?}")]
    BadChar { line: usize, column: usize, found: char },
    #[error("line {line}: row has {len} entries, expected {n}")]
    RowLength { line: usize, len: usize, n: usize },
    #[error("expected {n} matrix rows, found {found}")]
    MissingRows { n: usize, found: usize },
    #[error("line {line}: unexpected trailing content")]
    Trailing { line: usize },
    #[error("not a tournament: vertex {0} beats itself")]
    Loop(usize),
    #[error("not a tournament: pair ({u},{v}) has {arcs} arcs, expected exactly one")]
    BadPair { u: usize, v: usize, arcs: usize },
}

pub fn parse_tourn(text: &str) -> Result<Tournament, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    let (line, first) = lines.next().unwrap_or((1, ""));
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| ParseError::BadCount { line, found: first.to_string() })?;
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines.by_ref() {
        if rows.len() == n {
            if !text.trim().is_empty() {
                return Err(ParseError::Trailing { line });
            }
            continue;
        }
        let mut row = Vec::with_capacity(n);
        for (col, c) in text.chars().enumerate() {
            match c {
                '0' => row.push(false),
                '1' => row.push(true),
                found => return Err(ParseError::BadChar { line, column: col + 1, found }),
            }
        }
        if row.len() != n {
            return Err(ParseError::RowLength { line, len: row.len(), n });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::MissingRows { n, found: rows.len() });
    }
    for (u, row) in rows.iter().enumerate() {
        if row[u] {
            return Err(ParseError::Loop(u + 1));
        }
        for v in u + 1..n {
            let arcs = row[v] as usize + rows[v][u] as usize;
            if arcs != 1 {
                return Err(ParseError::BadPair { u: u + 1, v: v + 1, arcs });
            }
        }
    }
    Ok(Tournament::from_matrix(&rows).expect("matrix validated above"))
}

pub fn to_tourn(t: &Tournament) -> String {
    let n = t.n();
    let mut s = String::with_capacity((n + 1) * (n + 1) + 8);
    writeln!(s, "{n}").unwrap();
    for u in 0..n {
        for v in 0..n {
            s.push(if t.beats(u, v) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

/// Writes one set as a line of comma-separated 1-based labels.
pub fn write_set<W: Write + ?Sized>(out: &mut W, set: &VertexSet) -> io::Result<()> {
    writeln!(out, "{set}")
}

/// Parses a stream line back into a set.
pub fn parse_set_line(n: usize, line: &str) -> Option<VertexSet> {
    let line = line.trim();
    if line.is_empty() {
        return Some(VertexSet::empty(n));
    }
    let labels: Option<Vec<usize>> = line.split(',').map(|p| p.trim().parse().ok()).collect();
    VertexSet::from_labels(n, labels?)
}
