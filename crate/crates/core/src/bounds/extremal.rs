//! Exhaustive scans over all labelled tournaments of a given order.

use std::collections::BTreeSet;
use std::ops::Range;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::count_direct;
use crate::error::{Error, Result};
use crate::generators::from_arc_pattern;
use crate::tournament::Tournament;

/// Largest order scanned without an explicit long-run override.
pub const DEFAULT_MAX_SCAN_N: usize = 7;
/// Hard cap; `n = 8` already means 2^28 tournaments.
pub const LONG_RUN_MAX_SCAN_N: usize = 8;

/// Number of labelled tournaments on `n` vertices, `2^C(n,2)`.
pub fn labelled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Sub-range of arc patterns to scan; the whole space when `None`.
    pub range: Option<Range<u64>>,
    /// Patterns per checkpoint.
    pub chunk: u64,
    /// Worker threads; rayon's default pool when `None`.
    pub workers: Option<usize>,
    pub allow_long_run: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { range: None, chunk: 1 << 16, workers: None, allow_long_run: false }
    }
}

/// Progress record emitted after every chunk.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Checkpoint {
    pub n: usize,
    /// Patterns `range.start..completed` are done.
    pub completed: u64,
    pub end: u64,
    pub current_max: u64,
    pub current_min_strong: Option<u64>,
}

/// Aggregate statistics of a scan. Merging is order-independent.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ScanSummary {
    pub n: usize,
    pub scanned: u64,
    pub max_count: u64,
    /// Smallest arc pattern attaining `max_count`.
    pub max_witness: u64,
    pub max_witnesses: u64,
    /// Distinct score sequences among the maximisers.
    pub max_witness_scores: BTreeSet<Vec<usize>>,
    pub all_max_witnesses_strong: bool,
    pub strong_scanned: u64,
    pub min_strong_count: Option<u64>,
    pub min_strong_witness: Option<u64>,
}

impl ScanSummary {
    fn empty(n: usize) -> Self {
        ScanSummary {
            n,
            scanned: 0,
            max_count: 0,
            max_witness: u64::MAX,
            max_witnesses: 0,
            max_witness_scores: BTreeSet::new(),
            all_max_witnesses_strong: true,
            strong_scanned: 0,
            min_strong_count: None,
            min_strong_witness: None,
        }
    }

    /// Folds one labelled tournament into the summary.
    fn absorb(mut self, pattern: u64) -> Self {
        let t = from_arc_pattern(self.n, pattern);
        let f = count_direct(&t);
        let strong = t.is_strong();
        self.scanned += 1;
        if f > self.max_count {
            self.max_count = f;
            self.max_witness = pattern;
            self.max_witnesses = 0;
            self.max_witness_scores.clear();
            self.all_max_witnesses_strong = true;
        }
        if f == self.max_count {
            self.max_witness = self.max_witness.min(pattern);
            self.max_witnesses += 1;
            self.max_witness_scores.insert(t.score_sequence().as_slice().to_vec());
            self.all_max_witnesses_strong &= strong;
        }
        if strong {
            self.strong_scanned += 1;
            if self.min_strong_count.is_none_or(|m| f < m) {
                self.min_strong_count = Some(f);
                self.min_strong_witness = Some(pattern);
            }
        }
        self
    }

    pub fn merge(mut self, other: ScanSummary) -> ScanSummary {
        self.scanned += other.scanned;
        self.strong_scanned += other.strong_scanned;
        match self.max_count.cmp(&other.max_count) {
            std::cmp::Ordering::Less => {
                self.max_count = other.max_count;
                self.max_witness = other.max_witness;
                self.max_witnesses = other.max_witnesses;
                self.max_witness_scores = other.max_witness_scores;
                self.all_max_witnesses_strong = other.all_max_witnesses_strong;
            }
            std::cmp::Ordering::Equal => {
                self.max_witness = self.max_witness.min(other.max_witness);
                self.max_witnesses += other.max_witnesses;
                self.max_witness_scores.extend(other.max_witness_scores);
                self.all_max_witnesses_strong &= other.all_max_witnesses_strong;
            }
            std::cmp::Ordering::Greater => {}
        }
        match (self.min_strong_count, other.min_strong_count) {
            (None, _) => {
                self.min_strong_count = other.min_strong_count;
                self.min_strong_witness = other.min_strong_witness;
            }
            (Some(a), Some(b)) if b < a || (b == a && other.min_strong_witness < self.min_strong_witness) => {
                self.min_strong_count = other.min_strong_count;
                self.min_strong_witness = other.min_strong_witness;
            }
            _ => {}
        }
        self
    }
}

/// Scans every labelled tournament on `n` vertices (or a sub-range of arc
/// patterns), counting minimal FVSs of each with the tree enumerator.
pub fn scan_labelled(
    n: usize,
    opts: &ScanOptions,
    mut on_checkpoint: impl FnMut(&Checkpoint),
) -> Result<ScanSummary> {
    if n == 0 {
        return Err(Error::Parameter("scan needs n >= 1".into()));
    }
    let cap = if opts.allow_long_run { LONG_RUN_MAX_SCAN_N } else { DEFAULT_MAX_SCAN_N };
    if n > cap {
        return Err(Error::TooLarge { what: "exhaustive tournament scan", n, max: cap });
    }
    let total = labelled_count(n);
    let range = opts.range.clone().unwrap_or(0..total);
    if range.end > total || range.start > range.end {
        return Err(Error::Parameter(format!("pattern range {range:?} outside 0..{total}")));
    }
    let pool = match opts.workers {
        Some(w) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map_err(|e| Error::Parameter(e.to_string()))?,
        ),
        None => None,
    };
    let chunk = opts.chunk.max(1);
    let mut summary = ScanSummary::empty(n);
    let mut start = range.start;
    while start < range.end {
        let end = (start + chunk).min(range.end);
        let work = || {
            (start..end)
                .into_par_iter()
                .fold(|| ScanSummary::empty(n), ScanSummary::absorb)
                .reduce(|| ScanSummary::empty(n), ScanSummary::merge)
        };
        let part = match &pool {
            Some(pool) => pool.install(work),
            None => work(),
        };
        summary = summary.merge(part);
        on_checkpoint(&Checkpoint {
            n,
            completed: end,
            end: range.end,
            current_max: summary.max_count,
            current_min_strong: summary.min_strong_count,
        });
        start = end;
    }
    Ok(summary)
}

/// `M(n)` with a witness, by exhaustive scan.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub max_count: u64,
    pub witness_pattern: u64,
    pub witness_scores: Vec<usize>,
    pub scanned: u64,
    pub summary: ScanSummary,
}

impl ExtremalReport {
    pub fn witness(&self) -> Tournament {
        from_arc_pattern(self.n, self.witness_pattern)
    }
}

pub fn exact_max_count(n: usize) -> Result<ExtremalReport> {
    exact_max_count_with(n, &ScanOptions::default(), |_| {})
}

pub fn exact_max_count_with(
    n: usize,
    opts: &ScanOptions,
    on_checkpoint: impl FnMut(&Checkpoint),
) -> Result<ExtremalReport> {
    let summary = scan_labelled(n, opts, on_checkpoint)?;
    let witness = from_arc_pattern(n, summary.max_witness);
    Ok(ExtremalReport {
        n,
        max_count: summary.max_count,
        witness_pattern: summary.max_witness,
        witness_scores: witness.score_sequence().as_slice().to_vec(),
        scanned: summary.scanned,
        summary,
    })
}

/// `m*(n)`: the fewest minimal FVSs over all strong labelled tournaments.
pub fn exact_min_count_strong(n: usize) -> Result<u64> {
    if !(3..=6).contains(&n) {
        return Err(Error::Parameter(format!("exact_min_count_strong needs 3 <= n <= 6, got {n}")));
    }
    let summary = scan_labelled(n, &ScanOptions::default(), |_| {})?;
    summary
        .min_strong_count
        .ok_or_else(|| Error::Precondition(format!("no strong tournament on {n} vertices")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_maxima() {
        let m: Vec<u64> = (1..=5).map(|n| exact_max_count(n).unwrap().max_count).collect();
        assert_eq!(m, vec![1, 1, 3, 3, 7]);
    }

    #[test]
    fn n5_witnesses_have_the_scores_of_qt5() {
        // RT_5 (all scores 2) has only 5 maximal transitive sets
        let r = exact_max_count(5).unwrap();
        let expected: BTreeSet<Vec<usize>> = [vec![1, 2, 2, 2, 3]].into_iter().collect();
        assert_eq!(r.summary.max_witness_scores, expected);
        assert!(r.summary.all_max_witnesses_strong);
        assert_eq!(count_direct(&r.witness()), 7);
    }

    #[test]
    fn min_strong() {
        assert_eq!(exact_min_count_strong(3).unwrap(), 3);
        assert_eq!(exact_min_count_strong(5).unwrap(), 3);
        assert!(exact_min_count_strong(2).is_err());
        assert!(exact_min_count_strong(7).is_err());
    }

    #[test]
    fn guards() {
        assert!(matches!(exact_max_count(8), Err(Error::TooLarge { .. })));
        assert!(exact_max_count(0).is_err());
        let opts = ScanOptions { range: Some(0..10), ..Default::default() };
        assert!(scan_labelled(2, &opts, |_| {}).is_err());
    }

    #[test]
    fn ranges_merge_to_the_full_scan() {
        let full = scan_labelled(5, &ScanOptions::default(), |_| {}).unwrap();
        let a = scan_labelled(5, &ScanOptions { range: Some(0..300), ..Default::default() }, |_| {}).unwrap();
        let b = scan_labelled(5, &ScanOptions { range: Some(300..1024), ..Default::default() }, |_| {}).unwrap();
        assert_eq!(b.merge(a), full);
    }

    #[test]
    fn checkpoints_are_emitted_per_chunk() {
        let mut seen = Vec::new();
        let opts = ScanOptions { chunk: 256, workers: Some(1), ..Default::default() };
        scan_labelled(5, &opts, |c| seen.push(c.completed)).unwrap();
        assert_eq!(seen, vec![256, 512, 768, 1024]);
    }
}
