//! Score sequences, Landau's conditions and realisation.

use std::collections::VecDeque;
use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Non-decreasing list of out-degrees, each at most `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScoreSequence(Vec<usize>);

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl ScoreSequence {
    pub fn new(scores: Vec<usize>) -> Result<Self> {
        let n = scores.len();
        for (i, w) in scores.windows(2).enumerate() {
            if w[0] > w[1] {
                return Err(Error::Unsorted(i + 2));
            }
        }
        if let Some((i, &s)) = scores.iter().enumerate().find(|(_, &s)| s + 1 > n) {
            return Err(Error::ScoreTooLarge { position: i + 1, score: s, max: n.saturating_sub(1) });
        }
        Ok(ScoreSequence(scores))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// First prefix `k` (1-based) violating Landau's condition, if any.
    ///
    /// Non-strict form: `Σ_{v≤k} s_v ≥ C(k,2)` for all `k`, with equality at
    /// `k = n`. The strong form raises the bound to `C(k,2) + 1` for
    /// `k = 1..n-1`.
    pub fn landau_violation(&self, strong: bool) -> Option<Error> {
        let n = self.0.len();
        let mut sum = 0;
        for (i, &s) in self.0.iter().enumerate() {
            let k = i + 1;
            sum += s;
            let required = binom2(k) + usize::from(strong && k < n);
            if sum < required || (k == n && sum != required) {
                return Some(Error::Landau { k, sum, required });
            }
        }
        None
    }

    pub fn landau_feasible(&self, strong: bool) -> bool {
        self.landau_violation(strong).is_none()
    }

    /// Constructs a tournament with exactly this score sequence; vertex `i`
    /// receives score `s_i`.
    ///
    /// Greedy: repeatedly settle the remaining vertex of smallest residual
    /// score, letting the vertices with the largest residual scores beat it.
    /// Any mismatch left afterwards is repaired by reversing directed paths
    /// from a vertex with surplus wins to one with a deficit.
    pub fn realize(&self) -> Result<Tournament> {
        if let Some(e) = self.landau_violation(false) {
            return Err(e);
        }
        let n = self.0.len();
        let target = &self.0;
        let mut beats = vec![vec![false; n]; n];
        let mut residual: Vec<isize> = target.iter().map(|&s| s as isize).collect();
        let mut remaining: Vec<usize> = (0..n).collect();
        while let Some(pos) = (0..remaining.len()).min_by_key(|&i| (residual[remaining[i]], remaining[i])) {
            let v = remaining.swap_remove(pos);
            remaining.sort_by_key(|&u| (std::cmp::Reverse(residual[u]), u));
            let losses = remaining.len().saturating_sub(residual[v].max(0) as usize);
            for (i, &u) in remaining.iter().enumerate() {
                if i < losses {
                    beats[u][v] = true;
                    residual[u] -= 1;
                } else {
                    beats[v][u] = true;
                }
            }
        }
        repair(&mut beats, target)?;
        let t = Tournament::from_matrix(&beats)?;
        debug_assert_eq!(t.scores(), *target);
        Ok(t)
    }

    /// Every non-decreasing sequence of length `n` with entries in `entries`
    /// that satisfies Landau's condition (strong or non-strict form).
    pub fn enumerate(n: usize, strong: bool, entries: RangeInclusive<usize>) -> Vec<ScoreSequence> {
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let lo = *entries.start();
        let hi = (*entries.end()).min(n - 1);
        let total = binom2(n);
        let mut prefix = Vec::with_capacity(n);
        extend(n, strong, lo, hi, total, 0, &mut prefix, &mut out);
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    n: usize,
    strong: bool,
    lo: usize,
    hi: usize,
    total: usize,
    sum: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<ScoreSequence>,
) {
    let k = prefix.len();
    if k == n {
        if sum == total {
            out.push(ScoreSequence(prefix.clone()));
        }
        return;
    }
    let start = prefix.last().copied().unwrap_or(lo).max(lo);
    for s in start..=hi {
        let new_sum = sum + s;
        let kk = k + 1;
        let required = binom2(kk) + usize::from(strong && kk < n);
        // the remaining entries are at least s and at most hi
        if new_sum + (n - kk) * hi < total {
            continue;
        }
        if new_sum + (n - kk) * s > total {
            break;
        }
        if new_sum < required {
            continue;
        }
        prefix.push(s);
        extend(n, strong, lo, hi, total, new_sum, prefix, out);
        prefix.pop();
    }
}

fn repair(beats: &mut [Vec<bool>], target: &[usize]) -> Result<()> {
    let n = target.len();
    loop {
        let actual: Vec<usize> = beats.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
        let Some(surplus) = (0..n).find(|&v| actual[v] > target[v]) else {
            return Ok(());
        };
        let deficits: Vec<bool> = (0..n).map(|v| actual[v] < target[v]).collect();
        // BFS along arcs from the surplus vertex to any deficit vertex.
        let mut parent = vec![usize::MAX; n];
        parent[surplus] = surplus;
        let mut queue = VecDeque::from([surplus]);
        let mut found = None;
        while let Some(u) = queue.pop_front() {
            if deficits[u] {
                found = Some(u);
                break;
            }
            for w in 0..n {
                if beats[u][w] && parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let Some(mut w) = found else {
            return Err(Error::Precondition("score repair found no reversible path".into()));
        };
        while w != surplus {
            let u = parent[w];
            beats[u][w] = false;
            beats[w][u] = true;
            w = u;
        }
    }
}

impl fmt::Display for ScoreSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}
