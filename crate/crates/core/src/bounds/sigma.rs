//! The convex score-sequence objective `G(s) = Σ β^{s_v}` and its
//! maximiser `σ(n)` over the feasible set `S_n`.
//!
//! `S_n` holds the non-decreasing sequences satisfying the strong Landau
//! conditions with `3 ≤ s_1` and `s_n ≤ n - 4`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::score::ScoreSequence;

/// Base of the exponential upper bound.
pub const BETA: f64 = 1.6740;
/// Relative slack for comparing values of `G`.
pub const RELATIVE_SLACK: f64 = 1e-9;

pub fn g_value(s: &ScoreSequence, beta: f64) -> f64 {
    s.as_slice().iter().map(|&c| beta.powi(c as i32)).sum()
}

/// `σ(n)` for `n >= 11`.
pub fn sigma(n: usize) -> Result<ScoreSequence> {
    let scores = match n {
        0..=10 => return Err(Error::Parameter(format!("sigma is defined for n >= 11, got {n}"))),
        11 => vec![3, 3, 3, 3, 3, 5, 7, 7, 7, 7, 7],
        12 => vec![3, 3, 3, 3, 3, 3, 8, 8, 8, 8, 8, 8],
        13 => vec![3, 3, 3, 3, 3, 3, 6, 9, 9, 9, 9, 9, 9],
        _ => {
            let mut s = vec![3; 6];
            s.push(4);
            s.extend(7..=n - 8);
            s.push(n - 5);
            s.extend(std::iter::repeat_n(n - 4, 6));
            s
        }
    };
    ScoreSequence::new(scores)
}

/// Closed form of `G(σ(n))`.
pub fn sigma_closed_form(n: usize, beta: f64) -> Result<f64> {
    let b = |e: usize| beta.powi(e as i32);
    Ok(match n {
        0..=10 => return Err(Error::Parameter(format!("sigma is defined for n >= 11, got {n}"))),
        11 => 5.0 * b(3) + b(5) + 5.0 * b(7),
        12 => 6.0 * b(3) + 6.0 * b(8),
        13 => 6.0 * b(3) + b(6) + 6.0 * b(9),
        _ => 6.0 * b(3) + b(4) + (b(n - 7) - b(7)) / (beta - 1.0) + b(n - 5) + 6.0 * b(n - 4),
    })
}

/// Upper envelope of `G(σ(n))`: the exact value for `n <= 13`, and
/// `β^{n-7}/(β-1) + β^{n-5} + 6β^{n-4}` beyond.
pub fn upper_bound_envelope(n: usize, beta: f64) -> Result<f64> {
    let b = |e: usize| beta.powi(e as i32);
    match n {
        0..=13 => sigma_closed_form(n, beta),
        _ => Ok(b(n - 7) / (beta - 1.0) + b(n - 5) + 6.0 * b(n - 4)),
    }
}

/// The optimisation problem for one `n`.
#[derive(Clone, Debug)]
pub struct SigmaInstance {
    pub n: usize,
    pub beta: f64,
    pub sigma: ScoreSequence,
}

impl SigmaInstance {
    pub fn new(n: usize, beta: f64) -> Result<Self> {
        Ok(SigmaInstance { n, beta, sigma: sigma(n)? })
    }

    /// Membership in `S_n`.
    pub fn feasible(&self, s: &ScoreSequence) -> bool {
        let v = s.as_slice();
        v.len() == self.n
            && v.first().is_some_and(|&a| a >= 3)
            && v.last().is_some_and(|&z| z + 4 <= self.n)
            && s.landau_feasible(true)
    }

    /// Every member of `S_n`.
    pub fn feasible_set(&self) -> Vec<ScoreSequence> {
        ScoreSequence::enumerate(self.n, true, 3..=self.n - 4)
    }

    pub fn g(&self, s: &ScoreSequence) -> f64 {
        g_value(s, self.beta)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaReport {
    pub n: usize,
    pub beta: f64,
    pub sequences: usize,
    pub sigma: Vec<usize>,
    pub sigma_feasible: bool,
    pub g_sigma: f64,
    pub max_g: f64,
    /// Sequences whose value is within the relative slack of the maximum.
    pub argmax: Vec<Vec<usize>>,
    /// The five largest values of `G`, best first.
    pub top: Vec<(Vec<usize>, f64)>,
    /// `G(s) <= G(σ(n))` for all `s ∈ S_n`.
    pub maximizes: bool,
    /// `σ(n)` is the only sequence attaining the maximum.
    pub unique: bool,
}

impl SigmaReport {
    pub fn pass(&self) -> bool {
        self.sigma_feasible && self.maximizes && self.unique
    }
}

/// Enumerates `S_n` and compares every value of `G` with `G(σ(n))`.
pub fn verify_sigma_maximizes(n: usize, beta: f64) -> Result<SigmaReport> {
    let inst = SigmaInstance::new(n, beta)?;
    let all = inst.feasible_set();
    let g_sigma = inst.g(&inst.sigma);
    let mut scored: Vec<(&ScoreSequence, f64)> = all.iter().map(|s| (s, inst.g(s))).collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1));
    let max_g = scored.first().map_or(f64::NAN, |x| x.1);
    let tol = RELATIVE_SLACK * max_g.abs().max(g_sigma.abs());
    let argmax: Vec<Vec<usize>> = scored
        .iter()
        .take_while(|(_, g)| max_g - g <= tol)
        .map(|(s, _)| s.as_slice().to_vec())
        .collect();
    let maximizes = scored.iter().all(|(_, g)| *g <= g_sigma + tol);
    let unique = argmax.len() == 1 && argmax[0] == inst.sigma.as_slice();
    Ok(SigmaReport {
        n,
        beta,
        sequences: all.len(),
        sigma: inst.sigma.as_slice().to_vec(),
        sigma_feasible: inst.feasible(&inst.sigma),
        g_sigma,
        max_g,
        argmax,
        top: scored.iter().take(5).map(|(s, g)| (s.as_slice().to_vec(), *g)).collect(),
        maximizes,
        unique,
    })
}
