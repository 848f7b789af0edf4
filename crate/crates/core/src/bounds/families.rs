//! Constructive checks: the `21^k` lower-bound family, the three-FVS family
//! and the `pq` recurrence.

use num_bigint::BigUint;
use serde::Serialize;

use crate::enumerate::{count_direct, count_minimal_fvs, enumerate_minimal_fvs};
use crate::error::{Error, Result};
use crate::generators::{pq, repeated_sum, st7, u_family};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

pub const MAX_FAMILY_K: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub k: usize,
    pub n: usize,
    pub expected: String,
    pub via_factorization: String,
    /// Whole-tournament enumeration, only run for `k <= 2`.
    pub via_direct: Option<u64>,
    pub pass: bool,
}

/// Checks `f(k · ST_7) = 21^k`.
pub fn verify_lower_bound_family(k: usize) -> Result<FamilyReport> {
    if k == 0 || k > MAX_FAMILY_K {
        return Err(Error::Parameter(format!("k must be in 1..={MAX_FAMILY_K}, got {k}")));
    }
    let t = repeated_sum(&st7(), k);
    let expected = BigUint::from(21u32).pow(k as u32);
    let via_factorization = count_minimal_fvs(&t);
    let via_direct = (k <= 2).then(|| count_direct(&t));
    let pass = via_factorization == expected
        && via_direct.is_none_or(|d| BigUint::from(d) == expected);
    Ok(FamilyReport {
        k,
        n: t.n(),
        expected: expected.to_string(),
        via_factorization: via_factorization.to_string(),
        via_direct,
        pass,
    })
}

/// The three minimal FVSs the construction is designed to have: `{u₁,u₂}`,
/// `{1}` and `{2,..,n-2}`. For `n = 3` (the cyclic triangle) these are the
/// three singletons instead.
pub fn u_family_expected(n: usize) -> Vec<VertexSet> {
    if n == 3 {
        return (0..3).map(|v| VertexSet::singleton(3, v)).collect();
    }
    vec![
        VertexSet::from_indices(n, [n - 2, n - 1]),
        VertexSet::singleton(n, 0),
        VertexSet::from_indices(n, 1..n - 2),
    ]
}

/// Whether `u_family(n)` is strong and has exactly the expected three minimal FVSs.
pub fn verify_u_family(n: usize) -> Result<bool> {
    let t = u_family(n)?;
    let mut got: Vec<VertexSet> = enumerate_minimal_fvs(&t).collect();
    let mut want = u_family_expected(n);
    got.sort();
    want.sort();
    Ok(t.is_strong() && got == want)
}

/// `(f(T'), f(pq(T')))`; the construction should give `2 f(T') + 1`.
pub fn pq_counts(inner: &Tournament) -> (BigUint, BigUint) {
    (count_minimal_fvs(inner), count_minimal_fvs(&pq(inner)))
}
