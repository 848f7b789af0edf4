//! Extremal lab: exhaustive and constructive checks of the combinatorial
//! bounds on the number of minimal FVSs.

pub mod extremal;
pub mod families;
pub mod score_cap;
pub mod sigma;

pub use extremal::{
    exact_max_count, exact_max_count_with, exact_min_count_strong, labelled_count, scan_labelled, Checkpoint,
    ExtremalReport, ScanOptions, ScanSummary,
};
pub use families::{pq_counts, u_family_expected, verify_lower_bound_family, verify_u_family, FamilyReport};
pub use score_cap::{check_score_cap, score_cap_campaign, CampaignReport};
pub use sigma::{
    g_value, sigma, sigma_closed_form, upper_bound_envelope, verify_sigma_maximizes, SigmaInstance, SigmaReport,
    BETA,
};

/// `M(n)` for `n = 1..=9`: exhaustive for `n <= 7`, constructive beyond.
pub const TABLE1: [u64; 9] = [1, 1, 3, 3, 7, 12, 21, 25, 43];
