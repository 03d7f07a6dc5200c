//! Size caps shared by the exhaustive routines.

/// Environment variable overriding [`max_matrix_entries`].
pub const MATRIX_CAP_ENV: &str = "QCOCYCLE_MAX_MATRIX_ENTRIES";

pub const DEFAULT_MAX_MATRIX_ENTRIES: usize = 2_000_000;

/// Largest group order accepted when building multiplication tables.
pub const MAX_GROUP_ORDER: usize = 2000;

/// Largest degree accepted by the permutation-sum chain map.
pub const MAX_PSI_DEGREE: usize = 6;

/// Cap on dense matrix size, read from the environment on each call.
pub fn max_matrix_entries() -> usize {
    std::env::var(MATRIX_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_MATRIX_ENTRIES)
}
