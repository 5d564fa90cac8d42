//! Enumeration and search caps shared by the exhaustive routines.

/// Environment variable overriding [`Limits::max_enum`].
pub const MAX_ENUM_ENV: &str = "INDEL_BOUNDS_MAX_ENUM";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest word space `q^m` any exhaustive enumeration may walk.
    pub max_enum: u64,
    /// Longest center accepted by ball enumeration.
    pub ball_max_len: usize,
    /// Largest deletion count accepted by ball enumeration.
    pub ball_max_deletions: usize,
    /// Largest block length for exact constant-weight search.
    pub cw_max_n: usize,
    /// Largest Johnson-graph vertex count for exact constant-weight search.
    pub cw_max_vertices: u64,
    /// Branch-and-bound node budget per clique search.
    pub search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum: 5000,
            ball_max_len: 16,
            ball_max_deletions: 4,
            cw_max_n: 14,
            cw_max_vertices: 4000,
            search_budget: 2_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with `max_enum` taken from `INDEL_BOUNDS_MAX_ENUM` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(MAX_ENUM_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
        {
            limits.max_enum = v;
        }
        limits
    }

    pub fn with_max_enum(mut self, max_enum: u64) -> Self {
        self.max_enum = max_enum;
        self
    }
}

/// `q^m`, saturating at `u64::MAX`.
pub(crate) fn space_size(q: u32, m: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..m {
        acc = acc.saturating_mul(q as u64);
    }
    acc
}
