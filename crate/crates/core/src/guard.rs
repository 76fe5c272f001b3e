//! Size limits for the exhaustive enumerations.

/// Environment variable that raises the length guards.
pub const GUARD_ENV: &str = "ALCOVE_LAB_GUARD";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Guards {
    /// Maximum length for [`crate::bruhat::ball`], and hence for `length(t_μ)`
    /// in admissible-set computations.
    pub ball_max_len: usize,
    /// Maximum length of `v` in the subword oracle.
    pub subword_max_len: usize,
    /// Maximum rank for full Weyl group enumeration.
    pub enumerate_max_rank: usize,
    /// Maximum rank for the vertex-enumeration hull oracle.
    pub hull_oracle_max_rank: usize,
    /// Maximum ball length for the fixed-point Bruhat inheritance scan.
    pub inheritance_max_len: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            ball_max_len: 12,
            subword_max_len: 8,
            enumerate_max_rank: 8,
            hull_oracle_max_rank: 4,
            inheritance_max_len: 6,
        }
    }
}

impl Guards {
    /// Defaults, with the length guards raised to `ALCOVE_LAB_GUARD` when it
    /// is set to a larger integer.
    pub fn from_env() -> Self {
        let raised = std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok());
        match raised {
            Some(limit) => Guards::default().raised_to(limit),
            None => Guards::default(),
        }
    }

    pub fn raised_to(mut self, limit: usize) -> Self {
        self.ball_max_len = self.ball_max_len.max(limit);
        self.subword_max_len = self.subword_max_len.max(limit);
        self.inheritance_max_len = self.inheritance_max_len.max(limit);
        self
    }

    pub(crate) fn check(&self, what: &'static str, value: usize, limit: usize) -> crate::Result<()> {
        if value > limit {
            Err(crate::Error::GuardExceeded { what, value, limit })
        } else {
            Ok(())
        }
    }
}
