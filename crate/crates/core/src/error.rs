use thiserror::Error;

/// Errors reported by the core library.
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration or search would exceed a configured resource cap.
    #[error("{what} would need {requested}, cap is {cap}")]
    SizeLimit {
        what: String,
        requested: String,
        cap: String,
    },

    /// Field arithmetic is only implemented for prime q.
    #[error("unsupported field size q = {q} (enumeration needs a prime)")]
    UnsupportedField { q: u64 },

    /// Two subspaces live in different ambient spaces.
    #[error("ambient space mismatch: ({n1}, q={q1}) vs ({n2}, q={q2})")]
    AmbientMismatch { n1: u32, q1: u32, n2: u32, q2: u32 },

    /// A family does not belong to the ground set it is used with.
    #[error("family ground mismatch: {0}")]
    GroundMismatch(String),

    /// Two permutations act on different numbers of points.
    #[error("permutation size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("operation needs a nonempty family")]
    EmptyFamily,

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    /// An internal consistency check failed (a transcription bug upstream).
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
