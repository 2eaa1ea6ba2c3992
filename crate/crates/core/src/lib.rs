//! Exact computation of total intersection numbers.
//!
//! For a family F drawn from a ground set X — the k-dimensional subspaces
//! G_q(n, k) of F_q^n, or the symmetric group S_n — the total intersection
//! number I(F) sums int(A, B) over all ordered pairs of members, where
//! `int` is the intersection dimension for subspaces and the number of
//! common fixed positions for permutations. This crate computes I(F)
//! exactly, certifies the maximum MI over families of a given size on
//! desk-scale instances by exhaustive search, and evaluates the
//! association-scheme machinery (eigenvalue tables, inner and dual
//! distributions, Delsarte-style linear-programming bounds, Cayley-graph
//! spectra) that bounds MI in closed form.
//!
//! Everything is exact: `BigInt` / `BigRat` scalars, no floating point,
//! identities checked by equality.

pub mod bounds;
pub mod error;
pub mod exactnum;
pub mod extremal;
pub mod family;
pub mod oracle;
pub mod permgroup;
pub mod schemes;
pub mod spectra;
pub mod vecspace;

pub use error::{Error, Result};
pub use exactnum::BigRat;
pub use family::{Family, GroundId};
pub use num_bigint::BigInt;

/// Resource caps for enumerations and searches. The defaults keep every
/// operation comfortably inside desk scale.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Largest Grassmannian (number of subspaces) that may be enumerated.
    pub grassmann_elements: u64,
    /// Largest n for which S_n may be enumerated as a ground set.
    pub symmetric_n: u32,
    /// Largest n for which conjugacy-scheme tables may be built.
    pub conjugacy_n: u32,
    /// Default exhaustive-search budget (number of candidate families).
    pub search_budget: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            grassmann_elements: 200_000,
            symmetric_n: 8,
            conjugacy_n: 8,
            search_budget: 20_000_000,
        }
    }
}
