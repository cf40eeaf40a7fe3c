//! Finite verification engines: homomorphism counting into permutation
//! groups and Todd–Coxeter coset enumeration.

mod coset;
mod homs;
mod perm;

pub use coset::{coset_enumerate, CosetOutcome, CosetTable, DEFAULT_MAX_COSETS};
pub use homs::{count_homomorphisms, fingerprint, Fingerprint, FINGERPRINT_TARGETS};
pub use perm::{FiniteGroup, Permutation};
