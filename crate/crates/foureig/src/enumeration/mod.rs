//! Exhaustive isomorph-free enumeration of small regular graphs,
//! cospectral-mate search, and corpus verification of the
//! classification statements.

mod enumerate;
mod verify;

pub use enumerate::{
    cospectral_mates, enumerate_regular, EnumError, EnumSpec, DEFAULT_ENUMERATION_CAP,
};
pub use verify::{
    verify_theorem, verify_theorems, CensusEntry, MemberRecord, TheoremId, VerificationReport,
};
