//! Closed-form family spectra, structural recognizers, and membership
//! deciders for the four-eigenvalue graph classes.

mod recognize;
mod spectra;

pub use recognize::{class_membership, class_membership_with_spectrum, recognize, ClassMembership};
pub use spectra::family_spectrum;
