//! Exact spectral toolkit for regular graphs with four distinct
//! eigenvalues: construction of the relevant graph families, exact
//! spectra and their classification, structural recognizers, parameter
//! feasibility scans, and exhaustive small-order enumeration.
//!
//! All spectral decisions are exact (arbitrary-precision integer and
//! rational arithmetic); floating point appears only in display output.

pub mod algebra;
pub mod enumeration;
pub mod family;
pub mod feasibility;
pub mod graph;
pub mod report;
pub mod spectral;

pub use algebra::{AlgebraicNumber, IntMatrix, IntPolynomial};
pub use graph::{FamilyDescriptor, Graph};
pub use spectral::{Spectrum, TaxonomyLabel};
