//! Parameter feasibility: necessary conditions a putative four-value
//! spectrum of a connected regular graph must satisfy, and exhaustive
//! scans ruling out spectra of the form {[k]¹, [−1]¹, [α]^m, [β]^{n−2−m}}.

mod pipeline;
mod scans;

pub use pipeline::{
    derive_beta_m, feasibility_pipeline, is_integer, is_positive_integer, Condition, DeriveError,
    DerivedQuantities, FeasibilityReport, PutativeSpectrum,
};
pub use scans::{
    scan_integer, scan_noninteger, IntegerScanOutcome, NonIntegerScanReport, ScanVerdict,
};
