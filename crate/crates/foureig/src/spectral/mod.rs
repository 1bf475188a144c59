//! Exact spectra, the four-eigenvalue taxonomy, walk-regularity, regular
//! partitions into halves, and the divisibility / common-neighbor /
//! second-least-eigenvalue conditions.

mod conditions;
mod spectrum;
mod structure;
mod taxonomy;

pub use conditions::{
    divisibility_check, second_least_classification, DivisibilityError, DivisibilityReport,
    Lemma26Case, SecondLeastReport,
};
pub use spectrum::{spectrum, Spectrum, SpectrumError};
pub use structure::{
    annihilation_check, common_neighbor_check, eval_poly_at_matrix, is_walk_regular,
    regular_halves_partition, CommonNeighborReport, PartitionError, RegularPartition,
};
pub use taxonomy::{classify_four, InconsistentSpectrum, TaxonomyLabel};
