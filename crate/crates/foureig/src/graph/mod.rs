//! Graph representation, constructive families, clique expansion,
//! complement, graph6 serialization, and isomorphism via canonical forms.

mod canon;
mod families;
#[allow(clippy::module_inception)]
mod graph;
mod graph6;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling};
pub use families::{
    construct, difference_set_incidence, DesignError, DesignParams, FamilyDescriptor,
    ParameterOutOfRange,
};
pub use graph::{BasicPredicates, Graph};
pub use graph6::{graph6_decode, graph6_encode, MalformedGraph6};
