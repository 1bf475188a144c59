//! Classify four-eigenvalue spectra by how many eigenvalues are simple
//! and the algebraic shape of the non-simple ones.

use foureig::graph::{construct, difference_set_incidence};
use foureig::spectral::{classify_four, spectrum};
use foureig::FamilyDescriptor;

fn main() {
    let heawood = FamilyDescriptor::IncidenceGraph(difference_set_incidence(7, &[0, 1, 3]));
    let samples = [
        ("K_{2,2} ⊛ J_2", FamilyDescriptor::KssExpand(2, 2)),
        ("Heawood graph", heawood),
        ("C_7", FamilyDescriptor::CycleC(7)),
        ("C_8", FamilyDescriptor::CycleC(8)),
        ("K_5", FamilyDescriptor::CompleteK(5)),
    ];
    for (name, desc) in samples {
        let g = construct(&desc).expect("parameters are in range");
        let s = spectrum(&g).expect("adjacency spectra split over the reals");
        let label = classify_four(&s).expect("graph spectra are consistent");
        println!("{name:15} {s}  →  {label:?}");
    }
}
