//! Construct the named graph families and print their exact spectra,
//! comparing the closed forms against spectra computed from scratch.

use foureig::family::family_spectrum;
use foureig::graph::{construct, graph6_encode};
use foureig::spectral::spectrum;
use foureig::FamilyDescriptor;

fn main() {
    let families = [
        FamilyDescriptor::CompleteK(5),
        FamilyDescriptor::CycleC(6),
        FamilyDescriptor::Crown(4),
        FamilyDescriptor::KssExpand(2, 2),
        FamilyDescriptor::CrownExpand(3, 2),
        FamilyDescriptor::ComplementCrownExpand(3, 2),
        FamilyDescriptor::AGraph(1, 2, 3),
        FamilyDescriptor::BGraph(1, 1, 1, 1),
    ];
    for desc in families {
        let g = construct(&desc).expect("parameters are in range");
        let closed = family_spectrum(&desc).expect("parameters are in range");
        let computed = spectrum(&g).expect("adjacency spectra split over the reals");
        assert_eq!(closed, computed, "closed form disagrees for {desc:?}");
        println!(
            "{desc:?}\n  graph6   {}\n  spectrum {closed}",
            graph6_encode(&g)
        );
    }
}
