//! Structure theory around a simple eigenvalue: walk-regularity, the
//! regular partition into halves, divisibility, and the common-neighbor
//! identity.

use foureig::graph::construct;
use foureig::spectral::{
    common_neighbor_check, divisibility_check, is_walk_regular, regular_halves_partition,
    spectrum,
};
use foureig::FamilyDescriptor;
use num_bigint::BigInt;

fn main() {
    let g = construct(&FamilyDescriptor::KssExpand(2, 2)).expect("parameters are in range");
    let s = spectrum(&g).expect("adjacency spectra split over the reals");
    println!("spectrum      {s}");
    println!("walk-regular  {}", is_walk_regular(&g));

    // the simple eigenvalue −3 splits the vertices into halves
    let lambda = BigInt::from(-3);
    let part = regular_halves_partition(&g, &lambda).expect("simple integral eigenvalue");
    println!(
        "halves        {:?} | {:?}  degrees ({}, {})",
        part.halves.0, part.halves.1, part.internal_degree, part.external_degree
    );

    let div = divisibility_check(&s, &lambda).expect("integral spectrum");
    println!(
        "divisibility  P = {}, Q = {}, n | P±Q: {}",
        div.p,
        div.q,
        div.passed()
    );

    let cn = common_neighbor_check(&g, &part, &s);
    println!("common-neighbor identity holds: {}", cn.ok);
    assert!(cn.ok);
}
