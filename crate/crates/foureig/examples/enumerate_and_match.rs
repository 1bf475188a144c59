//! Enumerate small regular graphs up to isomorphism and use the corpus
//! to test spectral determination.

use foureig::enumeration::{cospectral_mates, enumerate_regular, EnumSpec};
use foureig::graph::{are_isomorphic, construct, graph6_encode};
use foureig::spectral::Spectrum;
use foureig::FamilyDescriptor;

fn main() {
    // connected cubic census
    for n in [4, 6, 8, 10] {
        let graphs = enumerate_regular(&EnumSpec::new(n, 3).connected(true)).unwrap();
        println!("connected 3-regular graphs on {n:2} vertices: {}", graphs.len());
    }

    // the crown graph on 8 vertices is the unique connected cubic graph
    // with spectrum {[3]¹, [1]³, [−1]³, [−3]¹}
    let target = Spectrum::from_int_pairs(&[(3, 1), (1, 3), (-1, 3), (-3, 1)]);
    let mates = cospectral_mates(&target, &EnumSpec::new(8, 3).connected(true)).unwrap();
    let crown = construct(&FamilyDescriptor::Crown(4)).unwrap();
    assert_eq!(mates.len(), 1);
    assert!(are_isomorphic(&mates[0], &crown));
    println!(
        "unique graph with spectrum {target}: {}",
        graph6_encode(&mates[0])
    );
}
