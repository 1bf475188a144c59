//! Verify the classification statements over every connected regular
//! graph on up to 8 vertices in a single corpus pass.

use foureig::enumeration::{verify_theorems, TheoremId};

fn main() {
    let ids = [
        TheoremId::NoThreeSimple,
        TheoremId::SecondLeastFamilies,
        TheoremId::MinusOneFamilies,
        TheoremId::ZeroFamilies,
        TheoremId::WalkRegularity,
    ];
    let reports = verify_theorems(&ids, 8).unwrap();
    for r in &reports {
        println!(
            "{:?}: {} members, {} counterexamples",
            r.theorem,
            r.members.len(),
            r.counterexamples.len()
        );
        for m in &r.members {
            println!("  {} — {:?}", m.graph6, m.family);
        }
        assert!(r.verified());
    }
}
