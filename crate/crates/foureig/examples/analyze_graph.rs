//! Run the full analysis pipeline on a clique expansion of K_{2,2} and
//! print the machine-readable report as JSON.

use foureig::graph::construct;
use foureig::report::analyze;
use foureig::FamilyDescriptor;

fn main() {
    let g = construct(&FamilyDescriptor::KssExpand(2, 2)).expect("parameters are in range");
    let report = analyze(&g);

    assert_eq!(report.degree, Some(5));
    assert!(report.membership.g42_minus_one);
    assert_eq!(
        report.recognized_family,
        Some(FamilyDescriptor::KssExpand(2, 2))
    );

    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
