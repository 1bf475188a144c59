//! Feasibility of putative spectra: run the necessary-condition pipeline
//! on candidate parameter sets and the two exhaustive scans.

use foureig::feasibility::{
    derive_beta_m, feasibility_pipeline, scan_integer, scan_noninteger, PutativeSpectrum,
    ScanVerdict,
};

fn main() {
    // a realizable candidate: the spectrum of K_{2,2} ⊛ J_2
    let good = PutativeSpectrum::new(8, 5, -3, (1, 2), (-1, 4));
    let report = feasibility_pipeline(&good);
    println!("{{[5]¹,[−3]¹,[1]²,[−1]⁴}} feasible: {}", report.feasible);

    // an arithmetically consistent candidate that fails divisibility
    let bad = PutativeSpectrum::new(10, 3, 1, (0, 4), (-2, 4));
    let report = feasibility_pipeline(&bad);
    println!(
        "{{[3]¹,[1]¹,[0]⁴,[−2]⁴}} feasible: {} (first failure: {:?})",
        report.feasible, report.first_failure
    );

    // closed-form derivation of β and m from (n, k, α)
    let (beta, m) = derive_beta_m(8, 5, -3).unwrap();
    println!("(n, k, α) = (8, 5, −3) → β = {beta}, m = {m}");

    // no spectrum {[k]¹,[−1]¹,[α]^m,[β]^m} with irrational α, β exists
    for r in scan_noninteger(2..=6) {
        println!("k = {}: {}", r.k, r.certificate);
    }

    // and none with integral α > 0 > β on n ≤ 60 vertices either
    let outcomes = scan_integer(6..=60);
    let feasible = outcomes
        .iter()
        .filter(|o| o.verdict == ScanVerdict::Feasible)
        .count();
    println!(
        "integral scan: {} triples, {} feasible",
        outcomes.len(),
        feasible
    );
    assert_eq!(feasible, 0);
}
