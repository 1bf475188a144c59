//! Randomized invariants: encoding round trips, isomorphism invariance,
//! and the exact spectrum maps for clique expansion and complementation.

use foureig::algebra::AlgebraicNumber;
use foureig::graph::{
    are_isomorphic, canonical_form, construct, graph6_decode, graph6_encode, Graph,
};
use foureig::spectral::{spectrum, Spectrum};
use foureig::FamilyDescriptor;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Arbitrary graph on 1..=max_n vertices from a bit list.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n.max(2) - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges)
        })
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// The eq.-(6) image of a spectrum under G ↦ G ⊛ J_m.
fn clique_expand_spectrum(s: &Spectrum, n: usize, m: usize) -> Spectrum {
    let mm = BigInt::from(m as i64);
    let shift = BigInt::from(m as i64 - 1);
    let mut entries: Vec<(AlgebraicNumber, usize)> = s
        .entries()
        .iter()
        .map(|(v, mult)| (v.affine(&mm, &shift), *mult))
        .collect();
    if m > 1 {
        entries.push((AlgebraicNumber::integer(-1), n * m - n));
    }
    Spectrum::from_entries(entries)
}

/// The complement image for a k-regular spectrum: k ↦ n−k−1, λ ↦ −1−λ.
fn complement_spectrum(s: &Spectrum, n: usize) -> Spectrum {
    let minus_one = BigInt::from(-1);
    let (k_val, k_mult) = s.largest();
    assert_eq!(*k_mult, 1, "connected regular: degree simple");
    let k = k_val.as_integer().expect("regular graph degree").clone();
    let mut entries = vec![(
        AlgebraicNumber::Integer(BigInt::from(n as i64) - k - 1),
        1,
    )];
    // one copy of the degree is replaced; everything else maps λ ↦ −1−λ
    for (i, (v, mult)) in s.entries().iter().enumerate() {
        let m = if i == 0 { *mult - 1 } else { *mult };
        if m > 0 {
            entries.push((v.affine(&minus_one, &minus_one), m));
        }
    }
    Spectrum::from_entries(entries)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(10)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(12)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(
        g in arb_graph(7),
        seed in any::<u64>(),
    ) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn clique_expansion_degree_and_spectrum_map(
        g in arb_graph(6),
        m in 1usize..=4,
    ) {
        let expanded = g.clique_expand(m);
        prop_assert_eq!(expanded.n(), g.n() * m);
        for v in 0..g.n() {
            prop_assert_eq!(expanded.degree(v * m), m * g.degree(v) + m - 1);
        }
        let s = spectrum(&g).unwrap();
        prop_assert_eq!(
            spectrum(&expanded).unwrap(),
            clique_expand_spectrum(&s, g.n(), m)
        );
    }

    #[test]
    fn permutation_strategy_gives_isomorphic_graphs(
        (g, perm) in arb_graph(8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), arb_permutation(n))
        })
    ) {
        prop_assert!(are_isomorphic(&g, &g.permuted(&perm)));
    }
}

#[test]
fn complement_spectrum_map_on_regular_families() {
    for desc in [
        FamilyDescriptor::CycleC(6),
        FamilyDescriptor::CycleC(7),
        FamilyDescriptor::Crown(4),
        FamilyDescriptor::KssExpand(2, 2),
        FamilyDescriptor::CrownExpand(3, 2),
        FamilyDescriptor::CompleteBipartite(3, 3),
    ] {
        let g = construct(&desc).unwrap();
        let s = spectrum(&g).unwrap();
        assert_eq!(
            spectrum(&g.complement()).unwrap(),
            complement_spectrum(&s, g.n()),
            "complement map mismatch for {desc:?}"
        );
    }
}

#[test]
fn crowns_are_regular_bipartite() {
    for s in 2..=7 {
        let g = construct(&FamilyDescriptor::Crown(s)).unwrap();
        assert_eq!(g.regular_degree(), Some(s - 1));
        assert!(g.is_bipartite());
        assert_eq!(g.is_connected(), s >= 3);
    }
}
