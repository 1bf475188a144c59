//! Structural family recognition and membership in the four-eigenvalue
//! classes.

use crate::graph::{are_isomorphic, construct, FamilyDescriptor, Graph};
use crate::spectral::{spectrum, Spectrum};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::cmp::Ordering;

/// Membership flags for the four-eigenvalue graph classes.
///
/// G(4,2): connected regular, four distinct eigenvalues, exactly two of
/// them simple. G(4,2,−1) and G(4,2,0) additionally have −1 resp. 0 as
/// an eigenvalue. G(4,≥−1): connected regular, four distinct
/// eigenvalues, second least eigenvalue (multiplicity-counted) ≥ −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMembership {
    pub g42: bool,
    pub g42_minus_one: bool,
    pub g42_zero: bool,
    pub g4_ge_minus_one: bool,
    pub recognized: Option<FamilyDescriptor>,
}

/// Identify G as a clique expansion of K_{s,s} or the s-crown, or the
/// complement of a crown expansion, by extracting candidate parameters
/// from order and degree and confirming with an isomorphism test.
/// Structural rather than spectral, so spectral-determination claims can
/// be tested against it without circularity.
pub fn recognize(g: &Graph) -> Option<FamilyDescriptor> {
    let n = g.n();
    let k = g.regular_degree()?;
    if !g.is_connected() || n % 2 != 0 {
        return None;
    }
    let st = n / 2;

    // KssExpand: n = 2st, k = st+t−1 determine t = k+1−st, s = st/t
    if k + 1 > st {
        let t = k + 1 - st;
        if st % t == 0 {
            let s = st / t;
            if s >= 1 {
                let cand = FamilyDescriptor::KssExpand(s, t);
                if are_isomorphic(g, &construct(&cand).unwrap()) {
                    return Some(cand);
                }
            }
        }
    }
    // CrownExpand: n = 2st, k = st−1; s is any divisor of st with s ≥ 3
    if k + 1 == st {
        for s in 3..=st {
            if st % s == 0 {
                let cand = FamilyDescriptor::CrownExpand(s, st / s);
                if are_isomorphic(g, &construct(&cand).unwrap()) {
                    return Some(cand);
                }
            }
        }
    }
    // ComplementCrownExpand: n = 2st, k = st
    if k == st {
        for s in 3..=st {
            if st % s == 0 {
                let cand = FamilyDescriptor::ComplementCrownExpand(s, st / s);
                if are_isomorphic(g, &construct(&cand).unwrap()) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Membership of G in G(4,2), G(4,2,−1), G(4,2,0) and G(4,≥−1), plus
/// structural recognition when G is regular.
pub fn class_membership(g: &Graph) -> ClassMembership {
    let s = spectrum(g).expect("adjacency spectra split over the reals");
    class_membership_with_spectrum(g, &s)
}

/// Same as `class_membership` for a caller that already has the
/// spectrum.
pub fn class_membership_with_spectrum(g: &Graph, s: &Spectrum) -> ClassMembership {
    let regular = g.regular_degree().is_some();
    let connected = g.is_connected();
    let four = s.distinct_count() == 4;
    let base = regular && connected && four;

    let g42 = base && s.simple_count() == 2;
    let g42_minus_one = g42 && s.multiplicity_of_int(-1) > 0;
    let g42_zero = g42 && s.multiplicity_of_int(0) > 0;
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let g4_ge_minus_one = base
        && s.second_least_with_multiplicity()
            .map(|v| v.cmp_rational(&minus_one) != Ordering::Less)
            .unwrap_or(false);
    let recognized = if regular && connected { recognize(g) } else { None };
    ClassMembership {
        g42,
        g42_minus_one,
        g42_zero,
        g4_ge_minus_one,
        recognized,
    }
}
