//! Exact graph spectra as multisets of algebraic numbers.

use crate::algebra::{char_poly, factor_over_rationals, AlgebraicNumber};
use crate::algebra::roots::isolate_real_roots;
use crate::graph::Graph;
use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

/// Eigenvalues with multiplicities, sorted descending by value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(AlgebraicNumber, usize)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("characteristic polynomial has a residual factor that could not be split")]
    UnsplitResidual,
}

/// Exact spectrum of the adjacency matrix.
pub fn spectrum(g: &Graph) -> Result<Spectrum, SpectrumError> {
    let cp = char_poly(&g.adjacency_matrix());
    let fac = factor_over_rationals(&cp);
    if fac.unsplit {
        return Err(SpectrumError::UnsplitResidual);
    }
    let mut entries = Vec::new();
    for (factor, mult) in &fac.factors {
        for iv in isolate_real_roots(factor) {
            entries.push((
                AlgebraicNumber::from_irreducible_root(factor, &iv),
                *mult as usize,
            ));
        }
    }
    Ok(Spectrum::from_entries(entries))
}

impl Spectrum {
    /// Sorts descending and merges duplicate values.
    pub fn from_entries(mut entries: Vec<(AlgebraicNumber, usize)>) -> Spectrum {
        assert!(!entries.is_empty(), "spectrum cannot be empty");
        assert!(entries.iter().all(|(_, m)| *m > 0));
        entries.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(AlgebraicNumber, usize)> = Vec::new();
        for (v, m) in entries {
            match merged.last_mut() {
                Some((last, lm)) if *last == v => *lm += m,
                _ => merged.push((v, m)),
            }
        }
        Spectrum { entries: merged }
    }

    pub fn from_int_pairs(pairs: &[(i64, usize)]) -> Spectrum {
        Spectrum::from_entries(
            pairs
                .iter()
                .map(|&(v, m)| (AlgebraicNumber::integer(v), m))
                .collect(),
        )
    }

    /// Entries descending by eigenvalue.
    pub fn entries(&self) -> &[(AlgebraicNumber, usize)] {
        &self.entries
    }

    /// Number of vertices (multiplicities sum).
    pub fn n(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    /// Largest eigenvalue with its multiplicity (the degree, for a
    /// connected regular graph).
    pub fn largest(&self) -> &(AlgebraicNumber, usize) {
        &self.entries[0]
    }

    pub fn least(&self) -> &AlgebraicNumber {
        &self.entries.last().unwrap().0
    }

    /// Second-smallest distinct eigenvalue, when there are at least two.
    pub fn second_least_distinct(&self) -> Option<&AlgebraicNumber> {
        let t = self.entries.len();
        if t >= 2 {
            Some(&self.entries[t - 2].0)
        } else {
            None
        }
    }

    /// λ_{n−1} in the multiplicity-counted ascending eigenvalue list: the
    /// least eigenvalue itself when it is not simple.
    pub fn second_least_with_multiplicity(&self) -> Option<&AlgebraicNumber> {
        let (least, m) = self.entries.last().unwrap();
        if self.n() < 2 {
            None
        } else if *m >= 2 {
            Some(least)
        } else {
            self.second_least_distinct()
        }
    }

    pub fn multiplicity(&self, v: &AlgebraicNumber) -> usize {
        self.entries
            .iter()
            .find(|(x, _)| x == v)
            .map_or(0, |(_, m)| *m)
    }

    pub fn multiplicity_of_int(&self, z: i64) -> usize {
        self.multiplicity(&AlgebraicNumber::integer(z))
    }

    /// Number of simple (multiplicity-one) eigenvalues.
    pub fn simple_count(&self) -> usize {
        self.entries.iter().filter(|(_, m)| *m == 1).count()
    }

    /// All distinct eigenvalues as integers, when every one is integral.
    pub fn as_int_pairs(&self) -> Option<Vec<(BigInt, usize)>> {
        self.entries
            .iter()
            .map(|(v, m)| v.as_integer().map(|z| (z.clone(), *m)))
            .collect()
    }

    pub fn all_integral(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.is_integer())
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}]^{}", v, m)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct, difference_set_incidence, FamilyDescriptor};

    #[test]
    fn k4_spectrum() {
        let g = construct(&FamilyDescriptor::CompleteK(4)).unwrap();
        let s = spectrum(&g).unwrap();
        assert_eq!(s, Spectrum::from_int_pairs(&[(3, 1), (-1, 3)]));
    }

    #[test]
    fn crown3_spectrum_matches_c6() {
        let g = construct(&FamilyDescriptor::Crown(3)).unwrap();
        let s = spectrum(&g).unwrap();
        assert_eq!(
            s,
            Spectrum::from_int_pairs(&[(2, 1), (1, 2), (-1, 2), (-2, 1)])
        );
    }

    #[test]
    fn heawood_spectrum() {
        let inc = difference_set_incidence(7, &[0, 1, 3]);
        let g = construct(&FamilyDescriptor::IncidenceGraph(inc)).unwrap();
        let s = spectrum(&g).unwrap();
        let sqrt2 = |plus| AlgebraicNumber::sqrt(&BigInt::from(2), plus);
        assert_eq!(
            s,
            Spectrum::from_entries(vec![
                (AlgebraicNumber::integer(3), 1),
                (sqrt2(true), 6),
                (sqrt2(false), 6),
                (AlgebraicNumber::integer(-3), 1),
            ])
        );
        assert!(!s.all_integral());
        assert_eq!(s.n(), 14);
    }

    #[test]
    fn trace_identities() {
        for desc in [
            FamilyDescriptor::CompleteK(5),
            FamilyDescriptor::Crown(4),
            FamilyDescriptor::KssExpand(2, 2),
            FamilyDescriptor::CycleC(7),
        ] {
            let g = construct(&desc).unwrap();
            let s = spectrum(&g).unwrap();
            assert_eq!(s.n(), g.n());
            // Σ mλ = 0 and Σ mλ² = 2|E|, checked through matrix traces of
            // the actual adjacency matrix, which the spectrum must match
            let a = g.adjacency_matrix();
            let a2 = a.mul(&a);
            assert_eq!(a.trace(), BigInt::from(0));
            assert_eq!(a2.trace(), BigInt::from(2 * g.edge_count()));
        }
    }

    #[test]
    fn c5_quadratic_eigenvalues() {
        let g = construct(&FamilyDescriptor::CycleC(5)).unwrap();
        let s = spectrum(&g).unwrap();
        // {2, (-1+√5)/2 ×2, (-1-√5)/2 ×2}
        assert_eq!(s.distinct_count(), 3);
        assert_eq!(
            s.entries()[1].0,
            AlgebraicNumber::quadratic(BigInt::from(-1), BigInt::from(5), true)
        );
        assert_eq!(s.entries()[1].1, 2);
    }

    #[test]
    fn second_least_variants() {
        let s = Spectrum::from_int_pairs(&[(5, 1), (1, 2), (-1, 4), (-3, 1)]);
        assert_eq!(
            s.second_least_distinct().unwrap(),
            &AlgebraicNumber::integer(-1)
        );
        assert_eq!(
            s.second_least_with_multiplicity().unwrap(),
            &AlgebraicNumber::integer(-1)
        );
        let k3 = Spectrum::from_int_pairs(&[(2, 1), (-1, 2)]);
        assert_eq!(
            k3.second_least_with_multiplicity().unwrap(),
            &AlgebraicNumber::integer(-1)
        );
        assert_eq!(
            k3.second_least_distinct().unwrap(),
            &AlgebraicNumber::integer(2)
        );
    }
}
