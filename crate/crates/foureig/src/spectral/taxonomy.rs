//! Taxonomy of connected regular graphs with four distinct eigenvalues,
//! keyed by how many eigenvalues are simple and the algebraic shape of
//! the non-simple ones.

use super::spectrum::Spectrum;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TaxonomyLabel {
    /// At least three simple eigenvalues (ruled out for connected
    /// regular graphs; reported so the suite can flag counterexamples).
    ThreeOrMoreSimple,
    /// Exactly two simple, all four eigenvalues integral.
    TwoSimpleIntegral,
    /// Exactly two simple (both integral), the other two a quadratic
    /// conjugate pair with a common multiplicity.
    TwoSimpleQuadratic,
    /// Only the degree simple, all four integral.
    OneSimpleAllIntegral,
    /// Only the degree simple, one quadratic conjugate pair with a
    /// common multiplicity plus one integral eigenvalue.
    OneSimpleQuadraticPair,
    /// Only the degree simple, the other three a cubic conjugate triple
    /// of common multiplicity m = (n−1)/3, with degree k ∈ {m, 2m}.
    OneSimpleCubicTriple { m: usize },
    NotFourEigenvalue,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("inconsistent four-eigenvalue spectrum: {0}")]
pub struct InconsistentSpectrum(pub String);

/// Classify the spectrum of a connected regular graph with four distinct
/// eigenvalues. Side conditions (conjugate pairs sharing multiplicity,
/// the cubic-triple arithmetic) are enforced; their failure means the
/// input is not the spectrum of such a graph.
pub fn classify_four(spec: &Spectrum) -> Result<TaxonomyLabel, InconsistentSpectrum> {
    if spec.distinct_count() != 4 {
        return Ok(TaxonomyLabel::NotFourEigenvalue);
    }
    let entries = spec.entries();
    let n = spec.n();
    let (k, k_mult) = &entries[0];
    if *k_mult != 1 {
        return Err(InconsistentSpectrum(
            "largest eigenvalue of a connected regular graph must be simple".into(),
        ));
    }
    let simple = spec.simple_count();
    if simple >= 3 {
        return Ok(TaxonomyLabel::ThreeOrMoreSimple);
    }
    if simple == 2 {
        if spec.all_integral() {
            return Ok(TaxonomyLabel::TwoSimpleIntegral);
        }
        // the non-simple pair must be quadratic conjugates of one
        // multiplicity, and both simple eigenvalues integral
        let non_simple: Vec<_> = entries.iter().filter(|(_, m)| *m > 1).collect();
        let ok = entries.iter().filter(|(_, m)| *m == 1).all(|(v, _)| v.is_integer())
            && non_simple.len() == 2
            && non_simple[0].0.degree() == 2
            && non_simple[0].0.min_poly() == non_simple[1].0.min_poly()
            && non_simple[0].1 == non_simple[1].1;
        return if ok {
            Ok(TaxonomyLabel::TwoSimpleQuadratic)
        } else {
            Err(InconsistentSpectrum(format!(
                "two simple eigenvalues but the non-simple pair is not a \
                 matched quadratic conjugate pair: {spec}"
            )))
        };
    }
    // only the degree is simple
    if !k.is_integer() {
        return Err(InconsistentSpectrum(
            "simple largest eigenvalue must be integral when no other eigenvalue is simple".into(),
        ));
    }
    if spec.all_integral() {
        return Ok(TaxonomyLabel::OneSimpleAllIntegral);
    }
    let rest = &entries[1..];
    let quadratics: Vec<_> = rest.iter().filter(|(v, _)| v.degree() == 2).collect();
    let cubics: Vec<_> = rest.iter().filter(|(v, _)| v.degree() == 3).collect();
    if quadratics.len() == 2 && cubics.is_empty() {
        let ok = quadratics[0].0.min_poly() == quadratics[1].0.min_poly()
            && quadratics[0].1 == quadratics[1].1
            && rest.iter().filter(|(v, _)| v.degree() == 1).count() == 1;
        return if ok {
            Ok(TaxonomyLabel::OneSimpleQuadraticPair)
        } else {
            Err(InconsistentSpectrum(format!(
                "quadratic eigenvalues present but not a matched conjugate pair: {spec}"
            )))
        };
    }
    if cubics.len() == 3 {
        let m = cubics[0].1;
        let ok = cubics.iter().all(|(v, mult)| {
            v.min_poly() == cubics[0].0.min_poly() && *mult == m
        });
        if !ok {
            return Err(InconsistentSpectrum(format!(
                "three cubic eigenvalues must share one minimal polynomial \
                 and one multiplicity: {spec}"
            )));
        }
        if 3 * m + 1 != n {
            return Err(InconsistentSpectrum(format!(
                "cubic triple multiplicity {m} is not (n-1)/3 for n = {n}"
            )));
        }
        let kz = k.as_integer().unwrap();
        if *kz != num_bigint::BigInt::from(m) && *kz != num_bigint::BigInt::from(2 * m) {
            return Err(InconsistentSpectrum(format!(
                "cubic-triple case needs degree k ∈ {{m, 2m}} with m = {m}, got k = {kz}"
            )));
        }
        return Ok(TaxonomyLabel::OneSimpleCubicTriple { m });
    }
    Err(InconsistentSpectrum(format!(
        "eigenvalue degrees do not fit any four-eigenvalue case: {spec}"
    )))
}
