//! Lossless, machine-readable analysis reports: everything the toolkit
//! can say about one graph, with eigenvalues as tagged exact forms.

use crate::algebra::AlgebraicNumber;
use crate::family::class_membership_with_spectrum;
use crate::graph::{graph6_encode, FamilyDescriptor, Graph};
use crate::spectral::{
    classify_four, divisibility_check, is_walk_regular, regular_halves_partition, spectrum,
    Spectrum, TaxonomyLabel,
};
use serde::{Deserialize, Serialize};

/// Exact eigenvalue serialization. The `approx` field is a display
/// annotation rounded to six decimal places; it is never parsed back.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EigenvalueRepr {
    Integer {
        value: String,
        approx: f64,
    },
    /// (a + √b)/2 when `plus`, (a − √b)/2 otherwise.
    Quadratic {
        a: String,
        b: String,
        plus: bool,
        approx: f64,
    },
    /// Root of the monic minimal polynomial (coefficients lowest-first)
    /// isolated by the open rational interval.
    PolynomialRoot {
        min_poly: Vec<String>,
        interval: [String; 2],
        approx: f64,
    },
}

impl EigenvalueRepr {
    pub fn from_algebraic(x: &AlgebraicNumber) -> EigenvalueRepr {
        let approx = (x.approx_f64() * 1e6).round() / 1e6;
        match x {
            AlgebraicNumber::Integer(z) => EigenvalueRepr::Integer {
                value: z.to_string(),
                approx,
            },
            AlgebraicNumber::Quadratic { a, b, plus } => EigenvalueRepr::Quadratic {
                a: a.to_string(),
                b: b.to_string(),
                plus: *plus,
                approx,
            },
            AlgebraicNumber::Root { poly, lo, hi } => EigenvalueRepr::PolynomialRoot {
                min_poly: poly.coeffs().iter().map(|c| c.to_string()).collect(),
                interval: [lo.to_string(), hi.to_string()],
                approx,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntryRepr {
    pub value: EigenvalueRepr,
    pub multiplicity: usize,
}

/// A regular partition into halves attached to one simple integral
/// eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRepr {
    pub eigenvalue: String,
    pub halves: (Vec<usize>, Vec<usize>),
    pub internal_degree: usize,
    pub external_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityRepr {
    pub eigenvalue: String,
    pub p: String,
    pub q: String,
    pub sum_ok: bool,
    pub diff_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipRepr {
    pub g42: bool,
    pub g42_minus_one: bool,
    pub g42_zero: bool,
    pub g4_ge_minus_one: bool,
}

/// Everything the toolkit determines about one graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph6: String,
    pub order: usize,
    pub degree: Option<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub spectrum: Vec<SpectrumEntryRepr>,
    pub distinct_eigenvalues: usize,
    pub taxonomy: Option<TaxonomyLabel>,
    pub walk_regular: Option<bool>,
    pub partitions: Vec<PartitionRepr>,
    pub divisibility: Vec<DivisibilityRepr>,
    pub membership: MembershipRepr,
    pub recognized_family: Option<FamilyDescriptor>,
}

/// Full analysis of one graph.
pub fn analyze(g: &Graph) -> AnalysisReport {
    let s = spectrum(g).expect("adjacency spectra split over the reals");
    let regular = g.regular_degree();
    let membership = class_membership_with_spectrum(g, &s);

    // partitions and divisibility at every simple integral non-degree
    // eigenvalue
    let mut partitions = Vec::new();
    let mut divisibility = Vec::new();
    if regular.is_some() {
        for (value, mult) in s.entries().iter().skip(1) {
            if *mult != 1 {
                continue;
            }
            let Some(z) = value.as_integer() else { continue };
            if let Ok(p) = regular_halves_partition(g, z) {
                partitions.push(PartitionRepr {
                    eigenvalue: z.to_string(),
                    halves: p.halves,
                    internal_degree: p.internal_degree,
                    external_degree: p.external_degree,
                });
            }
            if let Ok(d) = divisibility_check(&s, z) {
                divisibility.push(DivisibilityRepr {
                    eigenvalue: z.to_string(),
                    p: d.p.to_string(),
                    q: d.q.to_string(),
                    sum_ok: d.sum_ok,
                    diff_ok: d.diff_ok,
                });
            }
        }
    }

    AnalysisReport {
        graph6: graph6_encode(g),
        order: g.n(),
        degree: regular,
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        spectrum: s
            .entries()
            .iter()
            .map(|(v, m)| SpectrumEntryRepr {
                value: EigenvalueRepr::from_algebraic(v),
                multiplicity: *m,
            })
            .collect(),
        distinct_eigenvalues: s.distinct_count(),
        taxonomy: if regular.is_some() && g.is_connected() {
            classify_four(&s).ok()
        } else {
            None
        },
        walk_regular: regular.map(|_| is_walk_regular(g)),
        partitions,
        divisibility,
        membership: MembershipRepr {
            g42: membership.g42,
            g42_minus_one: membership.g42_minus_one,
            g42_zero: membership.g42_zero,
            g4_ge_minus_one: membership.g4_ge_minus_one,
        },
        recognized_family: membership.recognized,
    }
}

/// The exact spectrum behind a report, reconstructed for callers that
/// need it alongside the serialized form.
pub fn report_spectrum(g: &Graph) -> Spectrum {
    spectrum(g).expect("adjacency spectra split over the reals")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct;

    #[test]
    fn k4_report() {
        let g = construct(&FamilyDescriptor::CompleteK(4)).unwrap();
        let r = analyze(&g);
        assert_eq!(r.graph6, "C~");
        assert_eq!(r.degree, Some(3));
        assert_eq!(r.distinct_eigenvalues, 2);
        assert_eq!(r.taxonomy, Some(TaxonomyLabel::NotFourEigenvalue));
    }

    #[test]
    fn kss_expand_report() {
        let g = construct(&FamilyDescriptor::KssExpand(2, 2)).unwrap();
        let r = analyze(&g);
        assert_eq!(r.taxonomy, Some(TaxonomyLabel::TwoSimpleIntegral));
        assert_eq!(r.recognized_family, Some(FamilyDescriptor::KssExpand(2, 2)));
        assert!(r.membership.g42_minus_one);
        assert_eq!(r.walk_regular, Some(true));
        // the simple eigenvalue −3 yields a partition and witnesses
        assert_eq!(r.partitions.len(), 1);
        assert_eq!(r.partitions[0].eigenvalue, "-3");
        assert_eq!(r.divisibility.len(), 1);
        assert!(r.divisibility[0].sum_ok && r.divisibility[0].diff_ok);
    }

    #[test]
    fn json_round_trip() {
        let g = construct(&FamilyDescriptor::CycleC(5)).unwrap();
        let r = analyze(&g);
        let json = serde_json::to_string(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
