//! Necessary-condition pipeline for putative four-eigenvalue spectra of
//! connected regular graphs.

use crate::spectral::Spectrum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

/// A candidate spectrum {[k]¹, [λ2]¹, [λ3]^m3, [λ4]^m4} that need not
/// come from a graph: the degree k, a designated simple eigenvalue λ2,
/// and the two non-simple eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PutativeSpectrum {
    pub n: usize,
    pub k: i64,
    pub lambda2: i64,
    pub lambda3: i64,
    pub m3: usize,
    pub lambda4: i64,
    pub m4: usize,
}

impl PutativeSpectrum {
    pub fn new(n: usize, k: i64, lambda2: i64, pair3: (i64, usize), pair4: (i64, usize)) -> Self {
        PutativeSpectrum {
            n,
            k,
            lambda2,
            lambda3: pair3.0,
            m3: pair3.1,
            lambda4: pair4.0,
            m4: pair4.1,
        }
    }

    /// Read the shape off an integral spectrum with four distinct values
    /// of which exactly two are simple.
    pub fn from_spectrum(s: &Spectrum) -> Option<PutativeSpectrum> {
        let ints = s.as_int_pairs()?;
        if ints.len() != 4 || s.simple_count() != 2 || ints[0].1 != 1 {
            return None;
        }
        let k = i64::try_from(&ints[0].0).ok()?;
        let simple: Vec<i64> = ints[1..]
            .iter()
            .filter(|(_, m)| *m == 1)
            .map(|(z, _)| i64::try_from(z).unwrap())
            .collect();
        let non_simple: Vec<(i64, usize)> = ints[1..]
            .iter()
            .filter(|(_, m)| *m > 1)
            .map(|(z, m)| (i64::try_from(z).unwrap(), *m))
            .collect();
        if simple.len() != 1 || non_simple.len() != 2 {
            return None;
        }
        Some(PutativeSpectrum::new(
            s.n(),
            k,
            simple[0],
            non_simple[0],
            non_simple[1],
        ))
    }

    pub fn to_spectrum(&self) -> Spectrum {
        Spectrum::from_int_pairs(&[
            (self.k, 1),
            (self.lambda2, 1),
            (self.lambda3, self.m3),
            (self.lambda4, self.m4),
        ])
    }
}

/// One evaluated condition: name, verdict, and the values that decided
/// it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub passed: bool,
    pub witness: String,
}

/// Quantities the pipeline can derive in closed form for the two shapes
/// the theory singles out: (β, m) when −1 is a non-simple eigenvalue,
/// and c = −2(1+λ3)(1+λ4)/n when the simple λ2 is −1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DerivedQuantities {
    pub beta: Option<BigRational>,
    pub m: Option<BigRational>,
    pub c: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    /// All conditions in evaluation order.
    pub conditions: Vec<Condition>,
    pub feasible: bool,
    /// Name of the first failing condition.
    pub first_failure: Option<&'static str>,
    pub derived: DerivedQuantities,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeriveError {
    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(&'static str),
}

/// β and m for the spectrum shape {[k]¹, [α]¹, [β]^{n−2−m}, [−1]^m},
/// eliminated from the two trace identities:
/// β = (kn−k²−k−α²−α)/(n−k−α−2) and
/// m = n−1 + (n−k−1)(n−2α−2)/(k²+(2−n)k+α²+2α−n+2).
pub fn derive_beta_m(n: i64, k: i64, alpha: i64) -> Result<(BigRational, BigRational), DeriveError> {
    let d1 = n - k - alpha - 2;
    if d1 == 0 {
        return Err(DeriveError::DegenerateDenominator("n - k - α - 2 = 0"));
    }
    let d2 = k * k + (2 - n) * k + alpha * alpha + 2 * alpha - n + 2;
    if d2 == 0 {
        return Err(DeriveError::DegenerateDenominator(
            "k² + (2−n)k + α² + 2α − n + 2 = 0",
        ));
    }
    let beta = BigRational::new(
        BigInt::from(k * n - k * k - k - alpha * alpha - alpha),
        BigInt::from(d1),
    );
    let m = BigRational::from_integer(BigInt::from(n - 1))
        + BigRational::new(BigInt::from((n - k - 1) * (n - 2 * alpha - 2)), BigInt::from(d2));
    Ok((beta, m))
}

/// Run all necessary conditions in order and report them. Conditions are
/// necessary only, so every spectrum realized by an actual connected
/// regular graph passes; a failure certifies non-existence.
pub fn feasibility_pipeline(ps: &PutativeSpectrum) -> FeasibilityReport {
    let mut conditions = Vec::new();
    let n = ps.n as i64;
    let (k, l2, l3, l4) = (ps.k, ps.lambda2, ps.lambda3, ps.lambda4);
    let (m3, m4) = (ps.m3 as i64, ps.m4 as i64);

    // 1. multiplicities: positive, in the lemma range, values distinct
    {
        let distinct = {
            let mut v = [k, l2, l3, l4];
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        };
        let ok = 2 + m3 + m4 == n && m3 >= 2 && m4 >= 2 && distinct;
        conditions.push(Condition {
            name: "multiplicity-range",
            passed: ok,
            witness: format!("n = {n}, m3 = {m3}, m4 = {m4}"),
        });
    }

    // 2-3. trace identities
    let trace = k + l2 + m3 * l3 + m4 * l4;
    conditions.push(Condition {
        name: "trace",
        passed: trace == 0,
        witness: format!("Σ mλ = {trace}"),
    });
    let trace2 = k * k + l2 * l2 + m3 * l3 * l3 + m4 * l4 * l4;
    conditions.push(Condition {
        name: "trace-of-squares",
        passed: trace2 == k * n,
        witness: format!("Σ mλ² = {trace2}, kn = {}", k * n),
    });

    // 4. even order with integral partition degrees (k±λ2)/2
    {
        let ok = n % 2 == 0
            && (k + l2) % 2 == 0
            && (k - l2) % 2 == 0
            && (k + l2) >= 0
            && (k + l2) / 2 <= n / 2 - 1
            && (k - l2) / 2 <= n / 2;
        conditions.push(Condition {
            name: "partition-degrees",
            passed: ok,
            witness: format!("(k+λ2)/2 = {}/2, (k−λ2)/2 = {}/2", k + l2, k - l2),
        });
    }

    // 5. n divides P+Q and P−Q
    let p = (k - l3) * (k - l4);
    let q = (l2 - l3) * (l2 - l4);
    conditions.push(Condition {
        name: "divisibility",
        passed: (p + q) % n == 0 && (p - q) % n == 0,
        witness: format!("P = {p}, Q = {q}, n = {n}"),
    });

    // 6. common-neighbor counts: integral, non-negative where pairs of
    // the corresponding kind exist, and ≤ k−1 when adjacent
    {
        let internal = (k + l2) / 2; // checked integral in condition 4
        let external = (k - l2) / 2;
        let half = n / 2;
        let cases = [
            ("same-adjacent", l3 + l4, p + q, internal > 0, true),
            ("same-nonadjacent", 0, p + q, half - 1 > internal, false),
            ("cross-adjacent", l3 + l4, p - q, external > 0, true),
            ("cross-nonadjacent", 0, p - q, external < half, false),
        ];
        let mut ok = true;
        let mut witness = String::new();
        for (label, shift, numer, applies, adjacent) in cases {
            if !applies {
                continue;
            }
            let integral = numer % n == 0;
            let value = shift + numer / n;
            let bounded = integral && value >= 0 && (!adjacent || value <= k - 1);
            if !(integral && bounded) {
                ok = false;
            }
            witness.push_str(&format!("{label}: {shift}+{numer}/{n}; "));
        }
        conditions.push(Condition {
            name: "common-neighbors",
            passed: ok,
            witness,
        });
    }

    // 7. sign exclusions when λ3λ4 ≥ 0: a least eigenvalue ≥ −1 forces a
    // complete graph, and no positive non-degree eigenvalue forces a
    // regular complete multipartite graph — both have < 4 distinct
    // eigenvalues
    {
        let least = l2.min(l3).min(l4);
        let positives = [l2, l3, l4].iter().filter(|&&x| x > 0).count();
        let ok = if l3 * l4 >= 0 {
            least < -1 && positives >= 1
        } else {
            true
        };
        conditions.push(Condition {
            name: "sign-exclusions",
            passed: ok,
            witness: format!("least = {least}, positive non-degree values = {positives}"),
        });
    }

    let first_failure = conditions.iter().find(|c| !c.passed).map(|c| c.name);
    let mut derived = DerivedQuantities::default();
    if l3 == -1 || l4 == -1 {
        if let Ok((beta, m)) = derive_beta_m(n, k, l2) {
            derived.beta = Some(beta);
            derived.m = Some(m);
        }
    }
    if l2 == -1 {
        let c = BigRational::new(BigInt::from(-2 * (1 + l3) * (1 + l4)), BigInt::from(n));
        derived.c = Some(c);
    }
    FeasibilityReport {
        feasible: first_failure.is_none(),
        first_failure,
        conditions,
        derived,
    }
}

/// True when the derived quantity is a positive integer.
pub fn is_positive_integer(x: &BigRational) -> bool {
    x.denom().is_one() && x.numer().is_positive()
}

/// True when the rational is an integer.
pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}
