//! Walk-regularity, regular partitions into halves, the common-neighbor
//! identity, and the minimal-polynomial annihilation check.

use crate::algebra::{char_poly, factor_over_rationals, rational_kernel_basis, IntMatrix, KernelError};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

/// A partition of the vertices into equal halves in which every vertex
/// has the same number of neighbors inside its half and across.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularPartition {
    pub halves: (Vec<usize>, Vec<usize>),
    /// Neighbors inside the own half: (k + λ_j)/2.
    pub internal_degree: usize,
    /// Neighbors in the other half: (k − λ_j)/2.
    pub external_degree: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("graph has odd order, no partition into halves exists")]
    OddOrder,
    #[error("graph is not regular")]
    NotRegular,
    #[error("{0} is not an eigenvalue")]
    NotAnEigenvalue(BigInt),
    #[error("{0} is not a simple eigenvalue distinct from the degree")]
    NotSimple(BigInt),
    #[error("eigenvector does not scale to a balanced ±1 vector")]
    NotPlusMinusOne,
}

/// True iff diag(A^r) is constant for every r in 2..=n−1; powers beyond
/// n−1 are linear combinations of lower ones by Cayley–Hamilton.
pub fn is_walk_regular(g: &Graph) -> bool {
    let n = g.n();
    let a = g.adjacency_matrix();
    let mut power = a.clone();
    for _ in 2..n {
        power = power.mul(&a);
        let diag = power.diagonal();
        if diag.iter().any(|d| *d != diag[0]) {
            return false;
        }
    }
    true
}

/// True iff ∏(A − λI) over the distinct eigenvalues vanishes, evaluated
/// through the radical of the characteristic polynomial so no irrational
/// arithmetic is needed.
pub fn annihilation_check(g: &Graph) -> bool {
    let a = g.adjacency_matrix();
    let cp = char_poly(&a);
    let fac = factor_over_rationals(&cp);
    let mut radical = crate::algebra::IntPolynomial::one();
    for (f, _) in &fac.factors {
        radical = radical.mul(f);
    }
    eval_poly_at_matrix(&radical, &a).is_zero()
}

/// p(M) by Horner's rule over integer matrices.
pub fn eval_poly_at_matrix(p: &crate::algebra::IntPolynomial, m: &IntMatrix) -> IntMatrix {
    let n = m.dim();
    let mut acc = IntMatrix::zero(n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m);
        for i in 0..n {
            acc[(i, i)] += c;
        }
    }
    acc
}

/// The regular partition into halves generated by a simple integral
/// eigenvalue λ_j ≠ k of a connected regular graph: the λ_j-eigenvector
/// scales to a balanced ±1 vector, and its sign classes are the halves.
pub fn regular_halves_partition(
    g: &Graph,
    lambda_j: &BigInt,
) -> Result<RegularPartition, PartitionError> {
    let n = g.n();
    if n % 2 != 0 {
        return Err(PartitionError::OddOrder);
    }
    let k = g.regular_degree().ok_or(PartitionError::NotRegular)?;
    if *lambda_j == BigInt::from(k) {
        return Err(PartitionError::NotSimple(lambda_j.clone()));
    }
    let a = g.adjacency_matrix();
    let basis = rational_kernel_basis(&a, lambda_j).map_err(|e| match e {
        KernelError::NotAnEigenvalue(z) => PartitionError::NotAnEigenvalue(z),
    })?;
    if basis.len() != 1 {
        return Err(PartitionError::NotSimple(lambda_j.clone()));
    }
    let v = &basis[0];
    if v.iter().any(|x| !x.abs().is_one()) {
        return Err(PartitionError::NotPlusMinusOne);
    }
    let plus: Vec<usize> = (0..n).filter(|&i| v[i].is_positive()).collect();
    let minus: Vec<usize> = (0..n).filter(|&i| v[i].is_negative()).collect();
    if plus.len() != minus.len() {
        return Err(PartitionError::NotPlusMinusOne);
    }
    let internal = g.neighbors(plus[0]).filter(|u| plus.contains(u)).count();
    let part = RegularPartition {
        halves: (plus, minus),
        internal_degree: internal,
        external_degree: k - internal,
    };
    // the ±1 eigenvector equation forces these degrees at every vertex
    debug_assert!(verify_partition_degrees(g, &part));
    Ok(part)
}

fn verify_partition_degrees(g: &Graph, part: &RegularPartition) -> bool {
    let mut in_first = vec![false; g.n()];
    for &v in &part.halves.0 {
        in_first[v] = true;
    }
    for half in [&part.halves.0, &part.halves.1] {
        let own = half == &part.halves.0;
        for &v in half {
            let internal = g.neighbors(v).filter(|&u| in_first[u] == own).count();
            if internal != part.internal_degree {
                return false;
            }
        }
    }
    true
}

/// Pair report of the common-neighbor identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonNeighborReport {
    pub ok: bool,
    /// First violating pair with (expected, actual), if any.
    pub violation: Option<(usize, usize, BigRational, usize)>,
}

/// Verify that every vertex pair realizes the four-case common-neighbor
/// count implied by the spectrum {[k]¹, [λ2]¹, [λ3]^m, [λ4]^{n−2−m}} and
/// the partition generated by λ2: |N(u) ∩ N(v)| equals
/// λ3+λ4·[u∼v] + ((k−λ3)(k−λ4) ± (λ2−λ3)(λ2−λ4))/n, the sign depending
/// on whether u, v lie in the same half.
pub fn common_neighbor_check(
    g: &Graph,
    part: &RegularPartition,
    spec: &crate::spectral::Spectrum,
) -> CommonNeighborReport {
    let entries = spec.entries();
    assert_eq!(entries.len(), 4, "spectrum must have four distinct eigenvalues");
    let ints = spec
        .as_int_pairs()
        .expect("common-neighbor check requires an integral spectrum");
    let n = BigInt::from(spec.n());
    let k = &ints[0].0;
    // λ2 is the simple non-degree eigenvalue; λ3, λ4 the non-simple pair
    let simple: Vec<&BigInt> = ints[1..].iter().filter(|(_, m)| *m == 1).map(|(z, _)| z).collect();
    let non_simple: Vec<&BigInt> = ints[1..].iter().filter(|(_, m)| *m > 1).map(|(z, _)| z).collect();
    assert_eq!(simple.len(), 1, "exactly one simple non-degree eigenvalue expected");
    assert_eq!(non_simple.len(), 2);
    let (l2, l3, l4) = (simple[0], non_simple[0], non_simple[1]);

    let p = (k - l3) * (k - l4);
    let q = (l2 - l3) * (l2 - l4);
    let same_base = BigRational::new(&p + &q, n.clone());
    let cross_base = BigRational::new(&p - &q, n);
    let adj_shift = BigRational::from_integer(l3 + l4);

    let mut in_first = vec![false; g.n()];
    for &v in &part.halves.0 {
        in_first[v] = true;
    }
    let a = g.adjacency_matrix();
    let a2 = a.mul(&a);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let base = if in_first[u] == in_first[v] {
                &same_base
            } else {
                &cross_base
            };
            let expected = if g.has_edge(u, v) {
                base + &adj_shift
            } else {
                base.clone()
            };
            let actual = a2[(u, v)].clone();
            if BigRational::from_integer(actual.clone()) != expected {
                return CommonNeighborReport {
                    ok: false,
                    violation: Some((
                        u,
                        v,
                        expected,
                        actual.try_into().unwrap_or(usize::MAX),
                    )),
                };
            }
        }
    }
    CommonNeighborReport {
        ok: true,
        violation: None,
    }
}
