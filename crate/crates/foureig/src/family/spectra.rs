//! Closed-form spectra of the constructive families.

use crate::algebra::AlgebraicNumber;
use crate::graph::{construct, FamilyDescriptor, ParameterOutOfRange};
use crate::spectral::{spectrum, Spectrum};
use num_bigint::BigInt;

/// Exact spectrum of the named family, by closed form where one exists.
///
/// Closed forms (entries of multiplicity zero dropped, equal values
/// merged):
///
/// * `CompleteK(n)`: {[n−1]¹, [−1]^{n−1}}
/// * `CompleteBipartite(m, n)`: {[±√(mn)]¹, [0]^{m+n−2}}
/// * `Crown(s)`: the `CrownExpand` form at t = 1
/// * `KssExpand(s, t)`: {[st+t−1]¹, [−st+t−1]¹, [t−1]^{2s−2}, [−1]^{2s(t−1)}}
/// * `CrownExpand(s, t)`: {[st−1]¹, [−st+2t−1]¹, [2t−1]^{s−1}, [−1]^{2st−s−1}}
/// * `ComplementCrownExpand(s, t)`: {[st]¹, [st−2t]¹, [−2t]^{s−1}, [0]^{2st−s−1}}
/// * `IncidenceGraph` of a symmetric design with block size k and pair
///   count λ: {[k]¹, [±√(k−λ)]^{v−1}, [−k]¹}
///
/// The remaining families (cycles, general multipartite, A/B shapes,
/// non-design incidence structures) have no integer closed form and are
/// computed exactly from the constructed graph.
pub fn family_spectrum(desc: &FamilyDescriptor) -> Result<Spectrum, ParameterOutOfRange> {
    use FamilyDescriptor::*;
    // validate ranges through the constructor even on closed-form paths
    let g = construct(desc)?;
    let entries: Vec<(i64, i64)> = match desc {
        CompleteK(n) => {
            let n = *n as i64;
            vec![(n - 1, 1), (-1, n - 1)]
        }
        CompleteBipartite(m, n) => {
            let (m, n) = (*m as i64, *n as i64);
            let prod = BigInt::from(m * n);
            let mut e = vec![
                (AlgebraicNumber::sqrt(&prod, true), 1),
                (AlgebraicNumber::sqrt(&prod, false), 1),
            ];
            if m + n > 2 {
                e.push((AlgebraicNumber::integer(0), (m + n - 2) as usize));
            }
            return Ok(Spectrum::from_entries(e));
        }
        Crown(s) => {
            // the CrownExpand closed form at t = 1, valid down to s = 2
            let s = *s as i64;
            vec![(s - 1, 1), (-s + 1, 1), (1, s - 1), (-1, s - 1)]
        }
        KssExpand(s, t) => {
            let (s, t) = (*s as i64, *t as i64);
            vec![
                (s * t + t - 1, 1),
                (-s * t + t - 1, 1),
                (t - 1, 2 * s - 2),
                (-1, 2 * s * (t - 1)),
            ]
        }
        CrownExpand(s, t) => {
            let (s, t) = (*s as i64, *t as i64);
            vec![
                (s * t - 1, 1),
                (-s * t + 2 * t - 1, 1),
                (2 * t - 1, s - 1),
                (-1, 2 * s * t - s - 1),
            ]
        }
        ComplementCrownExpand(s, t) => {
            let (s, t) = (*s as i64, *t as i64);
            vec![
                (s * t, 1),
                (s * t - 2 * t, 1),
                (-2 * t, s - 1),
                (0, 2 * s * t - s - 1),
            ]
        }
        IncidenceGraph(rows) => match symmetric_design_shape(rows) {
            Some((v, k, lambda)) => {
                let d = BigInt::from(k as i64 - lambda as i64);
                return Ok(Spectrum::from_entries(vec![
                    (AlgebraicNumber::integer(k as i64), 1),
                    (AlgebraicNumber::sqrt(&d, true), v - 1),
                    (AlgebraicNumber::sqrt(&d, false), v - 1),
                    (AlgebraicNumber::integer(-(k as i64)), 1),
                ]));
            }
            None => return Ok(spectrum(&g).expect("adjacency spectra split over the reals")),
        },
        CycleC(_) | CompleteMultipartite(_) | AGraph(..) | BGraph(..) => {
            return Ok(spectrum(&g).expect("adjacency spectra split over the reals"))
        }
    };
    Ok(Spectrum::from_entries(
        entries
            .into_iter()
            .filter(|&(_, m)| m > 0)
            .map(|(v, m)| (AlgebraicNumber::integer(v), m as usize))
            .collect(),
    ))
}

/// (v, k, λ) when the matrix is the incidence matrix of a symmetric
/// 2-design: square, constant line sums k, and every pair of distinct
/// points on exactly λ common blocks.
fn symmetric_design_shape(rows: &[Vec<bool>]) -> Option<(usize, usize, usize)> {
    let v = rows.len();
    if rows.iter().any(|r| r.len() != v) {
        return None;
    }
    let k = rows[0].iter().filter(|&&x| x).count();
    if rows.iter().any(|r| r.iter().filter(|&&x| x).count() != k) {
        return None;
    }
    for j in 0..v {
        if (0..v).filter(|&i| rows[i][j]).count() != k {
            return None;
        }
    }
    let mut lambda = None;
    for i in 0..v {
        for j in i + 1..v {
            let common = (0..v).filter(|&c| rows[i][c] && rows[j][c]).count();
            match lambda {
                None => lambda = Some(common),
                Some(l) if l != common => return None,
                _ => {}
            }
        }
    }
    let lambda = lambda?;
    if lambda >= k {
        return None; // degenerate: repeated blocks, not a 2-design shape
    }
    Some((v, k, lambda))
}
