//! Factorization of monic integer polynomials over the rationals.
//!
//! Integer roots are stripped exhaustively, the residual is split by
//! squarefree decomposition, degrees 2 and 3 are certified irreducible
//! directly, and squarefree residuals of degree >= 4 whose roots are all
//! real are split completely by reconstructing candidate factors from
//! refined isolating intervals and verifying by exact division. Residuals
//! with non-real roots stay unsplit and are flagged.

use super::poly::IntPolynomial;
use super::roots;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct Factorization {
    /// (irreducible monic factor, multiplicity); for flagged results the
    /// non-linear part may contain an unresolved factor of degree >= 4.
    pub factors: Vec<(IntPolynomial, u32)>,
    /// True when a degree >= 4 residual could not be certified.
    pub unsplit: bool,
}

impl Factorization {
    /// Re-multiplies all factors with multiplicities.
    pub fn product(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }
}

/// Factor a monic nonzero integer polynomial over Q.
pub fn factor_over_rationals(p: &IntPolynomial) -> Factorization {
    assert!(p.is_monic(), "input must be monic");
    let mut factors: Vec<(IntPolynomial, u32)> = Vec::new();
    let mut unsplit = false;

    let mut rest = p.clone();

    // integer roots, exhaustively with multiplicity
    for r in integer_root_candidates(&rest) {
        let lin = IntPolynomial::linear_root(&r);
        let mut mult = 0u32;
        loop {
            let (q, rem) = rest.div_rem_monic(&lin);
            if rem.is_zero() {
                rest = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            factors.push((lin, mult));
        }
    }

    if rest.degree() >= 1 {
        // squarefree decomposition of the root-free residual
        for (sf, mult) in squarefree_decomposition(&rest) {
            for irr in split_squarefree(&sf, &mut unsplit) {
                push_factor(&mut factors, irr, mult);
            }
        }
    }

    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs().to_vec()).cmp(&(b.0.degree(), b.0.coeffs().to_vec()))
    });
    Factorization { factors, unsplit }
}

fn push_factor(factors: &mut Vec<(IntPolynomial, u32)>, f: IntPolynomial, mult: u32) {
    for (g, m) in factors.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    factors.push((f, mult));
}

/// Integer candidates within the root bound; tested by evaluation, so the
/// list only needs to be a superset of the actual roots.
fn integer_root_candidates(p: &IntPolynomial) -> Vec<BigInt> {
    let b = roots::root_bound(p);
    let mut out = Vec::new();
    let mut r = -&b;
    while r <= b {
        if p.eval(&r).is_zero() {
            out.push(r.clone());
        }
        r += BigInt::one();
    }
    out
}

/// Squarefree decomposition: p = prod s_i^i with s_i squarefree and
/// pairwise coprime. Input monic, returns monic parts.
fn squarefree_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let mut out = Vec::new();
    let mut g = p.gcd(&p.derivative()).monic_from_primitive();
    let mut w = p.div_exact_monic(&g); // product of the distinct irreducible factors
    let mut i = 1u32;
    while g.degree() > 0 {
        let y = w.gcd(&g).monic_from_primitive();
        let level = w.div_exact_monic(&y); // factors of multiplicity exactly i
        if level.degree() > 0 {
            out.push((level, i));
        }
        g = g.div_exact_monic(&y);
        w = y;
        i += 1;
    }
    if w.degree() > 0 {
        out.push((w, i));
    }
    out
}

impl IntPolynomial {
    /// The gcd routine returns a primitive polynomial; for monic inputs the
    /// true gcd over Q is monic, so the primitive form is already monic up
    /// to sign.
    fn monic_from_primitive(&self) -> IntPolynomial {
        let lead = self.leading();
        if lead.is_one() {
            self.clone()
        } else if (-&lead).is_one() {
            self.neg()
        } else {
            // gcd of monic polynomials is monic over Q; a non-±1 leading
            // coefficient can only appear through content, already stripped
            panic!("expected monic gcd, got leading {}", lead)
        }
    }
}

/// Split a squarefree monic polynomial with no rational roots into
/// irreducible monic factors, or flag it unsplit.
fn split_squarefree(sf: &IntPolynomial, unsplit: &mut bool) -> Vec<IntPolynomial> {
    let d = sf.degree();
    match d {
        0 => vec![],
        1 | 2 | 3 => vec![sf.clone()], // no rational roots => irreducible for d <= 3
        _ => {
            let ivs = roots::isolate_real_roots(sf);
            if ivs.len() < d {
                // complex roots present; outside the all-real regime we serve
                *unsplit = true;
                return vec![sf.clone()];
            }
            split_all_real(sf, &ivs)
        }
    }
}

/// Complete factorization for squarefree polynomials with all roots real:
/// every monic factor's roots are a subset of the refined isolated roots,
/// so reconstruct candidates from root subsets and verify by division.
fn split_all_real(p: &IntPolynomial, ivs: &[roots::Interval]) -> Vec<IntPolynomial> {
    let d = p.degree();
    // refine roots far enough that candidate coefficients round correctly
    let bound_bits = roots::root_bound(p).bits();
    let prec = 64 + (d as u64) * (bound_bits + 2);
    let width = BigRational::new(BigInt::one(), BigInt::one() << prec);
    let mids: Vec<BigRational> = ivs
        .iter()
        .map(|iv| {
            let (lo, hi) = roots::refine_interval(p, iv, &width);
            (lo + hi) / BigRational::from_integer(BigInt::from(2))
        })
        .collect();

    for g in 2..=d / 2 {
        let mut subset: Vec<usize> = (0..g).collect();
        loop {
            if let Some(candidate) = candidate_from_roots(&mids, &subset) {
                if p.divisible_by_monic(&candidate) {
                    // minimal degree hit: candidate is irreducible
                    let rest = p.div_exact_monic(&candidate);
                    let rest_ivs: Vec<roots::Interval> = ivs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !subset.contains(i))
                        .map(|(_, iv)| iv.clone())
                        .collect();
                    let mut out = vec![candidate];
                    out.extend(split_rest(&rest, &rest_ivs, g));
                    return out;
                }
            }
            if !next_combination(&mut subset, d) {
                break;
            }
        }
    }
    vec![p.clone()] // no proper factor: irreducible
}

/// Continue splitting the cofactor; factors of degree < min_deg were already
/// ruled out for the whole polynomial, so start the search at min_deg.
fn split_rest(p: &IntPolynomial, ivs: &[roots::Interval], min_deg: usize) -> Vec<IntPolynomial> {
    let d = p.degree();
    if d == 0 {
        return vec![];
    }
    if d < 2 * min_deg {
        return vec![p.clone()];
    }
    // re-run the subset search on the smaller polynomial
    let out = split_all_real(p, ivs);
    out
}

fn candidate_from_roots(mids: &[BigRational], subset: &[usize]) -> Option<IntPolynomial> {
    // product of (x - mid_i), coefficients rounded to nearest integer
    let mut coeffs = vec![BigRational::from_integer(BigInt::one())];
    for &i in subset {
        let r = &mids[i];
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * r;
        }
        coeffs = next;
    }
    let ints: Vec<BigInt> = coeffs.iter().map(round_to_nearest).collect();
    Some(IntPolynomial::new(ints))
}

fn round_to_nearest(x: &BigRational) -> BigInt {
    use num_integer::Integer;
    let two = BigInt::from(2);
    let num = x.numer() * &two + x.denom(); // floor((2x + 1)/2) = nearest
    let den = x.denom() * &two;
    num.div_floor(&den)
}

fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn k4_char_poly_factors() {
        // x^4 - 6x^2 - 8x - 3 = (x-3)(x+1)^3
        let f = p(&[-3, -8, -6, 0, 1]);
        let fac = factor_over_rationals(&f);
        assert!(!fac.unsplit);
        assert_eq!(
            fac.factors,
            vec![(p(&[-3, 1]), 1), (p(&[1, 1]), 3)]
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn irreducible_quadratic_stays() {
        let f = p(&[-1, -1, 1]); // x^2 - x - 1, discriminant 5
        let fac = factor_over_rationals(&f);
        assert_eq!(fac.factors, vec![(f, 1)]);
    }

    #[test]
    fn irreducible_cubic_stays() {
        let f = p(&[-1, -3, 0, 1]);
        let fac = factor_over_rationals(&f);
        assert_eq!(fac.factors, vec![(f, 1)]);
    }

    #[test]
    fn quartic_product_of_two_quadratics() {
        // (x^2-x-1)(x^2+x-1) = x^4 - 3x^2 + 1 (path P4 char poly)
        let f = p(&[1, 0, -3, 0, 1]);
        let fac = factor_over_rationals(&f);
        assert!(!fac.unsplit);
        assert_eq!(
            fac.factors,
            vec![(p(&[-1, -1, 1]), 1), (p(&[-1, 1, 1]), 1)]
        );
    }

    #[test]
    fn repeated_quadratic_factor() {
        // (x^2 - 2)^3 via squarefree decomposition
        let q = p(&[-2, 0, 1]);
        let f = q.pow(3);
        let fac = factor_over_rationals(&f);
        assert_eq!(fac.factors, vec![(q, 3)]);
    }

    #[test]
    fn mixed_heawood_shape() {
        // (x-3)(x+3)(x^2-2)^6: the Heawood characteristic polynomial
        let f = p(&[-3, 1]).mul(&p(&[3, 1])).mul(&p(&[-2, 0, 1]).pow(6));
        let fac = factor_over_rationals(&f);
        assert!(!fac.unsplit);
        assert_eq!(
            fac.factors,
            vec![(p(&[-3, 1]), 1), (p(&[3, 1]), 1), (p(&[-2, 0, 1]), 6)]
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn non_real_quartic_flags_unsplit() {
        // x^4 + 1 has no real roots and no rational factorization we certify
        let f = p(&[1, 0, 0, 0, 1]);
        let fac = factor_over_rationals(&f);
        assert!(fac.unsplit);
    }

    #[test]
    fn irreducible_all_real_quartic() {
        // x^4 - 4x^2 + 1: roots ±sqrt(2±sqrt(3)), irreducible over Q
        let f = p(&[1, 0, -4, 0, 1]);
        let fac = factor_over_rationals(&f);
        assert!(!fac.unsplit);
        assert_eq!(fac.factors, vec![(f, 1)]);
    }
}
