//! Sturm-sequence real root counting, isolation and interval refinement.

use super::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Interval = (BigRational, BigRational);

/// Sturm chain of p: remainders computed over the rationals and rescaled
/// by positive constants only, so the sign pattern is preserved.
pub fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = Vec::new();
    let a = p.primitive();
    if a.is_zero() {
        return chain;
    }
    chain.push(a.clone());
    let d = a.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_keep_sign());
    loop {
        let k = chain.len();
        let r = signed_rem(&chain[k - 2], &chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
        if chain.last().unwrap().degree() == 0 {
            break;
        }
    }
    chain
}

/// Remainder of a by b over Q, scaled to an integer polynomial by a
/// positive rational (sign-faithful).
fn signed_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree();
    let lb = b.leading();
    let mut r: Vec<BigRational> = a
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let lbr = BigRational::from_integer(lb);
    while r.len() > db {
        let lead = r.last().unwrap().clone();
        r.pop();
        if lead.is_zero() {
            continue;
        }
        let f = lead / lbr.clone();
        let top = r.len(); // degree of the removed term minus... offset for b
        for j in 0..db {
            let t = &f * BigRational::from_integer(b.coeff(j));
            r[top - db + j] -= t;
        }
    }
    while r.last().map_or(false, |c| c.is_zero()) {
        r.pop();
    }
    if r.is_empty() {
        return IntPolynomial::zero();
    }
    // clear denominators with a positive multiplier, then strip content
    let mut denom_lcm = BigInt::one();
    for c in &r {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = r
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    IntPolynomial::new(ints).primitive_keep_sign()
}

impl IntPolynomial {
    /// Primitive part scaled by a positive constant (keeps the sign of the
    /// leading coefficient).
    pub fn primitive_keep_sign(&self) -> IntPolynomial {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.content();
        IntPolynomial::new(self.coeffs().iter().map(|c| c / &g).collect())
    }
}

/// Number of sign changes in the chain evaluated at x (zeros dropped).
pub fn sign_changes_at(chain: &[IntPolynomial], x: &BigRational) -> usize {
    let mut changes = 0;
    let mut last = 0;
    for q in chain {
        let s = q.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Count of distinct real roots in the half-open interval (lo, hi].
pub fn count_roots_in(chain: &[IntPolynomial], lo: &BigRational, hi: &BigRational) -> usize {
    sign_changes_at(chain, lo) - sign_changes_at(chain, hi)
}

/// An integer B with every real root of p in (-B, B]. Power-of-two
/// Fujiwara-style bound from coefficient bit lengths.
pub fn root_bound(p: &IntPolynomial) -> BigInt {
    let n = p.degree();
    if n == 0 {
        return BigInt::one();
    }
    let lead_bits = p.leading().abs().bits();
    let mut max_exp: u64 = 0;
    for i in 1..=n {
        let c = p.coeff(n - i).abs();
        if c.is_zero() {
            continue;
        }
        let bits = c.bits().saturating_sub(lead_bits) + 1;
        let e = (bits + i as u64 - 1) / i as u64;
        max_exp = max_exp.max(e);
    }
    BigInt::from(2) << max_exp
}

/// Isolating intervals for all real roots of a squarefree polynomial,
/// ordered ascending. A root that lands exactly on a subdivision endpoint
/// comes back as a degenerate [r, r] interval; every other interval
/// (lo, hi) has p nonzero at both ends, so bisection refinement works.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<Interval> {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return vec![];
    }
    let chain = sturm_chain(p);
    let b = root_bound(p);
    let lo = BigRational::from_integer(-&b - BigInt::one());
    let hi = BigRational::from_integer(b);
    let mut out = Vec::new();
    subdivide(p, &chain, lo, hi, &mut out);
    out
}

fn subdivide(
    p: &IntPolynomial,
    chain: &[IntPolynomial],
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<Interval>,
) {
    let count = count_roots_in(chain, &lo, &hi);
    if count == 0 {
        return;
    }
    if count == 1 {
        if p.sign_at(&hi) == 0 {
            out.push((hi.clone(), hi));
            return;
        }
        // make the left endpoint sign-definite so bisection refinement works
        let mut lo = lo;
        if p.sign_at(&lo) == 0 {
            let mut step = (&hi - &lo) / BigRational::from_integer(BigInt::from(4));
            loop {
                let cand = &lo + &step;
                if count_roots_in(chain, &cand, &hi) == 1 && p.sign_at(&cand) != 0 {
                    lo = cand;
                    break;
                }
                step /= BigRational::from_integer(BigInt::from(2));
            }
        }
        out.push((lo, hi));
        return;
    }
    let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
    subdivide(p, chain, lo, mid.clone(), out);
    subdivide(p, chain, mid, hi, out);
}

/// Shrink an isolating interval until hi - lo < width. The root stays
/// strictly inside unless the interval is (or becomes) degenerate.
pub fn refine_interval(p: &IntPolynomial, iv: &Interval, width: &BigRational) -> Interval {
    let (mut lo, mut hi) = iv.clone();
    if lo == hi {
        return (lo, hi);
    }
    let mut slo = p.sign_at(&lo);
    debug_assert!(slo != 0 && p.sign_at(&hi) != 0);
    while &hi - &lo >= *width {
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        let sm = p.sign_at(&mid);
        if sm == 0 {
            return (mid.clone(), mid);
        }
        if sm == slo {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn sqrt2_isolation() {
        let f = p(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&f);
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].1 <= ivs[1].0, "intervals must be disjoint and ordered");
        // refined intervals pin the roots near -1.414 and 1.414
        let w = BigRational::new(BigInt::one(), BigInt::from(100));
        let (lo0, hi0) = refine_interval(&f, &ivs[0], &w);
        let (lo1, hi1) = refine_interval(&f, &ivs[1], &w);
        assert!(lo0 > BigRational::new(BigInt::from(-15), BigInt::from(10)));
        assert!(hi0 < BigRational::new(BigInt::from(-14), BigInt::from(10)));
        assert!(lo1 > BigRational::new(BigInt::from(14), BigInt::from(10)));
        assert!(hi1 < BigRational::new(BigInt::from(15), BigInt::from(10)));
    }

    #[test]
    fn linear_rational_root() {
        let f = p(&[-5, 1]);
        let ivs = isolate_real_roots(&f);
        assert_eq!(ivs.len(), 1);
        let w = BigRational::new(BigInt::one(), BigInt::from(100));
        let (lo, hi) = refine_interval(&f, &ivs[0], &w);
        assert!(lo <= rat(5) && rat(5) <= hi);
    }

    #[test]
    fn cubic_three_roots() {
        // x^3 - 3x - 1: roots near -1.53, -0.35, 1.88
        let f = p(&[-1, -3, 0, 1]);
        let ivs = isolate_real_roots(&f);
        assert_eq!(ivs.len(), 3);
        let narrow: Vec<_> = ivs
            .iter()
            .map(|iv| refine_interval(&f, iv, &BigRational::new(BigInt::one(), BigInt::from(1000))))
            .collect();
        let approx: Vec<f64> = narrow
            .iter()
            .map(|(lo, hi)| {
                let m = (lo + hi) / rat(2);
                m.numer().to_string().parse::<f64>().unwrap()
                    / m.denom().to_string().parse::<f64>().unwrap()
            })
            .collect();
        assert!((approx[0] + 1.532).abs() < 0.01);
        assert!((approx[1] + 0.347).abs() < 0.01);
        assert!((approx[2] - 1.879).abs() < 0.01);
    }

    #[test]
    fn degenerate_then_irrational_neighbor() {
        // (x - 1) boundary interactions: x^3 - x = x(x-1)(x+1), squarefree
        let f = p(&[0, -1, 0, 1]);
        let ivs = isolate_real_roots(&f);
        assert_eq!(ivs.len(), 3);
        for (lo, hi) in &ivs {
            if lo == hi {
                assert_eq!(f.sign_at(lo), 0);
            } else {
                assert_ne!(f.sign_at(lo), 0);
                assert_ne!(f.sign_at(hi), 0);
            }
        }
    }

    #[test]
    fn sturm_counts_all_roots() {
        let f = p(&[-1, -3, 0, 1]);
        let chain = sturm_chain(&f);
        assert_eq!(count_roots_in(&chain, &rat(-10), &rat(10)), 3);
        assert_eq!(count_roots_in(&chain, &rat(0), &rat(10)), 1);
    }
}
