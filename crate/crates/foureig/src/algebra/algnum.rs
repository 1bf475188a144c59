//! Exact real algebraic numbers in one of three canonical shapes:
//! integers, quadratic irrationals (a ± √b)/2, and isolated roots of
//! irreducible monic polynomials of degree at least three.
//!
//! Canonicality matters: two values are equal exactly when they have the
//! same minimal polynomial and the same root position, which keeps
//! comparison terminating.

use super::poly::IntPolynomial;
use super::roots::{self, Interval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug)]
pub enum AlgebraicNumber {
    /// An integer eigenvalue.
    Integer(BigInt),
    /// (a + sign·√b)/2 with b > 0 not a perfect square and a² ≡ b (mod 4).
    Quadratic { a: BigInt, b: BigInt, plus: bool },
    /// The unique root of `poly` (irreducible monic, degree ≥ 3) inside
    /// the open interval (lo, hi).
    Root {
        poly: IntPolynomial,
        lo: BigRational,
        hi: BigRational,
    },
}

impl AlgebraicNumber {
    pub fn integer<T: Into<BigInt>>(z: T) -> Self {
        AlgebraicNumber::Integer(z.into())
    }

    /// (a + sign·√b)/2. Panics unless b > 0, b non-square, a² ≡ b (mod 4).
    pub fn quadratic(a: BigInt, b: BigInt, plus: bool) -> Self {
        assert!(b.is_positive(), "b must be positive");
        assert!(int_sqrt_exact(&b).is_none(), "b must not be a square");
        assert!(
            ((&a * &a - &b) % BigInt::from(4)).is_zero(),
            "a^2 must be congruent to b mod 4 (algebraic integer)"
        );
        AlgebraicNumber::Quadratic { a, b, plus }
    }

    /// ±√d for integer d ≥ 0, canonicalized (integer when d is a square).
    pub fn sqrt(d: &BigInt, plus: bool) -> Self {
        assert!(!d.is_negative());
        match int_sqrt_exact(d) {
            Some(s) => AlgebraicNumber::Integer(if plus { s } else { -s }),
            None => AlgebraicNumber::Quadratic {
                a: BigInt::zero(),
                b: d * BigInt::from(4),
                plus,
            },
        }
    }

    /// Build from an irreducible monic factor and one of its isolating
    /// intervals, canonicalizing low degrees.
    pub fn from_irreducible_root(poly: &IntPolynomial, iv: &Interval) -> Self {
        assert!(poly.is_monic());
        match poly.degree() {
            0 => panic!("constant polynomial has no roots"),
            1 => AlgebraicNumber::Integer(-poly.coeff(0)),
            2 => {
                let p = poly.coeff(1);
                let q = poly.coeff(0);
                let a = -p.clone();
                let b = &p * &p - BigInt::from(4) * &q;
                assert!(
                    b.is_positive() && int_sqrt_exact(&b).is_none(),
                    "reducible quadratic passed as irreducible"
                );
                // which conjugate: the one above or below a/2
                let half_a = BigRational::new(a.clone(), BigInt::from(2));
                let mut iv = iv.clone();
                loop {
                    if iv.0 >= half_a {
                        break AlgebraicNumber::Quadratic { a, b, plus: true };
                    }
                    if iv.1 <= half_a {
                        break AlgebraicNumber::Quadratic { a, b, plus: false };
                    }
                    let w = (&iv.1 - &iv.0) / BigRational::from_integer(BigInt::from(4));
                    iv = roots::refine_interval(poly, &iv, &w);
                }
            }
            _ => AlgebraicNumber::Root {
                poly: poly.clone(),
                lo: iv.0.clone(),
                hi: iv.1.clone(),
            },
        }
    }

    pub fn min_poly(&self) -> IntPolynomial {
        match self {
            AlgebraicNumber::Integer(z) => IntPolynomial::linear_root(z),
            AlgebraicNumber::Quadratic { a, b, .. } => {
                let q = (a * a - b) / BigInt::from(4);
                IntPolynomial::new(vec![q, -a.clone(), BigInt::one()])
            }
            AlgebraicNumber::Root { poly, .. } => poly.clone(),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            AlgebraicNumber::Integer(z) => Some(z),
            _ => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, AlgebraicNumber::Integer(_))
    }

    pub fn degree(&self) -> usize {
        match self {
            AlgebraicNumber::Integer(_) => 1,
            AlgebraicNumber::Quadratic { .. } => 2,
            AlgebraicNumber::Root { poly, .. } => poly.degree(),
        }
    }

    /// Rational enclosure with hi - lo <= width (exact point for integers).
    pub fn enclosure(&self, width: &BigRational) -> Interval {
        match self {
            AlgebraicNumber::Integer(z) => {
                let r = BigRational::from_integer(z.clone());
                (r.clone(), r)
            }
            AlgebraicNumber::Quadratic { a, b, plus } => {
                // √b to the needed dyadic precision
                let mut k: u64 = 4;
                loop {
                    let scaled = b * (BigInt::one() << (2 * k));
                    let s = scaled.sqrt();
                    let denom = BigInt::one() << k;
                    let lo_s = BigRational::new(s.clone(), denom.clone());
                    let hi_s = BigRational::new(s + BigInt::one(), denom);
                    let (rlo, rhi) = if *plus {
                        (lo_s, hi_s)
                    } else {
                        (-hi_s, -lo_s)
                    };
                    let two = BigRational::from_integer(BigInt::from(2));
                    let av = BigRational::from_integer(a.clone());
                    let lo = (&av + rlo) / two.clone();
                    let hi = (&av + rhi) / two;
                    if &hi - &lo <= *width {
                        return (lo, hi);
                    }
                    k *= 2;
                }
            }
            AlgebraicNumber::Root { poly, lo, hi } => {
                roots::refine_interval(poly, &(lo.clone(), hi.clone()), width)
            }
        }
    }

    /// Exact comparison against a rational number.
    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        match self {
            AlgebraicNumber::Integer(z) => BigRational::from_integer(z.clone()).cmp(q),
            AlgebraicNumber::Quadratic { a, b, plus } => {
                // (a + s√b)/2 vs q  <=>  s√b vs 2q - a
                let r = BigRational::from_integer(BigInt::from(2)) * q
                    - BigRational::from_integer(a.clone());
                let bb = BigRational::from_integer(b.clone());
                let r2 = &r * &r;
                if *plus {
                    if r.is_negative() {
                        Ordering::Greater
                    } else if bb > r2 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                } else if r.is_positive() {
                    Ordering::Less
                } else if bb > r2 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            AlgebraicNumber::Root { poly, lo, hi } => {
                if q <= lo {
                    return Ordering::Greater;
                }
                if q >= hi {
                    return Ordering::Less;
                }
                // one sign change across (lo, hi); q is never a root
                if poly.sign_at(q) == poly.sign_at(lo) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn cmp_integer(&self, z: i64) -> Ordering {
        self.cmp_rational(&BigRational::from_integer(BigInt::from(z)))
    }

    /// m·self + c, exactly (m nonzero).
    pub fn affine(&self, m: &BigInt, c: &BigInt) -> Self {
        assert!(!m.is_zero());
        match self {
            AlgebraicNumber::Integer(z) => AlgebraicNumber::Integer(m * z + c),
            AlgebraicNumber::Quadratic { a, b, plus } => AlgebraicNumber::Quadratic {
                a: m * a + BigInt::from(2) * c,
                b: m * m * b,
                plus: if m.is_positive() { *plus } else { !*plus },
            },
            AlgebraicNumber::Root { poly, lo, hi } => {
                let new_poly = poly.affine_preimage(m, c);
                let mc = BigRational::from_integer(m.clone());
                let cc = BigRational::from_integer(c.clone());
                let e1 = &mc * lo + &cc;
                let e2 = &mc * hi + &cc;
                let (lo, hi) = if m.is_positive() { (e1, e2) } else { (e2, e1) };
                AlgebraicNumber::Root {
                    poly: new_poly,
                    lo,
                    hi,
                }
            }
        }
    }

    /// Index (from 0, ascending) of this root among the real roots of its
    /// minimal polynomial.
    fn root_index(&self) -> usize {
        match self {
            AlgebraicNumber::Integer(_) => 0,
            AlgebraicNumber::Quadratic { plus, .. } => {
                if *plus {
                    1
                } else {
                    0
                }
            }
            AlgebraicNumber::Root { poly, lo, .. } => {
                let chain = roots::sturm_chain(poly);
                let b = roots::root_bound(poly);
                let start = BigRational::from_integer(-&b - BigInt::one());
                roots::count_roots_in(&chain, &start, lo)
            }
        }
    }

    pub fn approx_f64(&self) -> f64 {
        let w = BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
        let (lo, hi) = self.enclosure(&w);
        let m = (lo + hi) / BigRational::from_integer(BigInt::from(2));
        m.numer().to_f64().unwrap_or(f64::NAN) / m.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        use AlgebraicNumber::*;
        match (self, other) {
            (Integer(x), Integer(y)) => x.cmp(y),
            (x, Integer(y)) => x.cmp_rational(&BigRational::from_integer(y.clone())),
            (Integer(x), y) => y
                .cmp_rational(&BigRational::from_integer(x.clone()))
                .reverse(),
            _ => {
                // same minimal polynomial: compare root positions
                if self.min_poly() == other.min_poly() {
                    return self.root_index().cmp(&other.root_index());
                }
                // distinct minimal polynomials mean distinct values;
                // refine enclosures until they separate
                let mut width = BigRational::new(BigInt::one(), BigInt::from(16));
                loop {
                    let a = self.enclosure(&width);
                    let b = other.enclosure(&width);
                    if a.1 < b.0 {
                        return Ordering::Less;
                    }
                    if b.1 < a.0 {
                        return Ordering::Greater;
                    }
                    width /= BigRational::from_integer(BigInt::from(16));
                }
            }
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicNumber::Integer(z) => write!(f, "{}", z),
            AlgebraicNumber::Quadratic { a, b, plus } => {
                let sign = if *plus { '+' } else { '-' };
                if a.is_zero() && b % BigInt::from(4) == BigInt::zero() {
                    // (±√b)/2 with b = 4d prints as ±√d
                    let d = b / BigInt::from(4);
                    if *plus {
                        write!(f, "sqrt({})", d)
                    } else {
                        write!(f, "-sqrt({})", d)
                    }
                } else {
                    write!(f, "({} {} sqrt({}))/2", a, sign, b)
                }
            }
            AlgebraicNumber::Root { poly, lo, hi } => {
                write!(f, "root of {} in ({}, {})", poly, lo, hi)
            }
        }
    }
}

fn int_sqrt_exact(d: &BigInt) -> Option<BigInt> {
    if d.is_negative() {
        return None;
    }
    let s = d.sqrt();
    if &(&s * &s) == d {
        Some(s)
    } else {
        None
    }
}
