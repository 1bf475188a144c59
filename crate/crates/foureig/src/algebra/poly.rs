//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Polynomial over the integers, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x - r
    pub fn linear_root(r: &BigInt) -> Self {
        IntPolynomial::new(vec![-r.clone(), BigInt::one()])
    }

    /// x^d
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval_rational(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPolynomial::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPolynomial::new(out)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        IntPolynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Division by a monic divisor: returns (quotient, remainder).
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree();
        if self.degree() < d || self.is_zero() {
            return (IntPolynomial::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for j in 0..d {
                let t = &q * &divisor.coeffs[j];
                rem[i - d + j] -= t;
            }
            quot[i - d] = q;
        }
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    /// Exact division by a monic divisor; panics if the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem_monic(divisor);
        assert!(r.is_zero(), "division not exact");
        q
    }

    /// Whether the monic candidate divides self exactly.
    pub fn divisible_by_monic(&self, divisor: &Self) -> bool {
        self.div_rem_monic(divisor).1.is_zero()
    }

    /// Content: gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Gcd over the rationals, returned as a primitive integer polynomial
    /// with positive leading coefficient (monic up to content).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            // pseudo-remainder keeps everything integral
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        assert!(!b.is_zero());
        let db = b.degree();
        let lb = b.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= db {
            let dr = r.degree();
            let lr = r.leading();
            let shift = dr - db;
            // r = lb * r - lr * x^shift * b
            let mut coeffs = vec![BigInt::zero(); dr + 1];
            for (i, c) in r.coeffs.iter().enumerate() {
                coeffs[i] = c * &lb;
            }
            for (j, c) in b.coeffs.iter().enumerate() {
                coeffs[shift + j] -= c * &lr;
            }
            r = IntPolynomial::new(coeffs);
        }
        r
    }

    /// m^d * p((x - c) / m), an integer polynomial when p has degree d.
    /// For m < 0 the transform is still exact; used to push spectra through
    /// affine eigenvalue maps.
    pub fn affine_preimage(&self, m: &BigInt, c: &BigInt) -> Self {
        assert!(!m.is_zero());
        let d = self.degree();
        // sum a_i (x - c)^i m^(d-i)
        let shifted = IntPolynomial::new(vec![-c.clone(), BigInt::one()]);
        let mut acc = IntPolynomial::zero();
        let mut m_pow = BigInt::one(); // m^(d-i) built from the top
        let mut terms: Vec<IntPolynomial> = Vec::with_capacity(d + 1);
        for i in (0..=d).rev() {
            terms.push(IntPolynomial::constant(self.coeff(i) * &m_pow));
            m_pow *= m;
        }
        terms.reverse();
        // Horner in (x - c): acc = ((a_d) (x-c) + a_{d-1} m) (x-c) + ...
        for i in (0..=d).rev() {
            acc = acc.mul(&shifted).add(&terms[i]);
        }
        acc
    }

    /// Normalize so the leading coefficient is positive.
    pub fn with_positive_leading(&self) -> Self {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                1 => {
                    if a.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{}x", a)?
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "x^{}", i)?
                    } else {
                        write!(f, "{}x^{}", a, i)?
                    }
                }
            }
        }
        Ok(())
    }
}
