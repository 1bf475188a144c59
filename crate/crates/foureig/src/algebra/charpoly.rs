//! Exact characteristic polynomials of integer matrices.
//!
//! The fast path reduces the matrix modulo a set of word-sized primes,
//! computes each modular characteristic polynomial through Hessenberg
//! form in O(n^3), and reconstructs the integer coefficients by CRT.
//! The prime set is sized from an a-priori coefficient bound, so the
//! result is exact, not approximate. A division-exact Faddeev-LeVerrier
//! implementation over BigInt is kept as an independent second route.

use super::matrix::IntMatrix;
use super::poly::IntPolynomial;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// det(xI - M) as a monic integer polynomial.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.dim();
    if n == 0 {
        return IntPolynomial::one();
    }
    let bound = coeff_bound(m);
    let primes = primes_covering(&(bound * BigInt::from(2) + BigInt::one()));
    let residues: Vec<Vec<u64>> = primes.iter().map(|&p| charpoly_mod(m, p)).collect();
    crt_combine(n, &primes, &residues)
}

/// Faddeev-LeVerrier over BigInt; O(n^4) big-integer work. Exact for any
/// square integer matrix. Slower than `char_poly` but an entirely
/// different code path, used to cross-check it.
pub fn char_poly_faddeev(a: &IntMatrix) -> IntPolynomial {
    let n = a.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntMatrix::identity(n);
    for k in 1..=n {
        let am = a.mul(&m);
        let c = -am.trace() / BigInt::from(k);
        coeffs[n - k] = c.clone();
        m = am;
        for i in 0..n {
            m[(i, i)] += &c;
        }
    }
    IntPolynomial::new(coeffs)
}

/// max_i C(n,i) r^i with r the largest absolute row sum: every coefficient
/// of the characteristic polynomial is bounded by this in absolute value,
/// since the degree-(n-i) coefficient is +-e_i of the eigenvalues and each
/// eigenvalue modulus is at most r.
fn coeff_bound(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    let r = {
        let s = m.max_abs_row_sum();
        if s.is_zero() {
            BigInt::one()
        } else {
            s
        }
    };
    let mut best = BigInt::one();
    let mut binom = BigInt::one();
    let mut rpow = BigInt::one();
    for i in 1..=n {
        binom = binom * BigInt::from(n - i + 1) / BigInt::from(i);
        rpow *= &r;
        let cand = &binom * &rpow;
        if cand > best {
            best = cand;
        }
    }
    best
}

fn charpoly_mod(m: &IntMatrix, p: u64) -> Vec<u64> {
    let n = m.dim();
    let pp = BigInt::from(p);
    let mut h = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = ((&m[(i, j)] % &pp) + &pp) % &pp;
            h[i][j] = v.to_u64().unwrap();
        }
    }
    hessenberg_mod(&mut h, p);
    // Characteristic polynomials of leading principal blocks of the
    // Hessenberg form, by the standard last-column expansion.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for j in 1..=n {
        // (x - h[j-1][j-1]) * p_{j-1}
        let prev = &polys[j - 1];
        let mut cur = vec![0u64; j + 1];
        for (d, &c) in prev.iter().enumerate() {
            cur[d + 1] = add_mod(cur[d + 1], c, p);
            cur[d] = sub_mod(cur[d], mul_mod(h[j - 1][j - 1], c, p), p);
        }
        // minus sum over i of h[i-1][j-1] * prod(subdiag) * p_{i-1}
        let mut subdiag_prod = 1u64;
        for i in (1..j).rev() {
            // product h[l][l-1] for l = i..j-1
            subdiag_prod = mul_mod(subdiag_prod, h[i][i - 1], p);
            if subdiag_prod == 0 {
                break;
            }
            let f = mul_mod(h[i - 1][j - 1], subdiag_prod, p);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                cur[d] = sub_mod(cur[d], mul_mod(f, c, p), p);
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

fn hessenberg_mod(h: &mut [Vec<u64>], p: u64) {
    let n = h.len();
    if n < 3 {
        return;
    }
    for j in 0..n - 2 {
        let pivot = match (j + 1..n).find(|&i| h[i][j] != 0) {
            Some(i) => i,
            None => continue,
        };
        if pivot != j + 1 {
            h.swap(pivot, j + 1);
            for row in h.iter_mut() {
                row.swap(pivot, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for i in j + 2..n {
            if h[i][j] == 0 {
                continue;
            }
            let f = mul_mod(h[i][j], inv, p);
            for col in j..n {
                let t = mul_mod(f, h[j + 1][col], p);
                h[i][col] = sub_mod(h[i][col], t, p);
            }
            // similarity: add f times column i to column j+1
            for row in 0..n {
                let t = mul_mod(f, h[row][i], p);
                h[row][j + 1] = add_mod(h[row][j + 1], t, p);
            }
        }
    }
}

fn crt_combine(n: usize, primes: &[u64], residues: &[Vec<u64>]) -> IntPolynomial {
    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (idx, &p) in primes.iter().enumerate() {
        let pb = BigInt::from(p);
        if idx == 0 {
            for d in 0..=n {
                coeffs[d] = BigInt::from(residues[0][d]);
            }
            modulus = pb;
            continue;
        }
        let m_inv = {
            let m_mod_p = ((&modulus % &pb) + &pb) % &pb;
            BigInt::from(inv_mod(m_mod_p.to_u64().unwrap(), p))
        };
        for (d, c) in coeffs.iter_mut().enumerate() {
            let target = BigInt::from(residues[idx][d]);
            let cur = ((&*c % &pb) + &pb) % &pb;
            let diff = ((target - cur) % &pb + &pb) % &pb;
            let t = (diff * &m_inv) % &pb;
            *c += &modulus * t;
        }
        modulus *= pb;
    }
    // lift to symmetric range
    let half = &modulus / BigInt::from(2);
    for c in coeffs.iter_mut() {
        if &*c > &half {
            *c -= &modulus;
        }
    }
    IntPolynomial::new(coeffs)
}

fn primes_covering(target: &BigInt) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut product = BigInt::one();
    let mut candidate = (1u64 << 62) - 1;
    while &product <= target {
        while !is_prime_u64(candidate) {
            candidate -= 2;
        }
        primes.push(candidate);
        product *= BigInt::from(candidate);
        candidate -= 2;
    }
    primes
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + (p - b) as u128;
    (s % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &sp in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == sp {
            return true;
        }
        if n % sp == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_char_poly() {
        let a = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(char_poly(&a), IntPolynomial::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn k4_char_poly() {
        let a = IntMatrix::from_i64_rows(&[
            &[0, 1, 1, 1],
            &[1, 0, 1, 1],
            &[1, 1, 0, 1],
            &[1, 1, 1, 0],
        ]);
        // (x-3)(x+1)^3 = x^4 - 6x^2 - 8x - 3
        assert_eq!(char_poly(&a), IntPolynomial::from_i64(&[-3, -8, -6, 0, 1]));
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(
            char_poly(&IntMatrix::zero(3)),
            IntPolynomial::from_i64(&[0, 0, 0, 1])
        );
    }

    #[test]
    fn agrees_with_faddeev_on_random_like_matrices() {
        // deterministic scramble, mixed signs, non-symmetric
        let mut rows = Vec::new();
        let mut state = 12345u64;
        for _ in 0..7 {
            let mut row = Vec::new();
            for _ in 0..7 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                row.push(BigInt::from((state >> 33) as i64 % 9 - 4));
            }
            rows.push(row);
        }
        let m = IntMatrix::from_rows(rows);
        assert_eq!(char_poly(&m), char_poly_faddeev(&m));
    }

    #[test]
    fn constant_term_is_det_up_to_sign() {
        let a = IntMatrix::from_i64_rows(&[&[2, -1, 0], &[5, 3, 1], &[-2, 0, 4]]);
        let cp = char_poly(&a);
        // char_poly(0) = det(-A) = (-1)^n det(A), here n = 3
        assert_eq!(cp.coeff(0), -a.determinant());
    }
}
