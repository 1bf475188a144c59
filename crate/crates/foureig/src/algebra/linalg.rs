//! Exact rational elimination for integer eigenspaces.

use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("{0} is not an eigenvalue of the matrix")]
    NotAnEigenvalue(BigInt),
}

/// Basis of the kernel of (M - λI) over the rationals, scaled to coprime
/// integer entries. The basis size equals the multiplicity of λ.
pub fn rational_kernel_basis(m: &IntMatrix, lambda: &BigInt) -> Result<Vec<Vec<BigInt>>, KernelError> {
    let n = m.dim();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = m[(i, j)].clone();
                    if i == j {
                        v -= lambda;
                    }
                    BigRational::from_integer(v)
                })
                .collect()
        })
        .collect();

    // reduced row echelon form
    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let pivot = match (row..n).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        a.swap(row, pivot);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[row][c];
                    a[r][c] -= t;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }

    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    if free_cols.is_empty() {
        return Err(KernelError::NotAnEigenvalue(lambda.clone()));
    }

    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![BigRational::zero(); n];
        v[fc] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[r][fc].clone();
        }
        basis.push(scale_to_coprime_integers(&v));
    }
    Ok(basis)
}

fn scale_to_coprime_integers(v: &[BigRational]) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&denom_lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    // normalize sign: first nonzero entry positive
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            g = -g;
        }
    }
    ints.iter().map(|x| x / &g).collect()
}
