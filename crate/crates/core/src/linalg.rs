//! Exact determinants and rational solves over big integers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Vector of reduced rationals (num-rational keeps them normalized).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn from_integers(v: &[BigInt]) -> Self {
        RationalVector(v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.to_nested()
}

// Bareiss forward pass on `a` (n rows, possibly augmented). Returns the
// row-swap sign, or None when a pivot column is entirely zero.
fn bareiss_forward(a: &mut [Vec<BigInt>], n: usize) -> Option<bool> {
    let mut negate = false;
    let mut prev = BigInt::one();
    let width = a.first().map_or(0, Vec::len);
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = core::mem::take(&mut row[k]);
            for j in k + 1..width {
                let mut v = &row[j] * pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v -= &lead * &pivot_row[j];
                }
                if !prev.is_one() {
                    v /= &prev;
                }
                row[j] = v;
            }
        }
        prev = top[k][k].clone();
    }
    Some(negate)
}

/// Exact determinant by fraction-free elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = rows_of(m);
    match bareiss_forward(&mut a, n) {
        None => Ok(BigInt::zero()),
        Some(negate) => {
            let d = a[n - 1][n - 1].clone();
            Ok(if negate { -d } else { d })
        }
    }
}

/// Solves `m x = b` exactly. The residual is checked before returning.
pub fn solve_exact(m: &IntMatrix, b: &[BigInt]) -> Result<RationalVector> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if b.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.len() });
    }
    let mut a = rows_of(m);
    for (row, bi) in a.iter_mut().zip(b) {
        row.push(bi.clone());
    }
    bareiss_forward(&mut a, n).ok_or(Error::Singular)?;
    let mut x: Vec<BigRational> = alloc::vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            if !a[i][j].is_zero() {
                acc -= &x[j] * BigRational::from_integer(a[i][j].clone());
            }
        }
        x[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    let x = RationalVector(x);
    check_residual(m, &x, b)?;
    Ok(x)
}

fn check_residual(m: &IntMatrix, x: &RationalVector, b: &[BigInt]) -> Result<()> {
    // Put x over a common denominator so the check stays in integers.
    let k = denominator_lcm(x);
    let scaled: Vec<BigInt> = x.0.iter().map(|q| q.numer() * (&k / q.denom())).collect();
    let lhs = m.mul_vec(&scaled)?;
    if lhs.iter().zip(b).all(|(l, r)| *l == r * &k) {
        Ok(())
    } else {
        Err(Error::Singular)
    }
}

/// Least k >= 1 with k * v integral.
pub fn denominator_lcm(v: &RationalVector) -> BigInt {
    v.0.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
