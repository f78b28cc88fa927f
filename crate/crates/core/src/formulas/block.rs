//! Block-tridiagonal determinants and the block matrices of the
//! symmetric grids.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::Parity;
use crate::error::{Error, Result};
use crate::linalg::det;
use crate::matrix::IntMatrix;

fn tridiag(n: usize, diag: impl Fn(usize) -> i64, off: impl Fn(usize, usize) -> i64) -> IntMatrix {
    IntMatrix::from_fn(n, n, |i, j| {
        BigInt::from(if i == j {
            diag(i)
        } else if i.abs_diff(j) == 1 {
            off(i, j)
        } else {
            0
        })
    })
}

/// Diagonal 4 with a final 3, off-diagonals -1; A_1 = [3].
pub fn a_matrix(n: usize) -> IntMatrix {
    tridiag(n, |i| if i + 1 == n { 3 } else { 4 }, |_, _| -1)
}

pub fn b_matrix(n: usize) -> IntMatrix {
    a_matrix(n).checked_sub(&IntMatrix::identity(n)).expect("same size")
}

/// Diagonal 4, off-diagonals -1 except -2 at (n, n-1); A'_1 = [4].
pub fn a_prime_matrix(n: usize) -> IntMatrix {
    tridiag(n, |_| 4, |i, j| if i + 1 == n && j + 2 == n { -2 } else { -1 })
}

/// A'_n with diagonal 3.
pub fn b_prime_matrix(n: usize) -> IntMatrix {
    a_prime_matrix(n).checked_sub(&IntMatrix::identity(n)).expect("same size")
}

/// (A, B, C) whose block matrix is the symmetrized Laplacian of the
/// matching parity class.
pub fn block_triple(parity: Parity, n: usize) -> (IntMatrix, IntMatrix, IntMatrix) {
    match parity {
        Parity::EvenEven => (a_matrix(n), b_matrix(n), IntMatrix::identity(n)),
        Parity::EvenOdd => (a_prime_matrix(n), b_prime_matrix(n), IntMatrix::identity(n)),
        Parity::OddOdd => (a_prime_matrix(n), a_prime_matrix(n), IntMatrix::scalar(n, 2)),
    }
}

fn check_dims(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, m: usize) -> Result<usize> {
    let n = a.rows();
    for x in [a, b, c] {
        if !x.is_square() {
            return Err(Error::NotSquare { rows: x.rows(), cols: x.cols() });
        }
        if x.rows() != n {
            return Err(Error::DimensionMismatch { expected: n, found: x.rows() });
        }
    }
    if m == 0 {
        return Err(Error::InvalidArgument("block count must be positive".into()));
    }
    Ok(n)
}

/// The m x m block matrix with A on the diagonal, -I beside it, and a
/// last block row of (-C, B).
pub fn assemble_block_tridiag(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, m: usize) -> Result<IntMatrix> {
    let n = check_dims(a, b, c, m)?;
    let zero = IntMatrix::zeros(n, n);
    let minus_i = IntMatrix::scalar(n, -1);
    let minus_c = c.scale(&BigInt::from(-1));
    let blocks: Vec<Vec<IntMatrix>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| match (i, j) {
                    _ if i == j && i + 1 == m => b.clone(),
                    _ if i == j => a.clone(),
                    _ if i + 1 == m && j + 2 == m => minus_c.clone(),
                    _ if i.abs_diff(j) == 1 => minus_i.clone(),
                    _ => zero.clone(),
                })
                .collect()
        })
        .collect();
    IntMatrix::from_blocks(&blocks)
}

/// Determinant of the assembled block matrix through an n x n one:
/// (-1)^n det(-B S_{m-1} + C S_{m-2}) with S_j = A S_{j-1} - S_{j-2}.
pub fn block_tridiag_det(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix, m: usize) -> Result<BigInt> {
    let n = check_dims(a, b, c, m)?;
    if m == 1 {
        return det(b);
    }
    let (mut prev, mut cur) = (IntMatrix::zeros(n, n), IntMatrix::identity(n));
    for _ in 1..m {
        let next = a.checked_mul(&cur)?.checked_sub(&prev)?;
        prev = cur;
        cur = next;
    }
    // cur = S_{m-1}, prev = S_{m-2}
    let t = c.checked_mul(&prev)?.checked_sub(&b.checked_mul(&cur)?)?;
    let d = det(&t)?;
    Ok(if n % 2 == 1 { -d } else { d })
}
