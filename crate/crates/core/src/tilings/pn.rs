use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{p_graph, p_index};
use crate::linalg::det;

/// Order of the sandpile group of P_n.
pub fn a_seq(n: usize) -> Result<BigInt> {
    det(&p_graph(n)?.reduced_laplacian())
}

/// Unfolds a configuration on P_n to the 2n x 2n grid (row-major) by
/// reflecting across both diagonals and both central axes.
pub fn pn_embed<T: Clone>(n: usize, c: &[T]) -> Result<Vec<T>> {
    let size = n * (n + 1) / 2;
    if c.len() != size || n == 0 {
        return Err(Error::DimensionMismatch { expected: size, found: c.len() });
    }
    // Distance from the centre lines, 1-based.
    let fold = |i: usize| if i > n { i - n } else { n + 1 - i };
    let mut out = Vec::with_capacity(4 * n * n);
    for i in 1..=2 * n {
        for j in 1..=2 * n {
            let (p, q) = (fold(i), fold(j));
            out.push(c[p_index(n, p.min(q), p.max(q))].clone());
        }
    }
    Ok(out)
}

/// Sand equal to the distance from each vertex to the sink.
pub fn pn_distance_config(n: usize) -> Vec<i64> {
    (1..=n).flat_map(|r| (r..=n).map(move |c| (n - c + 1) as i64)).collect()
}

/// One grain on each diagonal vertex.
pub fn pn_diagonal_config(n: usize) -> Vec<i64> {
    (1..=n).flat_map(|r| (r..=n).map(move |c| i64::from(r == c))).collect()
}
