//! Stabilization, recurrence and group operations.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::ops::Deref;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::SandpileGraph;
use crate::linalg::{denominator_lcm, solve_exact};

/// Default cap on the number of candidate configurations an
/// enumeration may visit.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// Sand amounts on the non-sink vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Config(pub Vec<u64>);

/// How many times each vertex fired.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiringVector(pub Vec<u64>);

impl Config {
    pub fn constant(n: usize, k: u64) -> Self {
        Config(alloc::vec![k; n])
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.0.iter().map(|&x| BigInt::from(x)).collect()
    }
}

impl Deref for Config {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl Deref for FiringVector {
    type Target = [u64];
    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for Config {
    fn from(v: Vec<u64>) -> Self {
        Config(v)
    }
}

fn check_len(g: &SandpileGraph, c: &[u64]) -> Result<()> {
    if c.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch { expected: g.vertex_count(), found: c.len() });
    }
    Ok(())
}

pub fn is_stable(g: &SandpileGraph, c: &[u64]) -> bool {
    c.iter().zip(g.outdegrees()).all(|(a, d)| a < d)
}

/// Fires `v` `times` times.
pub fn fire(g: &SandpileGraph, c: &mut [u64], v: usize, times: u64) {
    c[v] -= times * g.outdeg(v);
    for &(u, w) in g.out_edges(v) {
        c[u] += times * w;
    }
}

/// Relaxes `c` to its stable configuration, returning the firing counts.
pub fn stabilize(g: &SandpileGraph, c: &Config) -> Result<(Config, FiringVector)> {
    check_len(g, c)?;
    let mut c = c.clone();
    let f = stabilize_in_place(g, &mut c.0);
    Ok((c, FiringVector(f)))
}

pub(crate) fn stabilize_in_place(g: &SandpileGraph, c: &mut [u64]) -> Vec<u64> {
    let n = g.vertex_count();
    let mut f = alloc::vec![0u64; n];
    let mut queued = alloc::vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| c[v] >= g.outdeg(v)).collect();
    for &v in &queue {
        queued[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        let k = c[v] / g.outdeg(v);
        if k == 0 {
            continue;
        }
        fire(g, c, v, k);
        f[v] += k;
        for &(u, _) in g.out_edges(v) {
            if !queued[u] && c[u] >= g.outdeg(u) {
                queued[u] = true;
                queue.push_back(u);
            }
        }
    }
    f
}

/// Single-firing stabilization; `pick(k)` chooses which of the `k`
/// currently unstable vertices fires next.
pub fn stabilize_by(
    g: &SandpileGraph,
    c: &Config,
    mut pick: impl FnMut(usize) -> usize,
) -> Result<(Config, FiringVector)> {
    check_len(g, c)?;
    let mut c = c.clone();
    let mut f = alloc::vec![0u64; g.vertex_count()];
    loop {
        let unstable: Vec<usize> = (0..c.len()).filter(|&v| c[v] >= g.outdeg(v)).collect();
        if unstable.is_empty() {
            return Ok((c, FiringVector(f)));
        }
        let v = unstable[pick(unstable.len()) % unstable.len()];
        fire(g, &mut c.0, v, 1);
        f[v] += 1;
    }
}

pub fn max_stable(g: &SandpileGraph) -> Config {
    Config(g.outdegrees().iter().map(|d| d - 1).collect())
}

/// Sand the sink would send on firing once.
pub fn burning_config(g: &SandpileGraph) -> Config {
    Config((0..g.vertex_count()).map(|v| g.weight_from_sink(v)).collect())
}

/// Burning test: c is recurrent iff adding the burning configuration
/// and stabilizing returns c with every vertex firing.
pub fn is_recurrent(g: &SandpileGraph, c: &Config) -> Result<bool> {
    check_len(g, c)?;
    if !g.is_undirected() {
        return Err(Error::DirectedGraph);
    }
    if !is_stable(g, c) {
        return Err(Error::UnstableConfig);
    }
    let mut x: Vec<u64> = c.iter().zip(burning_config(g).iter()).map(|(a, b)| a + b).collect();
    let f = stabilize_in_place(g, &mut x);
    Ok(x == c.0 && f.iter().all(|&k| k > 0))
}

pub fn stable_add(g: &SandpileGraph, a: &Config, b: &Config) -> Result<Config> {
    check_len(g, a)?;
    check_len(g, b)?;
    let mut s: Vec<u64> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
    stabilize_in_place(g, &mut s);
    Ok(Config(s))
}

/// Identity of the sandpile group: (2 c_max - (2 c_max)°)°.
pub fn identity(g: &SandpileGraph) -> Config {
    let cmax = max_stable(g);
    let mut twice: Vec<u64> = cmax.iter().map(|x| 2 * x).collect();
    stabilize_in_place(g, &mut twice);
    let mut e: Vec<u64> = cmax.iter().zip(&twice).map(|(m, t)| 2 * m - t).collect();
    stabilize_in_place(g, &mut e);
    Config(e)
}

pub(crate) fn check_cap(sizes: impl Iterator<Item = u64>, cap: u64) -> Result<()> {
    let mut total: u128 = 1;
    for s in sizes {
        total = total.saturating_mul(u128::from(s));
    }
    if total > u128::from(cap) {
        return Err(Error::CapExceeded { needed: total, cap });
    }
    Ok(())
}

/// Every recurrent configuration, in lexicographic order.
pub fn enumerate_recurrents(g: &SandpileGraph, cap: u64) -> Result<Vec<Config>> {
    check_cap(g.outdegrees().iter().copied(), cap)?;
    let radix = g.outdegrees();
    let mut c = Config::constant(g.vertex_count(), 0);
    let mut out = Vec::new();
    loop {
        if is_recurrent(g, &c)? {
            out.push(c.clone());
        }
        // Odometer step, last coordinate fastest.
        let mut k = c.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            c.0[k] += 1;
            if c.0[k] < radix[k] {
                break;
            }
            c.0[k] = 0;
        }
    }
}

/// Least k >= 1 with k c in the lattice spanned by the firing vectors.
pub fn config_order(g: &SandpileGraph, c: &[BigInt]) -> Result<BigInt> {
    if c.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch { expected: g.vertex_count(), found: c.len() });
    }
    // Firing vectors are the rows of the reduced Laplacian.
    let lt = g.reduced_laplacian().transpose();
    Ok(denominator_lcm(&solve_exact(&lt, c)?))
}
