//! Group actions on sandpile graphs and symmetric recurrents.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::engine::{check_cap, is_recurrent, Config};
use crate::error::{Error, Result};
use crate::graph::{grid_sandpile, Node, SandpileGraph};
use crate::linalg::det;
use crate::matrix::IntMatrix;

/// Finite set of vertex permutations closed under composition. The sink
/// is fixed implicitly; `perm[v]` is the image of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    elements: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSet {
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
}

impl GroupAction {
    /// Closes `generators` under composition after checking that each
    /// one is a weight-preserving permutation of `g`.
    pub fn generate(g: &SandpileGraph, generators: &[Vec<usize>]) -> Result<Self> {
        let n = g.vertex_count();
        for p in generators {
            check_perm(g, p)?;
        }
        let id: Vec<usize> = (0..n).collect();
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        set.insert(id.clone());
        let mut frontier = alloc::vec![id];
        while let Some(p) = frontier.pop() {
            for q in generators {
                let pq: Vec<usize> = (0..n).map(|v| q[p[v]]).collect();
                if set.insert(pq.clone()) {
                    frontier.push(pq);
                }
            }
        }
        Ok(GroupAction { elements: set.into_iter().collect() })
    }

    pub fn trivial(g: &SandpileGraph) -> Self {
        GroupAction { elements: alloc::vec![(0..g.vertex_count()).collect()] }
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn degree(&self) -> usize {
        self.elements[0].len()
    }

    /// (p c)(p v) = c(v).
    pub fn apply<T: Clone>(&self, k: usize, c: &[T]) -> Vec<T> {
        let p = &self.elements[k];
        let mut out = c.to_vec();
        for (v, x) in c.iter().enumerate() {
            out[p[v]] = x.clone();
        }
        out
    }

    pub fn is_fixed<T: PartialEq>(&self, c: &[T]) -> bool {
        self.elements.iter().all(|p| (0..c.len()).all(|v| c[p[v]] == c[v]))
    }

    pub fn orbits(&self) -> OrbitSet {
        let n = self.degree();
        let mut orbit_of = alloc::vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for v in 0..n {
            if orbit_of[v] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = self.elements.iter().map(|p| p[v]).collect();
            for &u in &members {
                orbit_of[u] = orbits.len();
            }
            orbits.push(members.into_iter().collect::<Vec<_>>());
        }
        OrbitSet { orbits, orbit_of }
    }
}

fn check_perm(g: &SandpileGraph, p: &[usize]) -> Result<()> {
    let n = g.vertex_count();
    if p.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: p.len() });
    }
    let mut hit = alloc::vec![false; n];
    for &x in p {
        if x >= n || core::mem::replace(&mut hit[x], true) {
            return Err(Error::InvalidAction("not a permutation".into()));
        }
    }
    for v in 0..n {
        let (gv, vv) = (Node::Vertex(p[v]), Node::Vertex(v));
        let sink_ok = g.weight(gv, Node::Sink) == g.weight(vv, Node::Sink)
            && g.weight(Node::Sink, gv) == g.weight(Node::Sink, vv);
        let out_ok = g.out_edges(p[v]).len() == g.out_edges(v).len()
            && g.out_edges(v).iter().all(|&(u, w)| g.weight(gv, Node::Vertex(p[u])) == w);
        if !(sink_ok && out_ok) {
            return Err(Error::InvalidAction(format!("edge weights at {} not preserved", g.labels()[v])));
        }
    }
    Ok(())
}

impl OrbitSet {
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Least member of each orbit; orbits are ordered by it.
    pub fn representatives(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o[0]).collect()
    }

    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbit_of[v]
    }
}

/// The flips of the m x n grid about its two central axes.
pub fn klein_action(m: usize, n: usize) -> Result<GroupAction> {
    let g = grid_sandpile(m, n)?;
    let flip_cols: Vec<usize> = (0..m * n).map(|k| (k / n) * n + (n - 1 - k % n)).collect();
    let flip_rows: Vec<usize> = (0..m * n).map(|k| (m - 1 - k / n) * n + k % n).collect();
    GroupAction::generate(&g, &[flip_cols, flip_rows])
}

/// Column of orbit Gv: the summed firing vectors of Gv, read at the
/// representatives.
pub fn symmetrized_laplacian(g: &SandpileGraph, action: &GroupAction) -> IntMatrix {
    let orbits = action.orbits();
    let reps = orbits.representatives();
    let l = g.reduced_laplacian();
    let k = orbits.len();
    IntMatrix::from_fn(k, k, |wi, vi| {
        orbits.orbits()[vi].iter().map(|&u| l[(u, reps[wi])].clone()).sum()
    })
}

pub fn count_symmetric_recurrents(g: &SandpileGraph, action: &GroupAction) -> Result<BigInt> {
    det(&symmetrized_laplacian(g, action))
}

pub fn fold<T: Clone + PartialEq>(action: &GroupAction, c: &[T]) -> Result<Vec<T>> {
    if c.len() != action.degree() {
        return Err(Error::DimensionMismatch { expected: action.degree(), found: c.len() });
    }
    if !action.is_fixed(c) {
        return Err(Error::NotSymmetric);
    }
    Ok(action.orbits().representatives().into_iter().map(|r| c[r].clone()).collect())
}

pub fn unfold<T: Clone>(action: &GroupAction, o: &[T]) -> Result<Vec<T>> {
    let orbits = action.orbits();
    if o.len() != orbits.len() {
        return Err(Error::DimensionMismatch { expected: orbits.len(), found: o.len() });
    }
    Ok((0..action.degree()).map(|v| o[orbits.orbit_of(v)].clone()).collect())
}

/// Recurrents fixed by every element, in lexicographic order of orbit values.
pub fn enumerate_symmetric_recurrents(
    g: &SandpileGraph,
    action: &GroupAction,
    cap: u64,
) -> Result<Vec<Config>> {
    let reps = action.orbits().representatives();
    let radix: Vec<u64> = reps.iter().map(|&r| g.outdeg(r)).collect();
    check_cap(radix.iter().copied(), cap)?;
    let mut o = alloc::vec![0u64; reps.len()];
    let mut out = Vec::new();
    loop {
        let c = Config(unfold(action, &o)?);
        if is_recurrent(g, &c)? {
            out.push(c);
        }
        let mut k = o.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            o[k] += 1;
            if o[k] < radix[k] {
                break;
            }
            o[k] = 0;
        }
    }
}
