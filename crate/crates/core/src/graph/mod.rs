//! Sandpile graphs, tiling boards and planar embeddings.

mod board;
mod embedding;

pub use board::{board_graph, BoardKind, Coord, MatchGraph};
pub use embedding::{family_embedding, EmbeddedEdge, End, Family, PlanarEmbedding, Side};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// 1-based (row, column).
    Grid(usize, usize),
    Named(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Grid(i, j) => write!(f, "({i},{j})"),
            Label::Named(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Sink,
    Vertex(usize),
}

/// Weighted directed multigraph with a sink. Vertex indices follow
/// the label order given at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandpileGraph {
    labels: Vec<Label>,
    out: Vec<Vec<(usize, u64)>>,
    to_sink: Vec<u64>,
    from_sink: Vec<u64>,
    outdeg: Vec<u64>,
    undirected: bool,
}

#[derive(Clone, Debug)]
pub struct GraphBuilder {
    labels: Vec<Label>,
    weights: BTreeMap<(Node, Node), u64>,
}

impl GraphBuilder {
    pub fn new(labels: Vec<Label>) -> Self {
        GraphBuilder { labels, weights: BTreeMap::new() }
    }

    /// Adds `w` to the directed weight from `a` to `b`.
    pub fn edge(&mut self, a: Node, b: Node, w: u64) -> &mut Self {
        if w > 0 {
            *self.weights.entry((a, b)).or_insert(0) += w;
        }
        self
    }

    pub fn undirected(&mut self, a: Node, b: Node, w: u64) -> &mut Self {
        self.edge(a, b, w).edge(b, a, w)
    }

    pub fn build(&self) -> Result<SandpileGraph> {
        let n = self.labels.len();
        if n == 0 {
            return Err(Error::InvalidGraph("no non-sink vertices".into()));
        }
        let mut out = alloc::vec![Vec::new(); n];
        let mut to_sink = alloc::vec![0u64; n];
        let mut from_sink = alloc::vec![0u64; n];
        for (&(a, b), &w) in &self.weights {
            match (a, b) {
                _ if a == b => return Err(Error::InvalidGraph("self-loop".into())),
                (Node::Vertex(v), _) | (_, Node::Vertex(v)) if v >= n => {
                    return Err(Error::InvalidGraph(format!("vertex {v} out of range")));
                }
                (Node::Vertex(v), Node::Sink) => to_sink[v] += w,
                (Node::Sink, Node::Vertex(v)) => from_sink[v] += w,
                (Node::Vertex(v), Node::Vertex(u)) => out[v].push((u, w)),
                (Node::Sink, Node::Sink) => unreachable!(),
            }
        }
        let outdeg: Vec<u64> = (0..n)
            .map(|v| to_sink[v] + out[v].iter().map(|&(_, w)| w).sum::<u64>())
            .collect();
        if let Some(v) = outdeg.iter().position(|&d| d == 0) {
            return Err(Error::InvalidGraph(format!("vertex {} has out-degree 0", self.labels[v])));
        }
        // Reverse reachability from the sink.
        let mut rev = alloc::vec![Vec::new(); n];
        for (v, targets) in out.iter().enumerate() {
            for &(u, _) in targets {
                rev[u].push(v);
            }
        }
        let mut seen = alloc::vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| to_sink[v] > 0).collect();
        for &v in &stack {
            seen[v] = true;
        }
        while let Some(u) = stack.pop() {
            for &v in &rev[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidGraph(format!("{} cannot reach the sink", self.labels[v])));
        }
        let undirected = to_sink == from_sink
            && self.weights.iter().all(|(&(a, b), w)| self.weights.get(&(b, a)) == Some(w));
        Ok(SandpileGraph { labels: self.labels.clone(), out, to_sink, from_sink, outdeg, undirected })
    }
}

impl SandpileGraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Non-sink out-neighbours of `v` with weights, sorted by index.
    pub fn out_edges(&self, v: usize) -> &[(usize, u64)] {
        &self.out[v]
    }

    pub fn sink_weight(&self, v: usize) -> u64 {
        self.to_sink[v]
    }

    /// Weight of the edge from the sink into `v`.
    pub fn weight_from_sink(&self, v: usize) -> u64 {
        self.from_sink[v]
    }

    pub fn weight(&self, a: Node, b: Node) -> u64 {
        match (a, b) {
            (Node::Vertex(v), Node::Sink) => self.to_sink[v],
            (Node::Sink, Node::Vertex(v)) => self.from_sink[v],
            (Node::Vertex(v), Node::Vertex(u)) => {
                self.out[v].iter().find(|&&(t, _)| t == u).map_or(0, |&(_, w)| w)
            }
            (Node::Sink, Node::Sink) => 0,
        }
    }

    pub fn outdeg(&self, v: usize) -> u64 {
        self.outdeg[v]
    }

    pub fn outdegrees(&self) -> &[u64] {
        &self.outdeg
    }

    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    /// Rows of a full rectangle of grid labels in row-major order.
    pub fn grid_shape(&self) -> Option<(usize, usize)> {
        let Label::Grid(m, n) = *self.labels.last()? else { return None };
        let full = self.labels.len() == m * n
            && self.labels.iter().enumerate().all(|(k, l)| *l == Label::Grid(k / n + 1, k % n + 1));
        full.then_some((m, n))
    }

    /// Row v holds the firing vector of v: outdeg on the diagonal,
    /// minus the weight of v -> w elsewhere.
    pub fn reduced_laplacian(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut m = IntMatrix::zeros(n, n);
        for v in 0..n {
            m[(v, v)] = BigInt::from(self.outdeg[v]);
            for &(u, w) in &self.out[v] {
                m[(v, u)] -= BigInt::from(w);
            }
        }
        m
    }
}

fn grid_labels(m: usize, n: usize) -> Vec<Label> {
    (1..=m).flat_map(|i| (1..=n).map(move |j| Label::Grid(i, j))).collect()
}

/// The m x n sandpile grid: every vertex has total degree 4, with the
/// missing grid edges going to the sink.
pub fn grid_sandpile(m: usize, n: usize) -> Result<SandpileGraph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("grid dimensions must be positive".into()));
    }
    let mut b = GraphBuilder::new(grid_labels(m, n));
    let idx = |i: usize, j: usize| Node::Vertex(i * n + j);
    for i in 0..m {
        for j in 0..n {
            let mut deg = 0;
            if i + 1 < m {
                b.undirected(idx(i, j), idx(i + 1, j), 1);
            }
            if j + 1 < n {
                b.undirected(idx(i, j), idx(i, j + 1), 1);
            }
            deg += u64::from(i > 0) + u64::from(i + 1 < m) + u64::from(j > 0) + u64::from(j + 1 < n);
            b.undirected(idx(i, j), Node::Sink, 4 - deg);
        }
    }
    b.build()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DKind {
    D,
    Dprime,
    Ddoubleprime,
}

/// Quotient graphs whose trees count symmetric recurrents on the
/// 2m x 2n, 2m x (2n-1) and (2m-1) x (2n-1) grids.
pub fn d_family(kind: DKind, m: usize, n: usize) -> Result<SandpileGraph> {
    family_embedding(Family::from_kind(kind, m, n))?.sandpile_graph()
}

/// Triangular graph on {(r,c) : 1 <= r <= c <= n}; the column c = n
/// is joined to the sink.
pub fn p_graph(n: usize) -> Result<SandpileGraph> {
    family_embedding(Family::P(n))?.sandpile_graph()
}

/// Four vertices u, v, w, s with edges us, vs, vw, wu, uv.
pub fn diamond_graph() -> SandpileGraph {
    let labels = ["u", "v", "w"].iter().map(|s| Label::Named((*s).into())).collect();
    let (u, v, w) = (Node::Vertex(0), Node::Vertex(1), Node::Vertex(2));
    GraphBuilder::new(labels)
        .undirected(u, Node::Sink, 1)
        .undirected(v, Node::Sink, 1)
        .undirected(v, w, 1)
        .undirected(w, u, 1)
        .undirected(u, v, 1)
        .build()
        .expect("fixed graph is valid")
}

pub(crate) fn p_index(n: usize, r: usize, c: usize) -> usize {
    // Row r holds columns r..=n; rows before it hold n, n-1, ... entries.
    let k = r - 1;
    k * n - k * k.saturating_sub(1) / 2 + (c - r)
}

pub(crate) fn p_labels(n: usize) -> Vec<Label> {
    (1..=n).flat_map(|r| (r..=n).map(move |c| Label::Grid(r, c))).collect()
}
