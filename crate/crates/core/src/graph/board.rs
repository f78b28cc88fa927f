use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Integer planar coordinate, (row, column).
pub type Coord = (i64, i64);

/// Undirected edge-weighted graph on planar coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchGraph {
    vertices: Vec<Coord>,
    index: BTreeMap<Coord, usize>,
    edges: BTreeMap<(usize, usize), u64>,
    adj: Vec<Vec<usize>>,
}

impl MatchGraph {
    pub fn new(vertices: Vec<Coord>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, &c) in vertices.iter().enumerate() {
            if index.insert(c, i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {c:?}")));
            }
        }
        let adj = alloc::vec![Vec::new(); vertices.len()];
        Ok(MatchGraph { vertices, index, edges: BTreeMap::new(), adj })
    }

    /// Adds weight to the edge {a, b}; parallel edges are summed.
    pub fn add_edge(&mut self, a: Coord, b: Coord, w: u64) -> Result<()> {
        let ia = self.position(a).ok_or_else(|| Error::InvalidGraph(format!("no vertex {a:?}")))?;
        let ib = self.position(b).ok_or_else(|| Error::InvalidGraph(format!("no vertex {b:?}")))?;
        if ia == ib {
            return Err(Error::InvalidGraph(format!("self-loop at {a:?}")));
        }
        if w == 0 {
            return Err(Error::InvalidGraph("zero edge weight".into()));
        }
        let key = (ia.min(ib), ia.max(ib));
        let slot = self.edges.entry(key).or_insert(0);
        if *slot == 0 {
            self.adj[ia].push(ib);
            self.adj[ib].push(ia);
        }
        *slot += w;
        Ok(())
    }

    /// Overwrites the weight of an existing edge.
    pub fn set_weight(&mut self, a: Coord, b: Coord, w: u64) -> Result<()> {
        let (ia, ib) = (self.position(a), self.position(b));
        let key = match (ia, ib) {
            (Some(x), Some(y)) => (x.min(y), x.max(y)),
            _ => return Err(Error::InvalidGraph(format!("no edge {a:?}-{b:?}"))),
        };
        match self.edges.get_mut(&key) {
            Some(slot) if w > 0 => {
                *slot = w;
                Ok(())
            }
            _ => Err(Error::InvalidGraph(format!("cannot set edge {a:?}-{b:?} to {w}"))),
        }
    }

    pub fn position(&self, c: Coord) -> Option<usize> {
        self.index.get(&c).copied()
    }

    pub fn vertices(&self) -> &[Coord] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn weight_between(&self, a: usize, b: usize) -> u64 {
        self.edges.get(&(a.min(b), a.max(b))).copied().unwrap_or(0)
    }

    pub fn weight(&self, a: Coord, b: Coord) -> u64 {
        match (self.position(a), self.position(b)) {
            (Some(x), Some(y)) => self.weight_between(x, y),
            _ => 0,
        }
    }

    /// Edges by vertex index, each pair once with the smaller index first.
    pub fn indexed_edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.edges.iter().map(|(&(a, b), &w)| (a, b, w))
    }

    /// Edges as sorted coordinate pairs, in a canonical order.
    pub fn edge_list(&self) -> Vec<(Coord, Coord, u64)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|(&(a, b), &w)| {
                let (x, y) = (self.vertices[a], self.vertices[b]);
                (x.min(y), x.max(y), w)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Same vertex set and the same weighted edges, ignoring storage order.
    pub fn same_as(&self, other: &MatchGraph) -> bool {
        let mut a = self.vertices.clone();
        let mut b = other.vertices.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b && self.edge_list() == other.edge_list()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoardKind {
    Plain,
    Mobius,
    MobiusWeighted,
    TwoWeighted,
}

/// Tiling boards with 1-based (row, column) coordinates.
pub fn board_graph(kind: BoardKind, rows: usize, cols: usize) -> Result<MatchGraph> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument("board dimensions must be positive".into()));
    }
    if kind != BoardKind::Plain && cols < 2 {
        return Err(Error::InvalidArgument(format!("{kind:?} board needs at least 2 columns")));
    }
    if kind == BoardKind::TwoWeighted && (rows % 2 == 1 || cols % 2 == 1) {
        return Err(Error::InvalidArgument("two-weighted board needs even dimensions".into()));
    }
    let (r, c) = (rows as i64, cols as i64);
    let verts = (1..=r).flat_map(|i| (1..=c).map(move |j| (i, j))).collect();
    let mut g = MatchGraph::new(verts)?;
    for i in 1..=r {
        for j in 1..=c {
            if j < c {
                g.add_edge((i, j), (i, j + 1), 1)?;
            }
            if i < r {
                g.add_edge((i, j), (i + 1, j), 1)?;
            }
        }
    }
    match kind {
        BoardKind::Plain => {}
        BoardKind::Mobius => {
            for h in 1..=r {
                g.add_edge((h, 1), (r - h + 1, c), 1)?;
            }
        }
        BoardKind::MobiusWeighted => {
            for h in 0..r / 2 {
                g.set_weight((r - 2 * h, c - 1), (r - 2 * h, c), 2)?;
            }
            if r % 2 == 1 {
                g.set_weight((1, c - 1), (1, c), 3)?;
            }
        }
        BoardKind::TwoWeighted => {
            for h in 0..r / 2 {
                g.set_weight((r - 2 * h, c - 1), (r - 2 * h, c), 2)?;
            }
            for k in 0..c / 2 {
                g.set_weight((r - 1, c - 2 * k), (r, c - 2 * k), 2)?;
            }
        }
    }
    Ok(g)
}
