use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{grid_labels, p_index, p_labels, Coord, DKind, GraphBuilder, Label, MatchGraph, Node, SandpileGraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum End {
    Vertex(usize),
    Sink,
}

impl From<End> for Node {
    fn from(e: End) -> Node {
        match e {
            End::Vertex(v) => Node::Vertex(v),
            End::Sink => Node::Sink,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Face(usize),
    Outer,
}

/// One drawn edge. `weights[0]` points from `ends[0]` to `ends[1]`,
/// `weights[1]` the other way; a zero weight means that direction is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedEdge {
    pub ends: [End; 2],
    pub weights: [u64; 2],
    pub faces: [Side; 2],
    pub pos: Coord,
}

/// A drawn sandpile graph with its bounded faces. The outer face is
/// the one removed when building H.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    labels: Vec<Label>,
    vertex_pos: Vec<Coord>,
    edges: Vec<EmbeddedEdge>,
    face_pos: Vec<Coord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    D(usize, usize),
    Dprime(usize, usize),
    Ddoubleprime(usize, usize),
    P(usize),
}

impl Family {
    pub fn from_kind(kind: DKind, m: usize, n: usize) -> Family {
        match kind {
            DKind::D => Family::D(m, n),
            DKind::Dprime => Family::Dprime(m, n),
            DKind::Ddoubleprime => Family::Ddoubleprime(m, n),
        }
    }
}

impl PlanarEmbedding {
    pub fn new(
        labels: Vec<Label>,
        vertex_pos: Vec<Coord>,
        edges: Vec<EmbeddedEdge>,
        face_pos: Vec<Coord>,
    ) -> Result<Self> {
        let (nv, nf) = (vertex_pos.len(), face_pos.len());
        if labels.len() != nv {
            return Err(Error::DimensionMismatch { expected: nv, found: labels.len() });
        }
        for e in &edges {
            for end in e.ends {
                if matches!(end, End::Vertex(v) if v >= nv) {
                    return Err(Error::InvalidGraph(format!("edge at {:?} has a bad end", e.pos)));
                }
            }
            for side in e.faces {
                if matches!(side, Side::Face(f) if f >= nf) {
                    return Err(Error::InvalidGraph(format!("edge at {:?} has a bad face", e.pos)));
                }
            }
            if e.ends[0] == e.ends[1] {
                return Err(Error::InvalidGraph(format!("degenerate edge at {:?}", e.pos)));
            }
        }
        // Connected plane graph: V - E + F = 2, counting sink and outer face.
        if (nv + 1) + (nf + 1) != edges.len() + 2 {
            return Err(Error::InvalidGraph("vertex, edge and face counts break Euler's formula".into()));
        }
        let mut seen = BTreeMap::new();
        for p in vertex_pos.iter().chain(edges.iter().map(|e| &e.pos)).chain(&face_pos) {
            if seen.insert(*p, ()).is_some() {
                return Err(Error::InvalidGraph(format!("position {p:?} used twice")));
            }
        }
        Ok(PlanarEmbedding { labels, vertex_pos, edges, face_pos })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn vertex_pos(&self) -> &[Coord] {
        &self.vertex_pos
    }

    pub fn edges(&self) -> &[EmbeddedEdge] {
        &self.edges
    }

    pub fn face_pos(&self) -> &[Coord] {
        &self.face_pos
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_pos.len()
    }

    pub fn sandpile_graph(&self) -> Result<SandpileGraph> {
        let mut b = GraphBuilder::new(self.labels.clone());
        for e in &self.edges {
            let (a, z) = (Node::from(e.ends[0]), Node::from(e.ends[1]));
            b.edge(a, z, e.weights[0]).edge(z, a, e.weights[1]);
        }
        b.build()
    }

    /// Overlay of vertices, edge midpoints and bounded faces, with the
    /// sink and outer face removed.
    pub fn h_graph(&self) -> Result<MatchGraph> {
        let verts = self
            .vertex_pos
            .iter()
            .chain(self.edges.iter().map(|e| &e.pos))
            .chain(&self.face_pos)
            .copied()
            .collect();
        let mut g = MatchGraph::new(verts)?;
        for e in &self.edges {
            for k in 0..2 {
                if let End::Vertex(v) = e.ends[k] {
                    if e.weights[k] > 0 {
                        g.add_edge(self.vertex_pos[v], e.pos, e.weights[k])?;
                    }
                }
                // A bridge has one face on both sides.
                let repeat = k == 1 && e.faces[0] == e.faces[1];
                if let (Side::Face(f), false) = (e.faces[k], repeat) {
                    g.add_edge(e.pos, self.face_pos[f], 1)?;
                }
            }
        }
        Ok(g)
    }

    /// Indices of edges leaving `v` with positive weight, with that weight.
    pub fn out_choices(&self, v: usize) -> Vec<(usize, u64)> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| {
                let k = e.ends.iter().position(|&x| x == End::Vertex(v))?;
                (e.weights[k] > 0).then_some((i, e.weights[k]))
            })
            .collect()
    }

    /// The end of edge `i` opposite to vertex `v`.
    pub fn other_end(&self, i: usize, v: usize) -> End {
        let e = &self.edges[i];
        if e.ends[0] == End::Vertex(v) { e.ends[1] } else { e.ends[0] }
    }
}

pub fn family_embedding(family: Family) -> Result<PlanarEmbedding> {
    match family {
        Family::D(m, n) => grid_family(m, n, false, false),
        Family::Dprime(m, n) => grid_family(m, n, false, true),
        Family::Ddoubleprime(m, n) => grid_family(m, n, true, true),
        Family::P(n) => p_family(n),
    }
}

// Block [m] x [n] of a grid with odd_rows / odd_cols total size. Vertex
// (i,j) sits at (2i,2j); its up and left edges run toward (1,1), where
// the sink lies beyond the first row and column.
fn grid_family(m: usize, n: usize, odd_rows: bool, odd_cols: bool) -> Result<PlanarEmbedding> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("family dimensions must be positive".into()));
    }
    let (mi, ni) = (m as i64, n as i64);
    let idx = |i: i64, j: i64| ((i - 1) * ni + (j - 1)) as usize;
    let face = |r: i64, c: i64| {
        // Face centre at odd (r, c); bounded inside [1, 2m-1] x [1, 2n-1].
        if (1..2 * mi).contains(&r) && (1..2 * ni).contains(&c) {
            Side::Face(((r - 1) / 2 * ni + (c - 1) / 2) as usize)
        } else {
            Side::Outer
        }
    };
    let mut edges = Vec::new();
    for i in 1..=mi {
        for j in 1..=ni {
            let v = End::Vertex(idx(i, j));
            // Inward weights double across the middle row or column.
            let up = if i == 1 {
                (End::Sink, 1 + u64::from(odd_rows && m == 1))
            } else {
                (End::Vertex(idx(i - 1, j)), 1 + u64::from(odd_rows && i == mi))
            };
            let back = if up.0 == End::Sink { up.1 } else { 1 };
            edges.push(EmbeddedEdge {
                ends: [v, up.0],
                weights: [up.1, back],
                faces: [face(2 * i - 1, 2 * j - 1), face(2 * i - 1, 2 * j + 1)],
                pos: (2 * i - 1, 2 * j),
            });
            let left = if j == 1 {
                (End::Sink, 1 + u64::from(odd_cols && n == 1))
            } else {
                (End::Vertex(idx(i, j - 1)), 1 + u64::from(odd_cols && j == ni))
            };
            let back = if left.0 == End::Sink { left.1 } else { 1 };
            edges.push(EmbeddedEdge {
                ends: [v, left.0],
                weights: [left.1, back],
                faces: [face(2 * i + 1, 2 * j - 1), face(2 * i - 1, 2 * j - 1)],
                pos: (2 * i, 2 * j - 1),
            });
        }
    }
    let vertex_pos = (1..=mi).flat_map(|i| (1..=ni).map(move |j| (2 * i, 2 * j))).collect();
    let face_pos = (1..=mi).flat_map(|i| (1..=ni).map(move |j| (2 * i - 1, 2 * j - 1))).collect();
    PlanarEmbedding::new(grid_labels(m, n), vertex_pos, edges, face_pos)
}

// P_n drawn as a staircase: vertex (r,c) at (2r-1, 2c-1), sink to the right
// of column n, outer face along the diagonal.
fn p_family(n: usize) -> Result<PlanarEmbedding> {
    if n == 0 {
        return Err(Error::InvalidArgument("P_n needs n >= 1".into()));
    }
    let ni = n as i64;
    let mut face_pos = Vec::new();
    for r in 1..ni {
        for c in r + 1..=ni {
            face_pos.push((2 * r, 2 * c));
        }
    }
    let face_index: BTreeMap<Coord, usize> = face_pos.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let face = |p: Coord| face_index.get(&p).map_or(Side::Outer, |&k| Side::Face(k));
    let vtx = |r: i64, c: i64| End::Vertex(p_index(n, r as usize, c as usize));
    let mut edges = Vec::new();
    for r in 1..=ni {
        for c in r..=ni {
            let right = if c < ni { vtx(r, c + 1) } else { End::Sink };
            edges.push(EmbeddedEdge {
                ends: [vtx(r, c), right],
                weights: [1, 1],
                faces: [face((2 * r - 2, 2 * c)), face((2 * r, 2 * c))],
                pos: (2 * r - 1, 2 * c),
            });
            if r < c {
                edges.push(EmbeddedEdge {
                    ends: [vtx(r, c), vtx(r + 1, c)],
                    weights: [1, 1],
                    faces: [face((2 * r, 2 * c - 2)), face((2 * r, 2 * c))],
                    pos: (2 * r, 2 * c - 1),
                });
            }
        }
    }
    let vertex_pos = (1..=ni).flat_map(|r| (r..=ni).map(move |c| (2 * r - 1, 2 * c - 1))).collect();
    PlanarEmbedding::new(p_labels(n), vertex_pos, edges, face_pos)
}
