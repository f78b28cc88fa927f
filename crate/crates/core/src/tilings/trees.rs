use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{End, Node, PlanarEmbedding, SandpileGraph};

/// Rooted spanning tree: one outgoing edge per non-sink vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    pub parents: Vec<Node>,
    /// Chosen drawn edge per vertex, for trees of a planar embedding.
    pub edges: Option<Vec<usize>>,
    pub weight: BigUint,
}

/// Vertex bound for tree enumeration.
pub const MAX_TREE_VERTICES: usize = 12;

fn check_size(n: usize) -> Result<()> {
    if n > MAX_TREE_VERTICES {
        return Err(Error::TooLarge(alloc::format!("{n} vertices, tree enumeration allows {MAX_TREE_VERTICES}")));
    }
    Ok(())
}

// Depth-first choice of one parent per vertex. A cycle can only close at
// the vertex being assigned, so walking up from the new parent suffices.
fn backtrack<F: FnMut(&[Node], &[usize])>(
    choices: &[Vec<(Node, usize)>],
    parents: &mut Vec<Node>,
    picks: &mut Vec<usize>,
    visit: &mut F,
) {
    let v = parents.len();
    if v == choices.len() {
        visit(parents, picks);
        return;
    }
    for (k, &(t, _)) in choices[v].iter().enumerate() {
        let mut cur = t;
        let closes = loop {
            match cur {
                Node::Sink => break false,
                Node::Vertex(u) if u == v => break true,
                Node::Vertex(u) if u < v => cur = parents[u],
                Node::Vertex(_) => break false,
            }
        };
        if !closes {
            parents.push(t);
            picks.push(k);
            backtrack(choices, parents, picks, visit);
            parents.pop();
            picks.pop();
        }
    }
}

fn graph_choices(g: &SandpileGraph) -> Vec<Vec<(Node, u64)>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut c: Vec<(Node, u64)> = g.out_edges(v).iter().map(|&(u, w)| (Node::Vertex(u), w)).collect();
            if g.sink_weight(v) > 0 {
                c.push((Node::Sink, g.sink_weight(v)));
            }
            c
        })
        .collect()
}

/// Calls `visit(parents, weight)` for every spanning tree of `g`; a
/// weight-w edge is taken once with weight w.
pub fn for_each_spanning_tree(g: &SandpileGraph, mut visit: impl FnMut(&[Node], u64)) -> Result<()> {
    check_size(g.vertex_count())?;
    let weighted = graph_choices(g);
    let choices: Vec<Vec<(Node, usize)>> =
        weighted.iter().map(|c| c.iter().enumerate().map(|(k, &(t, _))| (t, k)).collect()).collect();
    backtrack(&choices, &mut Vec::new(), &mut Vec::new(), &mut |parents, picks| {
        let w = picks.iter().enumerate().try_fold(1u64, |acc, (v, &k)| acc.checked_mul(weighted[v][k].1));
        visit(parents, w.expect("tree weight fits in u64"));
    });
    Ok(())
}

pub fn enumerate_spanning_trees(g: &SandpileGraph) -> Result<Vec<SpanningTree>> {
    let mut out = Vec::new();
    for_each_spanning_tree(g, |parents, w| {
        out.push(SpanningTree { parents: parents.to_vec(), edges: None, weight: BigUint::from(w) });
    })?;
    Ok(out)
}

/// Sum of tree weights, which the matrix-tree theorem equates with
/// the reduced Laplacian's determinant.
pub fn spanning_tree_weight_sum(g: &SandpileGraph) -> Result<BigUint> {
    let mut total = BigUint::default();
    for_each_spanning_tree(g, |_, w| total += w)?;
    Ok(total)
}

/// Trees built from drawn edges, so parallel edges give distinct trees.
pub fn embedded_spanning_trees(emb: &PlanarEmbedding) -> Result<Vec<SpanningTree>> {
    let n = emb.vertex_count();
    check_size(n)?;
    let raw: Vec<Vec<(usize, u64)>> = (0..n).map(|v| emb.out_choices(v)).collect();
    let choices: Vec<Vec<(Node, usize)>> = raw
        .iter()
        .enumerate()
        .map(|(v, c)| c.iter().map(|&(e, _)| (Node::from(emb.other_end(e, v)), e)).collect())
        .collect();
    let mut out = Vec::new();
    backtrack(&choices, &mut Vec::new(), &mut Vec::new(), &mut |parents, picks| {
        let edges: Vec<usize> = picks.iter().enumerate().map(|(v, &k)| raw[v][k].0).collect();
        let weight = picks.iter().enumerate().fold(BigUint::one(), |acc, (v, &k)| acc * raw[v][k].1);
        out.push(SpanningTree { parents: parents.to_vec(), edges: Some(edges), weight });
    });
    Ok(out)
}

/// Checks that `tree` uses drawn edges of `emb` leaving each vertex and
/// reaches the sink; returns the edge choice.
pub(crate) fn validate_embedded<'a>(emb: &PlanarEmbedding, tree: &'a SpanningTree) -> Result<&'a [usize]> {
    let n = emb.vertex_count();
    let edges = tree.edges.as_deref().ok_or(Error::NotSpanning)?;
    if edges.len() != n || tree.parents.len() != n {
        return Err(Error::NotSpanning);
    }
    for (v, &e) in edges.iter().enumerate() {
        if !emb.out_choices(v).iter().any(|&(i, _)| i == e) || Node::from(emb.other_end(e, v)) != tree.parents[v] {
            return Err(Error::NotSpanning);
        }
    }
    for v in 0..n {
        let mut cur = End::Vertex(v);
        let mut steps = 0;
        while let End::Vertex(u) = cur {
            steps += 1;
            if steps > n {
                return Err(Error::NotSpanning);
            }
            cur = emb.other_end(edges[u], u);
        }
    }
    Ok(edges)
}
