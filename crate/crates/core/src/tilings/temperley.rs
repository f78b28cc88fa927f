use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::matchings::Matching;
use super::trees::{validate_embedded, SpanningTree};
use crate::error::{Error, Result};
use crate::graph::{family_embedding, End, Family, PlanarEmbedding, Side};

/// Matching of H(family) assigned to a tree of the family's drawing.
pub fn temperley_matching(family: Family, tree: &SpanningTree) -> Result<Matching> {
    temperley_matching_in(&family_embedding(family)?, tree)
}

/// Each tree edge pairs its tail with its midpoint; each bounded face
/// pairs with the dual-tree edge leading toward the outer face.
pub fn temperley_matching_in(emb: &PlanarEmbedding, tree: &SpanningTree) -> Result<Matching> {
    let chosen = validate_embedded(emb, tree)?;
    let edges = emb.edges();
    let mut in_tree = alloc::vec![false; edges.len()];
    let mut pairs = Vec::with_capacity(emb.vertex_count() + emb.face_pos().len());
    for (v, &e) in chosen.iter().enumerate() {
        in_tree[e] = true;
        let k = usize::from(edges[e].ends[0] != End::Vertex(v));
        pairs.push((emb.vertex_pos()[v], edges[e].pos, edges[e].weights[k]));
    }
    // Dual edges of the complement, searched from the outer face.
    let nf = emb.face_pos().len();
    let mut adj: Vec<Vec<(Side, usize)>> = alloc::vec![Vec::new(); nf + 1];
    let slot = |s: Side| match s {
        Side::Face(f) => f,
        Side::Outer => nf,
    };
    for (i, e) in edges.iter().enumerate().filter(|(i, _)| !in_tree[*i]) {
        adj[slot(e.faces[0])].push((e.faces[1], i));
        adj[slot(e.faces[1])].push((e.faces[0], i));
    }
    let mut seen = alloc::vec![false; nf + 1];
    seen[nf] = true;
    let mut queue = VecDeque::from([Side::Outer]);
    while let Some(f) = queue.pop_front() {
        for &(g, e) in &adj[slot(f)] {
            if let Side::Face(k) = g {
                if !seen[k] {
                    seen[k] = true;
                    pairs.push((emb.face_pos()[k], edges[e].pos, 1));
                    queue.push_back(g);
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotSpanning);
    }
    Ok(Matching::from_pairs(pairs))
}
