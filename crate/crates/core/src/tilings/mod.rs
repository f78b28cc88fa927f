//! Perfect matchings, spanning trees, the Temperley correspondence
//! and the triangular graphs P_n.

mod matchings;
mod pn;
mod temperley;
mod trees;

pub use matchings::{count_matchings, enumerate_matchings, Matching, MAX_PROFILE, MAX_RECURSIVE};
pub use pn::{a_seq, pn_diagonal_config, pn_distance_config, pn_embed};
pub use temperley::{temperley_matching, temperley_matching_in};
pub use trees::{
    embedded_spanning_trees, enumerate_spanning_trees, for_each_spanning_tree, spanning_tree_weight_sum,
    SpanningTree, MAX_TREE_VERTICES,
};
