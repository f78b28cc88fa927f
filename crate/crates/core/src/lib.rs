//! Exact sandpile-group computations on grid graphs, symmetric
//! recurrents, and the domino-tiling counts that match them.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod engine;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod linalg;
pub mod matrix;
pub mod symmetry;
pub mod tilings;

pub use engine::{Config, FiringVector};
pub use error::{Error, Result};
pub use graph::{Label, MatchGraph, Node, SandpileGraph};
pub use matrix::IntMatrix;
