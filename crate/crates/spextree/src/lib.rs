pub mod bitgraph;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod tree;

pub use error::{Error, Result};
