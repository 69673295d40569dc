//! Induced saturation of graphs: Hamming hosts, nice colorings,
//! 2-Hamming decompositions and saturation checks.

pub mod classifier;
pub mod coloring;
pub mod constructions;
pub mod decomposition;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod hamming;
pub mod modular;
pub mod saturation;

pub use embedding::{contains_induced, count_embeddings, find_embedding, InducedEmbedding};
pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use hamming::HammingGraph;
