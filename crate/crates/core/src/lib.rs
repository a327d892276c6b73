//! Lines in the shortest-path metric of small graphs.
//!
//! Every pair of vertices in a connected graph induces a *line*: the pair
//! plus all vertices metrically between or beyond its ends. This crate
//! computes those lines, counts the distinct ones, recognizes the handful of
//! exceptional graphs that keep the count below the vertex count, checks the
//! structural claims those counts rest on, and exhaustively searches all
//! small connected graphs for violations of the conjectured inequalities.
//!
//! The `graphlines` binary (see the repository README) exposes the whole
//! surface as subcommands: `analyze`, `verify`, `search`, `render`,
//! `catalog`.

pub mod canon;
pub mod catalog;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lines;
pub mod metric;
pub mod render;
pub mod search;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
