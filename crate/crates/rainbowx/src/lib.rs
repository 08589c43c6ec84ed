//! Graph library for 3-rainbow indices: Steiner metrics, induced-pattern
//! detection, rainbow-coloring verification, an exact index solver, two
//! constructive colorers for forbidden-subgraph classes, Ramsey-type
//! bound constants, and file IO.

pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod detect;
pub mod error;
pub mod format;
pub mod graph;
pub mod metrics;
pub mod painter;
pub mod pattern;
pub mod rainbow;
pub mod reproduce;
pub mod solver;

pub use error::{Error, Result};
