//! Spectral extremal search over small graphs.
//!
//! The crate computes the `A_α` spectral radius (α-index) of simple graphs,
//! decides membership in the minimally k-(edge-)connected classes, evaluates
//! closed forms and bounds for the α-index, and exhaustively checks which
//! graph maximizes the α-index inside those classes at small orders.

mod bits;
pub mod connectivity;
pub mod enumeration;
pub mod error;
pub mod families;
mod flow;
pub mod graph;
pub mod report;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use spectral::{AlphaParam, SpectralConfig, SpectralResult};
