pub mod catalog;
pub mod engine;
pub mod error;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod record;
pub mod sim;
pub mod spec;
pub mod trajectory;
pub mod vertex_set;

pub use engine::{Engine, Invariant, InvariantReport};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use kernel::{FamilyCertificate, Limits, Move, MoveGraph};
pub use spec::GraphSpec;
pub use vertex_set::VertexSet;
