//! Interaction graphs, the combinatorial cobordism category `Cob0`, and the
//! functor relating them.
//!
//! * [`graph`] and [`alternating`]: directed multigraphs, alternating paths
//!   and prime alternating cycles.
//! * [`execution`]: the execution of two graphs, the cycle measure, and
//!   checkers for associativity and the trefoil identity.
//! * [`int`] and [`project`]: the Int construction over graphs and the
//!   wager layer.
//! * [`cob0`] and [`functor`]: matchings-with-circles and the faithful
//!   functor into projects.
//! * [`bimodular`]: graphs with vertex groups acting on edges, composed up
//!   to the induced identification.
//! * [`format`], [`dot`] and [`campaign`]: text formats, DOT output and the
//!   seeded/exhaustive verification campaigns used by the CLI.

pub mod alternating;
pub mod bimodular;
pub mod campaign;
pub mod cob0;
pub mod dot;
pub mod error;
pub mod execution;
pub mod extnat;
pub mod format;
pub mod functor;
pub mod graph;
pub mod int;
pub mod project;

pub use alternating::{
    alternating_paths, derived_graph, prime_cycles, CycleClass, DerivedGraph, Orientation, Path,
    Side, Step,
};
pub use error::{Error, Result};
pub use execution::{execute, measure};
pub use extnat::ExtNat;
pub use graph::{flatten, Edge, EdgeId, Graph, Nested, VertexId};
