//! Minimal dense-tensor engine with reverse-mode differentiation.
//!
//! Everything is 64-bit, row-major, and CPU-only. [`Value`] is a node in a
//! computation DAG; operations build new nodes and register their gradient
//! rules, and [`Value::backward`] walks the graph in reverse topological
//! order. Parameters are ordinary leaf `Value`s whose data the optimizer
//! mutates between steps; a graph instance is confined to one worker.

mod fd;
mod kernels;
mod ops;
mod shape;
mod value;

pub use fd::{check_gradients, FdGroupReport};
pub use shape::Shape;
pub use value::{concat_last, LinearParams, Value};

pub(crate) use kernels::{mm, mm_nt, mm_tn};
