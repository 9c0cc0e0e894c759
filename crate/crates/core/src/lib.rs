//! Point-cloud attention laboratory.
//!
//! A desk-scale framework for studying attention module design on point
//! clouds: a minimal reverse-mode autodiff engine ([`numerics`]), point-cloud
//! ingestion and synthesis ([`pcio`]), strided multi-scale k-NN grouping
//! ([`neighborhood`]), the attention variant zoo ([`attention`]), the base
//! network with its training loop ([`framework`]), and a closed-form
//! parameter/FLOP cost model ([`analyzer`]).

pub mod analyzer;
pub mod attention;
pub mod error;
pub mod framework;
pub mod neighborhood;
pub mod numerics;
pub mod pcio;

pub use error::{Error, Result};
