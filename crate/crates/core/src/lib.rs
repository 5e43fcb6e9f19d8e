//! Fan-bundle-planar drawings as checkable combinatorial objects.
//!
//! The crate is `no_std` with `alloc`. Text formats, rendering and the
//! command line live in the `fbp` crate.

#![no_std]

extern crate alloc;

pub mod connectivity;
pub mod drawing;
pub mod embed;
pub mod generate;
pub mod graph;
pub mod k3n;
pub mod oracles;
pub mod recognize;
pub mod reduction;
pub mod rotation;

pub use drawing::{validate, ArcKey, Attach, Bundle, BundledDrawing, ValidationReport, Variant};
pub use graph::{degree_profile, DegreeProfile, Graph, GraphError};
pub use rotation::RotationSystem;
