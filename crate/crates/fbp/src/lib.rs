//! File formats, SVG rendering and the command-line driver on top of
//! `fbp-core`.

pub mod cli;
pub mod io;
pub mod svg;
