//! Generic 2D rigidity of graphs and its relation to the adjacency
//! spectrum.

pub mod graphcore;
pub mod oracle;
pub mod rigidity;
pub mod spectral;
pub mod verify;
