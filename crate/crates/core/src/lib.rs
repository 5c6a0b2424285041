//! Exact computations for tilings of a triangle by copies of an integer tile
//! with a 120° angle.

pub mod boundary;
pub mod cli;
pub mod golden;
pub mod numerics;
pub mod numtheory;
pub mod output;
pub mod render;
pub mod shapes;
pub mod tiler;
