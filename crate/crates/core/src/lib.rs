//! Bordered Floer calculus over the genus-1 torus algebra: type-D, type-DD and
//! A∞ structures for (2,2n)-torus-link complements and framed solid tori,
//! box tensor products, cancellation, and homology over F2.

pub mod algebra;
pub mod error;
pub mod structures;

pub use error::{Error, Result};
pub mod diagram;
pub mod format;
pub mod pairing;
pub mod solid_torus;
pub mod torus_link;
