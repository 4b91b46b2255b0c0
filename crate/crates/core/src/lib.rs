//! Rainbows, coherent configurations and Jordan schemes.
//!
//! The crate builds and verifies partitions of `Ω²` with exact integer arithmetic:
//!
//! * [`rainbow`], [`relation`], [`matrix`]: the carriers (color matrices, 0/1 relations,
//!   integer matrices) and the products between them;
//! * [`verify`]: the coherence and Jordan regularity conditions, intersection tensors,
//!   strongly regular graph checks and the multiplication tables of the switching family;
//! * [`closure`]: coherent (Weisfeiler–Leman) and Jordan stabilization, plus the properness
//!   test;
//! * [`construct`]: the rank-5 Jordan schemes over `Z_3^d`, cyclotomic cover schemes over
//!   `GF(2^k)` and the switched schemes built from them.

pub mod closure;
pub mod construct;
pub mod error;
pub mod io;
pub mod matrix;
pub mod rainbow;
pub mod relation;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::{star_doubled, CountMatrix};
pub use rainbow::{Color, Rainbow, StandardBasis, StructureReport};
pub use relation::{compose, relational_star, Relation};
