//! Rank-metric coding workbench.
//!
//! Finite-field and linearized-polynomial arithmetic, Gabidulin codes with
//! error and erasure decoding, q-cyclic codes, LCD codes, integer rank-distance
//! codes over Z_2m, concatenated rank-metric codes and channel simulation.

pub mod blockcode;
pub mod channel;
pub mod concat;
pub mod error;
pub mod gf;
pub mod lcd;
pub mod linpoly;
pub mod mird;
pub mod mrd;
pub mod qcyclic;
pub mod ranklin;

pub use error::{Error, Result};
pub use gf::{Elem, Field};
