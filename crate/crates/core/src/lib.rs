//! Exact computations with matroids, smooth complete fans and tropical toric
//! vector bundles.
//!
//! A bundle is a triple `(matroid, fan, diagram)`: one Bergman point of the
//! matroid per ray of the fan, such that the rows of each maximal cone share an
//! apartment. Everything here is integral or rational; there are no floats.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! parallel sweeps live in the `tbk` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bergman;
pub mod bundle;
mod error;
pub mod ext_split;
pub mod fan;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod polyhedron;
mod set;
pub mod tautological;

pub use error::{Error, Result};
pub use set::Set;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
