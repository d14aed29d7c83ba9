//! Finite-dimensional algebra engine: path algebras with relations, their
//! modules, homological invariants, cluster tilting subcategories and the
//! stabilization of their syzygy functor.

pub mod error;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod homology;
pub mod tilting;
pub mod nakayama;
pub mod stab;
pub mod io;
pub mod fixtures;

pub use error::{Error, Result};
