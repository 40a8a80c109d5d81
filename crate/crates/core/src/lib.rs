//! Matroid representations over finite fields: equivalence tests, coordinatization,
//! and isomorph-free generation of single-element extensions.

pub mod catalog;
pub mod cli;
pub mod coordinatize;
pub mod dsu;
pub mod equivalence;
pub mod error;
pub mod extension;
pub mod field;
pub mod io;
pub mod matrix;
pub mod matroid;
pub mod named;
pub mod report;

pub use equivalence::{ClassPartition, Relation};
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use matrix::{Label, Matrix, StandardForm, TransformWitness};
pub use matroid::Matroid;
