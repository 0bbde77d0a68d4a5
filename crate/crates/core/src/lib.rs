//! Combinatorics of min-plus tropical hyperplane arrangements.
//!
//! The columns of an `n x d` rational matrix `M` are apexes of min-plus
//! tropical hyperplanes in `R^n`. This crate computes the types of points,
//! decides satisfiability of Boolean matrices, builds the max-plus
//! permanent structure of `M`, enumerates the face poset of the induced
//! tropical complex and lets the face monoid of the braid arrangement act on
//! it. Predicates are decided twice, once combinatorially and once
//! geometrically, so the two routes can be checked against each other.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod boolmat;
pub mod complex;
mod diffcon;
pub mod error;
pub mod facemonoid;
pub mod permanent;
pub mod scalar;
pub mod subset;
pub mod tropical;

pub use boolmat::{BoolMatrix, PartialBijection};
pub use complex::{FacePoset, TypeCell};
pub use error::{Error, Result};
pub use facemonoid::OrderedSetPartition;
pub use permanent::PermanentStructure;
pub use scalar::Scalar;
pub use tropical::{Arrangement, Point};
