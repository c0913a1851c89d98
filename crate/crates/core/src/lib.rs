//! Finite groups as Cayley tables, coprime automorphism actions, and
//! executable checks of classification results about maximal invariant
//! subgroups.
//!
//! The pipeline is: build a [`GroupTable`] (from permutations, products, or
//! the [`catalog`]), enumerate its [`SubgroupLattice`], pick an
//! [`ActionGroup`], wrap everything in a [`checks::Context`], and run the
//! checkers in [`checks`]. [`report`] runs whole campaigns and serializes
//! the results.

pub mod action;
pub mod arith;
pub mod bits;
pub mod catalog;
pub mod checks;
pub mod error;
pub mod format;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod report;
pub mod structure;

pub use action::{ActionGroup, Automorphism};
pub use error::{GroupError, Result};
pub use group::{ElemId, GroupTable, Subgroup};
pub use lattice::SubgroupLattice;
pub use perm::Permutation;
