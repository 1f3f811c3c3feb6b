//! Combinatorial classifying spaces of finite monoids and categories.
//!
//! The crate builds nerves as truncated simplicial sets, computes their
//! integer homology exactly, and checks the equivariant statements about
//! fixed points of group actions on monoids level by level.

#![allow(clippy::needless_range_loop)]

pub mod catmon;
pub mod delta;
pub mod equivariant;
mod error;
pub mod fixtures;
pub mod formats;
pub mod homology;
pub mod mcduff;
pub mod realize;
pub mod sset;

pub use error::{Error, Result};
