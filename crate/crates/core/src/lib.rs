//! Point-set models of retractive spaces and parametrised spectra over finite
//! simplicial sets.
//!
//! Everything here is finite and exact: simplicial sets are stored by their
//! nondegenerate simplices, and every constructed comparison map can be
//! checked to be an isomorphism.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod digest;
pub mod global;
pub mod invariants;
pub mod koszul;
pub mod retractive;
pub mod spectra;
pub mod sset;

pub use error::{Error, Result};
