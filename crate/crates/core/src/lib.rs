//! Decision procedures for relative presentations `⟨G, x | x g1 x g2 x g3 x⁻¹ g4⟩`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is pure and
//! deterministic; IO, file formats and the command line live in the `asphere`
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classifier;
pub mod cosetenum;
pub mod curvature;
mod error;
pub mod groups;
pub mod intmat;
pub mod pictures;
pub mod presentation;
pub mod stargraph;
pub mod weights;

pub use error::{Error, Result};

/// Exact rationals used for weights and curvature.
pub type Rational = num_rational::Ratio<i64>;

pub(crate) mod prelude {
    pub use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
    pub use alloc::format;
    pub use alloc::string::{String, ToString};
    pub use alloc::sync::Arc;
    pub use alloc::vec;
    pub use alloc::vec::Vec;
}
