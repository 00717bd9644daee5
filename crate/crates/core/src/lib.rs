//! Exact combinatorics of rectangular crystals with promotion, Grassmann
//! necklaces and positroids, cyclic Demazure crystals, and the degree-two
//! Temperley-Lieb basis of the Grassmannian coordinate ring, with exact
//! evaluation of Plücker coordinates to certify identities numerically.

pub mod crystal;
pub mod cyclic_demazure;
pub mod error;
pub mod pluecker;
pub mod positroid;
pub mod subsets;
pub mod temperley_lieb;

pub use error::{Error, Result};
pub use subsets::{KSubset, StandardPair};
