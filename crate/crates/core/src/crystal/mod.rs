//! Rectangular crystals `B(dω_k)`: tableaux, crystal operators, promotion,
//! enumeration, Demazure crystals and characters.

mod enumerate;
mod operators;
mod promotion;
mod tableau;
mod weight;

pub use enumerate::{
    crystal_size, demazure_crystal, demazure_crystal_bfs, demazure_crystal_strings, enumerate_crystal, random_tableau,
    DEFAULT_CAP,
};
pub use operators::{apply_etilde, apply_ftilde};
pub use promotion::{promotion, promotion_inverse, promotion_orbit_powers, promotion_power};
pub use tableau::{make_extremal, Tableau};
pub use weight::{character_of_set, Term, WeightPolynomial};
