//! Crystal operators on key tabloids, Demazure crystals and the
//! Demazure expansion of nonsymmetric Macdonald polynomials at t = 0.

pub mod comb;
pub mod crystal;
pub mod demazure;
pub mod diagram;
pub mod error;
pub mod expansion;
pub mod poly;
pub mod ssyt;
pub mod tabloid;
pub mod tabloid_crystal;
pub mod verify;

pub use comb::{Composition, Partition, Permutation};
pub use crystal::CrystalGraph;
pub use diagram::{aries, diagram_of, Diagram};
pub use error::{Error, Result};
pub use poly::{Poly, QPoly};
pub use ssyt::Tableau;
pub use tabloid::KeyTabloid;
