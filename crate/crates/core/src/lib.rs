//! Crystal combinatorics of type G2: Kashiwara operators on words, the
//! plactic monoid, Robinson-Schensted insertion, and the canonical basis of
//! the irreducible U_q(G2)-modules computed in exact Laurent arithmetic.

pub mod canonical;
pub mod crystal;
pub mod error;
pub mod lattice;
pub mod laurent;
pub mod modules;
pub mod plactic;
pub mod tableaux;
pub mod weight;

pub use canonical::{BasisMatrix, MonomialWord};
pub use crystal::{Direction, Letter, Word};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use modules::ModuleVector;
pub use tableaux::{Column, OscillatingTableau, Shape, Tableau, Tabloid};
pub use weight::{Node, Weight};
