//! Exact lattice-ordered algebra structures on model AM- and AL-spaces.

pub mod al;
pub mod cli;
pub mod error;
pub mod falgebra;
pub mod hom;
pub mod operator;
pub mod scalar;
pub mod space;
pub mod spectrum;
pub mod sweep;

pub use error::{Error, Result};
pub use scalar::Rational;
pub use space::{Element, ModelSpace, Side};
pub use spectrum::{AtomId, DualAtom};
