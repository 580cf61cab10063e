pub mod arith;
pub mod cli;
pub mod error;
pub mod fourmanifold;
pub mod knot;
pub mod lattice;
pub mod obstruction;
pub mod seifert;
pub mod tristram;

pub use error::{Error, Result};
