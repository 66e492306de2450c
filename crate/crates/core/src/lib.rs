pub mod cli;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod groebner;
pub mod modfree;
pub mod resolve;
pub mod ring;
pub mod reductions;
pub mod ropes;

pub use error::{Error, Result};
