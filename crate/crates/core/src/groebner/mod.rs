//! Buchberger's algorithm for ideals and submodules, normal forms, and ideal operations.

mod basis;
pub(crate) mod engine;
mod ideal;
pub mod verify;

pub use basis::GroebnerBasis;
pub use ideal::{toric_curve_ideal, Ideal};

#[cfg(test)]
mod tests;
