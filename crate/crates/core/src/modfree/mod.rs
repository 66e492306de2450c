//! Graded free modules, sparse module elements, matrices and module orders.

mod element;
mod matrix;
mod module;
mod order;

pub use element::ModuleElement;
pub use matrix::RingMatrix;
pub use module::{subset_index, subsets, GradedFreeModule};
pub use order::{BottomScheme, ModuleOrder, SchreyerFrame, SchreyerKey};
