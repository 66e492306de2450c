//! Free resolutions by iterated Schreyer syzygies, minimalization, Betti tables and
//! numerical invariants.

mod betti;
mod hilbert;
mod report;
mod resolution;
mod syzygy;

pub use betti::BettiTable;
pub(crate) use betti::rank_mod_p;
pub use hilbert::{independent_set_dimension, monomial_numerator, HilbertSeries};
pub use report::{betti_table, hilbert_series, scheme_report, SchemeReport};
pub use resolution::{free_resolution, minimalize, schreyer_resolution, FreeResolution};
pub use syzygy::schreyer_syzygies;

#[cfg(test)]
mod tests;
