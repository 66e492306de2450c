//! Ropes on a line: their ideals, the explicit resolution `G_•`, the induction sequence and
//! the first cohomology module.

mod cohomology;
mod complex;
mod spec;

pub use cohomology::{h1_presentation, rope_induction_sequence, H1Presentation, InductionReport};
pub use complex::{
    koszul_complex, koszul_differential, rope_complex, split_complement, square_resolution, SplitComplement,
    SplitPart,
};
pub use spec::{line_ring, rope_ideal, rope_ring, RopeSpec};

use serde::Serialize;

use crate::constructions::{quotient_table, CatalogEntry, Provenance, ReportFragment};
use crate::error::Result;
use crate::resolve::{betti_table, minimalize, BettiTable, FreeResolution};

/// Outcome of building `G_•` and comparing it with an independent resolution.
#[derive(Clone, Debug, Serialize)]
pub struct RopeCertificate {
    /// `(rank, [(twist, count)])` of each `G_i`, `i >= 1`.
    pub terms: Vec<Vec<(i32, usize)>>,
    pub complex: bool,
    pub minimal: bool,
    /// Betti table of `G_•` after cancelling unit entries equals the Gröbner one.
    pub matches_gb: bool,
    pub degenerate: bool,
    pub gb_table: BettiTable,
}

pub fn certify(spec: &RopeSpec) -> Result<(FreeResolution, RopeCertificate)> {
    let g = rope_complex(spec)?;
    let gb_table = betti_table(&rope_ideal(spec)?)?;
    let reduced = BettiTable::from_resolution(&minimalize(&g));
    let cert = RopeCertificate {
        terms: g.modules()[1..].iter().map(|m| m.shape()).collect(),
        complex: g.is_complex(),
        minimal: g.is_minimal(),
        matches_gb: reduced == gb_table,
        degenerate: gb_table.get(1, 1) > 0,
        gb_table,
    };
    Ok((g, cert))
}

/// `B` with a unit entry: the rope lies in the hyperplane `x_0 = 0`.
pub fn degenerate_example(p: u32) -> Result<RopeSpec> {
    let s = line_ring(p)?;
    let (t, u, z) = (s.var(0), s.var(1), s.zero());
    RopeSpec::from_rows(
        5,
        &s,
        vec![
            vec![s.one(), z.clone(), z.clone()],
            vec![z.clone(), t.clone(), z.clone()],
            vec![z.clone(), -&u, t.clone()],
            vec![z.clone(), z.clone(), -&u],
        ],
    )
}

pub(crate) fn catalog_entries() -> Vec<CatalogEntry> {
    use Provenance::*;
    let curve = |deg, codim, depth| ReportFragment {
        dim: Some(1),
        codim: Some(codim),
        degree: Some(deg),
        depth: Some(depth),
        pd: None,
        is_acm: Some(false),
    };
    vec![
        CatalogEntry::new(
            "rope-p3",
            "line_pair(1): (x0, x1)^2 + (x0 t + x1 u)".into(),
            curve(2, 2, 1),
            Derived,
            Some((quotient_table(&[(1, 2, 4), (2, 3, 4), (3, 4, 1)]), Published)),
            |p, _| rope_ideal(&RopeSpec::line_pair(p, 1)?),
        ),
        CatalogEntry::new(
            "rope-p5",
            "bidiagonal(5, 1): (x0..x3)^2 + (x0 t - x1 u, x1 t - x2 u, x2 t - x3 u)".into(),
            curve(2, 4, 1),
            Derived,
            Some((
                quotient_table(&[(1, 2, 13), (2, 3, 32), (3, 4, 33), (4, 5, 16), (5, 6, 3)]),
                Derived,
            )),
            |p, _| rope_ideal(&RopeSpec::bidiagonal(p, 5, 1)?),
        ),
        CatalogEntry::new(
            "rope-p5-quadratic",
            "bidiagonal(5, 2): B with entries t^2, -u^2".into(),
            curve(2, 4, 1),
            Derived,
            Some((
                quotient_table(&[
                    (1, 2, 10),
                    (1, 3, 3),
                    (2, 3, 20),
                    (2, 4, 12),
                    (3, 4, 15),
                    (3, 5, 18),
                    (4, 5, 4),
                    (4, 6, 12),
                    (5, 7, 3),
                ]),
                Published,
            )),
            |p, _| rope_ideal(&RopeSpec::bidiagonal(p, 5, 2)?),
        ),
    ]
}

#[cfg(test)]
mod tests;
