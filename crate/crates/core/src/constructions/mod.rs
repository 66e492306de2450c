//! Explicit ideals: linear spaces, scrolls, monomial curves, the small-degree examples, and a
//! named catalog carrying expected invariants.

mod builders;

pub use builders::{
    buchsbaum_surface, ci_two_quadrics, disjoint_linear_spaces, linear_space, manolache_double,
    monomial_curve, scroll, scroll_quintic, veronese_projection,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::resolve::{BettiTable, SchemeReport};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Printed in the literature.
    Published,
    /// Computed by an independent route (closed form, hand count, other algorithm).
    Derived,
    Trivial,
}

/// Expected values for some fields of a [`SchemeReport`]; `None` means unchecked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReportFragment {
    pub dim: Option<i64>,
    pub codim: Option<i64>,
    pub degree: Option<i64>,
    pub depth: Option<i64>,
    pub pd: Option<usize>,
    pub is_acm: Option<bool>,
}

impl ReportFragment {
    /// Human-readable descriptions of every field that disagrees with `r`.
    pub fn mismatches(&self, r: &SchemeReport) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |name: &str, want: Option<String>, got: String| {
            if let Some(w) = want {
                if w != got {
                    out.push(format!("{name}: expected {w}, computed {got}"));
                }
            }
        };
        check("dim", self.dim.map(|v| v.to_string()), r.dim.to_string());
        check("codim", self.codim.map(|v| v.to_string()), r.codim.to_string());
        check("degree", self.degree.map(|v| v.to_string()), r.degree.to_string());
        check("depth", self.depth.map(|v| v.to_string()), r.depth.to_string());
        check("pd", self.pd.map(|v| v.to_string()), r.pd.to_string());
        check("is_acm", self.is_acm.map(|v| v.to_string()), r.is_acm.to_string());
        out
    }
}

type Builder = fn(u32, u64) -> Result<Ideal>;

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Builder call in words, for display.
    pub params: String,
    /// Seed of the pseudo-random choices, if any were made.
    pub seed: Option<u64>,
    pub expected: ReportFragment,
    pub report_provenance: Provenance,
    /// Expected Betti table of `R/I`.
    pub betti: Option<BettiTable>,
    pub betti_provenance: Option<Provenance>,
    #[serde(skip)]
    builder: Builder,
}

impl CatalogEntry {
    pub fn build(&self, p: u32) -> Result<Ideal> {
        (self.builder)(p, self.seed.unwrap_or(0))
    }

    pub fn build_with_seed(&self, p: u32, seed: u64) -> Result<Ideal> {
        (self.builder)(p, seed)
    }
}

/// Betti table of `R/I` from the entries of the ideal's resolution.
pub fn quotient_table(entries: &[(usize, i32, u64)]) -> BettiTable {
    let mut t = BettiTable::from_entries(entries.iter().map(|&(i, j, b)| ((i, j), b)));
    t.add(0, 0, 1);
    t
}

fn frag(dim: i64, codim: i64, degree: i64, depth: i64, is_acm: bool) -> ReportFragment {
    ReportFragment {
        dim: Some(dim),
        codim: Some(codim),
        degree: Some(degree),
        depth: Some(depth),
        pd: None,
        is_acm: Some(is_acm),
    }
}

struct Spec {
    name: &'static str,
    params: &'static str,
    seed: Option<u64>,
    expected: ReportFragment,
    report_provenance: Provenance,
    betti: Option<(&'static [(usize, i32, u64)], Provenance)>,
    builder: Builder,
}

fn specs() -> Vec<Spec> {
    use Provenance::*;
    vec![
        Spec {
            name: "line-p3",
            params: "linear_space([0, 1], 3)",
            seed: None,
            expected: frag(1, 2, 1, 2, true),
            report_provenance: Trivial,
            betti: Some((&[(1, 1, 2), (2, 2, 1)], Trivial)),
            builder: |p, _| linear_space(p, &[0, 1], 3),
        },
        Spec {
            name: "point-p2",
            params: "linear_space([0, 1], 2)",
            seed: None,
            expected: frag(0, 2, 1, 1, true),
            report_provenance: Trivial,
            betti: Some((&[(1, 1, 2), (2, 2, 1)], Trivial)),
            builder: |p, _| linear_space(p, &[0, 1], 2),
        },
        Spec {
            name: "plane-p5",
            params: "linear_space([0, 1, 2], 5)",
            seed: None,
            expected: frag(2, 3, 1, 3, true),
            report_provenance: Trivial,
            betti: Some((&[(1, 1, 3), (2, 2, 3), (3, 3, 1)], Trivial)),
            builder: |p, _| linear_space(p, &[0, 1, 2], 5),
        },
        Spec {
            name: "twisted-cubic",
            params: "scroll([3])",
            seed: None,
            expected: frag(1, 2, 3, 2, true),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 3), (2, 3, 2)], Derived)),
            builder: |p, _| scroll(p, &[3]),
        },
        Spec {
            name: "quadric-surface",
            params: "scroll([1, 1])",
            seed: None,
            expected: frag(2, 1, 2, 3, true),
            report_provenance: Trivial,
            betti: Some((&[(1, 2, 1)], Trivial)),
            builder: |p, _| scroll(p, &[1, 1]),
        },
        Spec {
            name: "scroll-1-3",
            params: "scroll([1, 3])",
            seed: None,
            expected: frag(2, 3, 4, 3, true),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 6), (2, 3, 8), (3, 4, 3)], Derived)),
            builder: |p, _| scroll(p, &[1, 3]),
        },
        Spec {
            name: "scroll-2-2",
            params: "scroll([2, 2])",
            seed: None,
            expected: frag(2, 3, 4, 3, true),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 6), (2, 3, 8), (3, 4, 3)], Derived)),
            builder: |p, _| scroll(p, &[2, 2]),
        },
        Spec {
            name: "rnc-4",
            params: "monomial_curve([4, 3, 2, 1, 0])",
            seed: None,
            expected: frag(1, 3, 4, 2, true),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 6), (2, 3, 8), (3, 4, 3)], Derived)),
            builder: |p, _| monomial_curve(p, &[4, 3, 2, 1, 0]),
        },
        Spec {
            name: "curves-i-ci",
            params: "ci_two_quadrics(3)",
            seed: Some(1),
            expected: frag(1, 2, 4, 2, true),
            report_provenance: Trivial,
            betti: Some((&[(1, 2, 2), (2, 4, 1)], Published)),
            builder: |p, s| ci_two_quadrics(p, 3, s),
        },
        Spec {
            name: "curves-i-quartic",
            params: "monomial_curve([4, 3, 1, 0])",
            seed: None,
            expected: frag(1, 2, 4, 1, false),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 1), (1, 3, 3), (2, 4, 4), (3, 5, 1)], Published)),
            builder: |p, _| monomial_curve(p, &[4, 3, 1, 0]),
        },
        Spec {
            name: "curves-ii-scroll-quintic",
            params: "scroll_quintic()",
            seed: Some(1),
            expected: frag(1, 3, 5, 2, true),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 5), (2, 3, 5), (3, 5, 1)], Published)),
            builder: scroll_quintic,
        },
        Spec {
            name: "curves-ii-monomial-acm",
            params: "monomial_curve([5, 4, 3, 2, 0])",
            seed: None,
            expected: frag(1, 3, 5, 2, true),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 5), (2, 3, 5), (3, 5, 1)], Published)),
            builder: |p, _| monomial_curve(p, &[5, 4, 3, 2, 0]),
        },
        Spec {
            name: "curves-ii-monomial",
            params: "monomial_curve([5, 4, 2, 1, 0])",
            seed: None,
            expected: frag(1, 3, 5, 1, false),
            report_provenance: Derived,
            betti: Some((
                &[(1, 2, 4), (1, 3, 1), (2, 3, 2), (2, 4, 6), (3, 5, 5), (4, 6, 1)],
                Published,
            )),
            builder: |p, _| monomial_curve(p, &[5, 4, 2, 1, 0]),
        },
        Spec {
            name: "deg6-c1",
            params: "monomial_curve([6, 5, 3, 2, 1, 0])",
            seed: None,
            expected: frag(1, 4, 6, 1, false),
            report_provenance: Published,
            betti: Some((
                &[(1, 2, 8), (1, 3, 1), (2, 3, 12), (2, 4, 4), (3, 4, 3), (3, 5, 10), (4, 6, 6), (5, 7, 1)],
                Published,
            )),
            builder: |p, _| monomial_curve(p, &[6, 5, 3, 2, 1, 0]),
        },
        Spec {
            name: "deg6-c2",
            params: "monomial_curve([6, 5, 4, 2, 1, 0])",
            seed: None,
            expected: frag(1, 4, 6, 1, false),
            report_provenance: Published,
            betti: Some((
                &[(1, 2, 8), (2, 3, 11), (2, 4, 4), (3, 4, 3), (3, 5, 10), (4, 6, 6), (5, 7, 1)],
                Published,
            )),
            builder: |p, _| monomial_curve(p, &[6, 5, 4, 2, 1, 0]),
        },
        Spec {
            name: "veronese-projection",
            params: "veronese_projection()",
            seed: Some(1),
            expected: frag(2, 2, 4, 1, false),
            report_provenance: Published,
            betti: Some((&[(1, 3, 7), (2, 4, 10), (3, 5, 5), (4, 6, 1)], Published)),
            builder: veronese_projection,
        },
        Spec {
            name: "disjoint-lines",
            params: "disjoint_linear_spaces(3)",
            seed: None,
            expected: frag(1, 2, 2, 1, false),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 4), (2, 3, 4), (3, 4, 1)], Derived)),
            builder: |p, _| disjoint_linear_spaces(p, 3),
        },
        Spec {
            name: "disjoint-planes",
            params: "disjoint_linear_spaces(5)",
            seed: None,
            expected: frag(2, 3, 2, 1, false),
            report_provenance: Derived,
            betti: Some((&[(1, 2, 9), (2, 3, 18), (3, 4, 15), (4, 5, 6), (5, 6, 1)], Derived)),
            builder: |p, _| disjoint_linear_spaces(p, 5),
        },
        Spec {
            name: "buchsbaum-surface",
            params: "buchsbaum_surface()",
            seed: None,
            expected: frag(2, 3, 2, 1, false),
            report_provenance: Published,
            betti: Some((&[(1, 2, 9), (2, 3, 18), (3, 4, 15), (4, 5, 6), (5, 6, 1)], Published)),
            builder: |p, _| buchsbaum_surface(p),
        },
        Spec {
            name: "manolache-double",
            params: "manolache_double(2, 4)",
            seed: None,
            expected: frag(2, 2, 2, 3, true),
            report_provenance: Trivial,
            betti: Some((&[(1, 1, 1), (1, 2, 1), (2, 3, 1)], Derived)),
            builder: |p, _| manolache_double(p, 2, 4),
        },
    ]
}

/// Every named construction, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = specs()
        .into_iter()
        .map(|s| CatalogEntry {
            name: s.name,
            params: s.params.to_string(),
            seed: s.seed,
            expected: s.expected,
            report_provenance: s.report_provenance,
            betti: s.betti.map(|(e, _)| quotient_table(e)),
            betti_provenance: s.betti.map(|(_, p)| p),
            builder: s.builder,
        })
        .collect();
    out.extend(crate::ropes::catalog_entries());
    out
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Argument(format!("unknown catalog entry `{name}`")))
}

impl CatalogEntry {
    pub(crate) fn new(
        name: &'static str,
        params: String,
        expected: ReportFragment,
        report_provenance: Provenance,
        betti: Option<(BettiTable, Provenance)>,
        builder: Builder,
    ) -> Self {
        CatalogEntry {
            name,
            params,
            seed: None,
            expected,
            report_provenance,
            betti_provenance: betti.as_ref().map(|b| b.1),
            betti: betti.map(|b| b.0),
            builder,
        }
    }
}
