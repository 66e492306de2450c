use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{catalog, disjoint_linear_spaces, entry, scroll};
use crate::error::Result;
use crate::formulas::{
    binomial_identity, codim2_classify, curve_constraints, divisor_constraints, general_constraints, predict_acm,
    predict_min_degree, red2_predict, Codim2Type,
};
use crate::reductions::{first_reduction_check, second_reduction_check};
use crate::resolve::{betti_table, scheme_report, BettiTable};
use crate::ropes::{certify, degenerate_example, h1_presentation, RopeSpec};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// Acceptance criterion the check belongs to.
    pub criterion: u8,
    pub pass: bool,
    pub detail: String,
}

type CheckFn = fn(u32, u64) -> Result<(bool, String)>;

/// Built with the catalog's own seed.
fn table_of(name: &str, p: u32) -> Result<BettiTable> {
    betti_table(&entry(name)?.build(p)?)
}

fn golden(name: &str, p: u32, seed: u64) -> Result<(bool, String)> {
    let e = entry(name)?;
    let ideal = e.build_with_seed(p, seed)?;
    let rep = scheme_report(&ideal)?;
    let mism = e.expected.mismatches(&rep);
    let want = e.betti.clone().unwrap_or_default();
    let ok = mism.is_empty() && rep.betti == want && !rep.saturated_input;
    let detail = if ok {
        format!("{:?}", rep.betti.shape())
    } else {
        format!("got {:?}, expected {:?}; {}", rep.betti.shape(), want.shape(), mism.join("; "))
    };
    Ok((ok, detail))
}

fn rope_p5(p: u32, _: u64) -> Result<(bool, String)> {
    let (_, lin) = certify(&RopeSpec::bidiagonal(p, 5, 1)?)?;
    let (g, quad) = certify(&RopeSpec::bidiagonal(p, 5, 2)?)?;
    let printed = vec![
        vec![(2, 10), (3, 3)],
        vec![(3, 20), (4, 12)],
        vec![(4, 15), (5, 18)],
        vec![(5, 4), (6, 12)],
        vec![(7, 3)],
    ];
    let zero = (1..g.length()).all(|i| g.differential(i).compose(g.differential(i + 1)).is_ok_and(|m| m.is_zero()));
    let ok = lin.complex && lin.minimal && lin.matches_gb && quad.complex && quad.minimal && quad.matches_gb;
    let ok = ok && zero && quad.terms == printed && g.length() == 5;
    Ok((ok, format!("linear B terms {:?}; quadratic B terms {:?}", lin.terms, quad.terms)))
}

fn rope_degenerate(p: u32, _: u64) -> Result<(bool, String)> {
    let (_, c) = certify(&degenerate_example(p)?)?;
    Ok((c.complex && !c.minimal && c.matches_gb && c.degenerate, format!("{:?}", c.terms)))
}

fn first_red(p: u32, seed: u64) -> Result<(bool, String)> {
    let names = [
        "twisted-cubic",
        "rnc-4",
        "scroll-2-2",
        "curves-i-quartic",
        "curves-ii-monomial",
        "deg6-c1",
        "veronese-projection",
        "rope-p3",
    ];
    let mut depths = Vec::new();
    for n in names {
        let ideal = entry(n)?.build(p)?;
        let rep = first_reduction_check(&ideal, seed)?;
        if !(rep.equal() && rep.stable()) {
            return Ok((false, format!("{n}: image tables differ")));
        }
        depths.push(scheme_report(&ideal)?.depth);
    }
    depths.sort();
    depths.dedup();
    Ok((depths.len() >= 3, format!("{} entries, depths {depths:?}", names.len())))
}

fn second_red(name: &str, p: u32, seed: u64) -> Result<(bool, String)> {
    let rep = second_reduction_check(&entry(name)?.build(p)?, seed)?;
    Ok((rep.holds(), format!("quotient {:?}, quadric gain {}", rep.quotient_hf, rep.quadric_gain)))
}

fn buchsbaum(p: u32, seed: u64) -> Result<(bool, String)> {
    // H^1 of the ideal sheaf is K in degree 0, so the quotient is K(-1)
    let rep = second_reduction_check(&entry("buchsbaum-surface")?.build(p)?, seed)?;
    let ok = rep.quotient_degree == Some(1) && rep.horseshoe_violations.is_empty();
    Ok((ok, format!("quotient {:?}", rep.quotient_hf)))
}

fn curves(p: u32, _: u64) -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in ["deg6-c1", "deg6-c2"] {
        let t = table_of(n, p)?;
        let r = curve_constraints(5, &t)?;
        let d = divisor_constraints(5, 4, &t)?;
        let g = r.get("gamma_1 - beta_2").map_or(i64::MIN, |c| c.got);
        ok &= r.passed() && d.passed() && g == -3;
        detail.push(format!("{n}: gamma_1 - beta_2 = {g}"));
    }
    ok &= curve_constraints(3, &table_of("curves-i-quartic", p)?)?.passed();
    Ok((ok, detail.join(", ")))
}

fn general(p: u32, _: u64) -> Result<(bool, String)> {
    let v = general_constraints(4, 2, 1, &table_of("veronese-projection", p)?)?;
    let mut ok = v.passed() && v.get("delta_1").map(|c| c.got) == Some(0);
    for n in ["deg6-c1", "deg6-c2"] {
        let r = general_constraints(5, 4, 1, &table_of(n, p)?)?;
        ok &= r.passed() && r.get("delta_1").map(|c| c.got) == Some(8);
    }
    Ok((ok, "delta_1: 0 on the surface in P^4, 8 on both sextics".into()))
}

fn red2(p: u32, _: u64) -> Result<(bool, String)> {
    let mut ok = true;
    for n in [3, 5, 7] {
        let t = betti_table(&disjoint_linear_spaces(p, n)?)?;
        ok &= red2_predict(n)?.to_table() == Some(t);
    }
    Ok((ok, "n = 3, 5, 7".into()))
}

fn identity(_: u32, _: u64) -> Result<(bool, String)> {
    let ok = (1..=12).all(|q| (0..=2 * q).all(|j| {
        let (a, b) = binomial_identity(q, j);
        a == b
    }));
    Ok((ok, "1 <= q <= 12, 0 <= j <= 2q".into()))
}

fn classify(p: u32, _: u64) -> Result<(bool, String)> {
    let got = [
        codim2_classify(&table_of("curves-i-ci", p)?),
        codim2_classify(&table_of("curves-i-quartic", p)?),
        codim2_classify(&table_of("veronese-projection", p)?),
    ];
    let ok = got == [Codim2Type::Ci, Codim2Type::CurveType, Codim2Type::SurfaceType];
    Ok((ok, got.map(|t| t.to_string()).join(", ")))
}

fn min_degree(p: u32, _: u64) -> Result<(bool, String)> {
    let mut ok = true;
    for c in 1..=4u32 {
        ok &= predict_min_degree(c as usize)?.to_table() == Some(betti_table(&scroll(p, &[c + 1])?)?);
    }
    ok &= predict_acm(2)?.to_table() == Some(table_of("curves-i-ci", p)?);
    ok &= predict_acm(3)?.to_table() == Some(table_of("curves-ii-monomial-acm", p)?);
    Ok((ok, "rational normal curves c = 1..4, ACM c = 2, 3".into()))
}

fn h1_p5(p: u32, _: u64) -> Result<(bool, String)> {
    let h = h1_presentation(&RopeSpec::bidiagonal(p, 5, 1)?, -2, 10)?;
    Ok((h.holds(), format!("target degrees {:?}, length {}", h.target_degrees, h.length())))
}

fn h1_p3(p: u32, _: u64) -> Result<(bool, String)> {
    let h = h1_presentation(&RopeSpec::line_pair(p, 1)?, -2, 10)?;
    Ok((h.holds(), format!("coker {:?}", h.coker_hf.iter().filter(|x| x.1 != 0).collect::<Vec<_>>())))
}

fn fixed_checks() -> Vec<(&'static str, u8, CheckFn)> {
    vec![
        ("rope/p5-explicit-complex", 2, rope_p5),
        ("rope/degenerate", 2, rope_degenerate),
        ("reduction/first", 3, first_red),
        ("reduction/second/veronese-projection", 3, |p, s| second_red("veronese-projection", p, s)),
        ("reduction/second/deg6-c1", 3, |p, s| second_red("deg6-c1", p, s)),
        ("reduction/second/buchsbaum-surface", 3, buchsbaum),
        ("formula/curves", 4, curves),
        ("formula/general", 4, general),
        ("formula/two-linear-spaces", 4, red2),
        ("formula/binomial-identity", 4, identity),
        ("formula/codim2-classify", 4, classify),
        ("formula/minimal-degree-and-acm", 4, min_degree),
        ("h1/p5-double-line", 6, h1_p5),
        ("h1/p3-double-line", 6, h1_p3),
    ]
}

/// Runs every check whose name contains `filter`, sorted by name.
pub fn verify_paper(p: u32, seed: u64, filter: Option<&str>) -> Vec<CheckResult> {
    let mut jobs: Vec<(String, u8, Box<dyn Fn() -> Result<(bool, String)> + Send + Sync>)> = Vec::new();
    for e in catalog() {
        if e.betti.is_some() {
            let name = e.name.to_string();
            let s = e.seed.unwrap_or(seed);
            jobs.push((format!("table/{name}"), 1, Box::new(move || golden(&name, p, s))));
        }
    }
    for (name, crit, f) in fixed_checks() {
        jobs.push((name.to_string(), crit, Box::new(move || f(p, seed))));
    }
    jobs.retain(|j| filter.is_none_or(|f| j.0.contains(f)));
    let mut out: Vec<CheckResult> = jobs
        .par_iter()
        .map(|(name, criterion, f)| {
            let (pass, detail) = match f() {
                Ok(x) => x,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult {
                name: name.clone(),
                criterion: *criterion,
                pass,
                detail,
            }
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}
