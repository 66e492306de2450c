//! One line per acceptance criterion.

use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use smalldeg::cli::{parse_ideal_file, verify_paper, CheckResult, ParseOptions};
use smalldeg::constructions::{catalog, ci_two_quadrics, entry};
use smalldeg::groebner::verify::{buchberger_violation, is_reduced};
use smalldeg::groebner::Ideal;
use smalldeg::reductions::second_reduction_check;
use smalldeg::resolve::{free_resolution, scheme_report, schreyer_resolution, BettiTable, HilbertSeries};
use smalldeg::ring::{binomial, Monomial, Polynomial, Ring, DEFAULT_CHARACTERISTIC as P};
use smalldeg::ropes::{rope_complex, RopeSpec};
use smalldeg::Error;

fn line(n: u8, pass: bool, detail: &str) -> bool {
    println!("criterion {n}: {} - {detail}", if pass { "PASS" } else { "FAIL" });
    pass
}

fn partial(n: u8, pass: bool, detail: &str) -> bool {
    println!("criterion {n}: {} - {detail}", if pass { "PARTIAL" } else { "FAIL" });
    pass
}

fn group(results: &[CheckResult], n: u8) -> (bool, Vec<String>) {
    let mine: Vec<&CheckResult> = results.iter().filter(|r| r.criterion == n).collect();
    let failed: Vec<String> = mine.iter().filter(|r| !r.pass).map(|r| format!("{}: {}", r.name, r.detail)).collect();
    (!mine.is_empty() && failed.is_empty(), failed)
}

fn golden_tables() -> bool {
    let start = Instant::now();
    let results = verify_paper(P, 0, Some("table/"));
    let (ok, failed) = group(&results, 1);
    // independent oracle: Tor computed from the unminimized Schreyer resolution
    let mut tor_ok = true;
    for e in catalog().into_iter().filter(|e| e.betti.is_some()) {
        let ideal = e.build(P).unwrap();
        tor_ok &= BettiTable::from_tor(&schreyer_resolution(&ideal).unwrap()) == *e.betti.as_ref().unwrap();
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = ok && tor_ok && secs < 120.0;
    line(1, pass, &format!("{} tables equal by GB and by Tor, {secs:.1}s {:?}", results.len(), failed))
}

fn rope_complex_criterion() -> bool {
    let results = verify_paper(P, 0, Some("rope/"));
    let (ok, failed) = group(&results, 2);
    let g = rope_complex(&RopeSpec::bidiagonal(P, 5, 1).unwrap()).unwrap();
    let stages = (1..g.length()).filter(|&i| g.differential(i).compose(g.differential(i + 1)).unwrap().is_zero()).count();
    let pass = ok && g.length() == 5 && stages == 4 && g.differential(1).compose(g.differential(2)).is_ok();
    line(2, pass, &format!("d'd' = 0 at all {} compositions of the 5-term G; degenerate spec non-minimal {failed:?}", stages))
}

fn reductions_criterion() -> bool {
    let results = verify_paper(P, 0, Some("reduction/"));
    let (ok, failed) = group(&results, 3);
    let b = second_reduction_check(&entry("buchsbaum-surface").unwrap().build(P).unwrap(), 0).unwrap();
    // the stated K(-2) cannot hold here: H^1 of the ideal sheaf is K in degree 0
    let deviation = !b.k_minus_two && b.quotient_degree == Some(1);
    partial(
        3,
        ok && deviation,
        &format!(
            "first reduction on 8 entries (depths 1-3); K(-2) and one quadric cancelled on veronese-projection and deg6-c1; \
             buchsbaum-surface quotient is {:?} = K(-1), not K(-2) (infeasible as stated{}) {failed:?}",
            b.quotient_hf,
            if deviation { ", verified K(-1)" } else { "" }
        ),
    )
}

fn formulas_criterion() -> bool {
    let results = verify_paper(P, 0, Some("formula/"));
    let (ok, failed) = group(&results, 4);
    line(4, ok, &format!("{} formula checks {failed:?}", results.len()))
}

fn cohomology_criterion() -> bool {
    let results = verify_paper(P, 0, Some("h1/"));
    let (ok, failed) = group(&results, 6);
    line(6, ok, &format!("4-term Hilbert identity in degrees -2..10 for both double lines {failed:?}"))
}

/// `HF(R/I)(d)` from the Betti table: `Σ (-1)^i β_{i,j} C(d - j + n - 1, n - 1)`.
fn hf_from_betti(t: &BettiTable, nvars: usize, d: i32) -> i64 {
    t.entries()
        .iter()
        .filter(|(k, _)| d - k.1 >= 0)
        .map(|(&(i, j), &b)| {
            let s = if i % 2 == 0 { 1 } else { -1 };
            s * b as i64 * binomial((d - j) as i64 + nvars as i64 - 1, nvars as i64 - 1)
        })
        .sum()
}

fn euler_identity(ideal: &Ideal) -> bool {
    let t = BettiTable::from_resolution(&free_resolution(ideal).unwrap());
    let h = HilbertSeries::of_ideal(ideal);
    let n = ideal.ring().nvars();
    (0..=t.regularity() + 6).all(|d| hf_from_betti(&t, n, d) == h.function(d))
}

fn random_ideal(ring: &Ring, seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ring.nvars();
    let ngens = rng.gen_range(1..=3);
    let gens = (0..ngens)
        .map(|_| {
            let d = rng.gen_range(1..=3u32);
            let terms = (0..rng.gen_range(1..=3))
                .map(|_| {
                    let mut e = vec![0u32; n];
                    for _ in 0..d {
                        e[rng.gen_range(0..n)] += 1;
                    }
                    (Monomial::from_exponents(&e).unwrap(), rng.gen_range(1..P))
                })
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}

fn invariants_criterion() -> bool {
    let mut notes = Vec::new();
    let mut pass = true;

    let suite: Vec<Ideal> = catalog().iter().map(|e| e.build(P).unwrap()).collect();
    let euler = suite.iter().all(euler_identity);
    notes.push(format!("Euler identity on {} catalog resolutions", suite.len()));
    pass &= euler;

    let acm: Vec<(&str, i64)> = vec![("curves-i-ci", 2), ("curves-ii-monomial-acm", 3), ("curves-ii-scroll-quintic", 3)];
    let hv = acm.iter().all(|&(n, c)| {
        let r = scheme_report(&entry(n).unwrap().build(P).unwrap()).unwrap();
        r.is_acm && r.degree == c + 2 && r.h_vector == vec![1, c, 1]
    });
    pass &= hv;

    let depth_pd = suite.iter().all(|i| {
        let r = scheme_report(i).unwrap();
        r.depth + r.pd as i64 == r.nvars as i64
    });
    pass &= depth_pd;

    let mut runner = TestRunner::new(Config { cases: 48, ..Config::default() });
    let ring = Ring::standard(P, 4).unwrap();
    let random = runner.run(&any::<u64>(), |seed| {
        let i = random_ideal(&ring, seed);
        if i.is_zero() {
            return Ok(());
        }
        prop_assert!(euler_identity(&i));
        prop_assert!(buchberger_violation(i.gb()).is_none());
        prop_assert!(is_reduced(i.gb()));
        let m = Ideal::maximal(&ring);
        let s = i.saturate(&m).unwrap();
        prop_assert!(s.saturate(&m).unwrap().equals(&s));
        if !i.is_unit() {
            let t = BettiTable::from_resolution(&free_resolution(&i).unwrap());
            prop_assert!(t.pd() <= ring.nvars());
        }
        Ok(())
    });
    pass &= random.is_ok();
    notes.push("random ideals: Euler identity, GB re-verified, saturation idempotent".into());

    let mut runner = TestRunner::new(Config { cases: 8, ..Config::default() });
    let ci = runner.run(&(3usize..=5, any::<u64>()), |(n, seed)| {
        let r = scheme_report(&ci_two_quadrics(P, n, seed % 1000).unwrap()).unwrap();
        prop_assert_eq!(r.h_vector, vec![1, 2, 1]);
        prop_assert_eq!(r.depth + r.pd as i64, n as i64 + 1);
        Ok(())
    });
    pass &= ci.is_ok();

    let fuzz = parser_fuzz(1000);
    notes.push(format!("parser fuzz: {fuzz:?}"));
    pass &= fuzz.is_ok();

    line(5, pass, &notes.join("; "))
}

/// Random token-level mutations of a valid file: substitute, delete, duplicate or insert.
fn parser_fuzz(count: usize) -> std::result::Result<usize, String> {
    let base = "ring char=32003 vars=x0,x1,x2,x3 order=grevlex;\n# twisted cubic\ngens: x0*x2-x1^2, x0*x3-x1*x2, x1*x3-x2^2;\n";
    let pieces = ["x0", "x9", "*", "^", "+", "-", ",", ";", ":", "=", "7", "99999999999999999999", " ", "\n", "#", "(", "gens", "ring", "é"];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut errors = 0;
    for _ in 0..count {
        let mut s: Vec<char> = base.chars().collect();
        for _ in 0..rng.gen_range(1..=3) {
            let at = rng.gen_range(0..=s.len());
            match rng.gen_range(0..3) {
                0 if at < s.len() => {
                    s.remove(at);
                }
                1 => {
                    let p = pieces[rng.gen_range(0..pieces.len())];
                    for (k, c) in p.chars().enumerate() {
                        s.insert(at + k, c);
                    }
                }
                _ if at < s.len() => {
                    let c = s[at];
                    s.insert(at, c);
                }
                _ => {}
            }
        }
        let text: String = s.into_iter().collect();
        let res = std::panic::catch_unwind(|| parse_ideal_file(&text, &ParseOptions::default()));
        match res {
            Err(_) => return Err(format!("panic on {text:?}")),
            Ok(Ok(_)) => {}
            Ok(Err(Error::Parse { line, col, .. })) if line >= 1 && col >= 1 => errors += 1,
            Ok(Err(Error::Homogeneity { .. })) => errors += 1,
            Ok(Err(e)) => return Err(format!("unlocated error {e} on {text:?}")),
        }
    }
    Ok(errors)
}

fn main() {
    let results = [
        golden_tables(),
        rope_complex_criterion(),
        reductions_criterion(),
        formulas_criterion(),
        invariants_criterion(),
        cohomology_criterion(),
    ];
    if !results.iter().all(|&b| b) {
        std::process::exit(1);
    }
}
