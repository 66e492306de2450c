use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::verify::{buchberger_violation, is_reduced};
use super::*;
use crate::modfree::{ModuleElement, ModuleOrder};
use crate::ring::{Monomial, Polynomial, Ring};

fn twisted_cubic() -> (Ring, Ideal) {
    let r = Ring::standard(32003, 4).unwrap();
    let x: Vec<Polynomial> = r.vars();
    let gens = vec![
        &(&x[0] * &x[2]) - &(&x[1] * &x[1]),
        &(&x[0] * &x[3]) - &(&x[1] * &x[2]),
        &(&x[1] * &x[3]) - &(&x[2] * &x[2]),
    ];
    let i = Ideal::new(&r, gens).unwrap();
    (r, i)
}

fn standard_monomials(gb: &GroebnerBasis, n: usize, d: u32) -> usize {
    let leads = gb.lead_monomials();
    all_monomials(n, d)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count()
}

fn all_monomials(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>, n: usize) {
        if i == n - 1 {
            cur.push(left);
            out.push(Monomial::from_exponents(cur).unwrap());
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(i + 1, left - e, cur, out, n);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut Vec::new(), &mut out, n);
    out
}

#[test]
fn twisted_cubic_basis() {
    let (r, i) = twisted_cubic();
    let gb = i.gb();
    assert_eq!(gb.len(), 3);
    assert!(buchberger_violation(gb).is_none());
    assert!(is_reduced(gb));
    let x = r.vars();
    let x0x2 = &x[0] * &x[2];
    assert!(!i.normal_form(&x0x2).is_zero());
    assert!(i.normal_form(&(&x0x2 - &(&x[1] * &x[1]))).is_zero());
    assert_eq!(i.normal_form(&r.one()), r.one());
    for g in i.generators() {
        assert!(i.normal_form(g).is_zero());
    }
}

#[test]
fn double_line_basis_and_membership() {
    let r = Ring::named(32003, &["x0", "x1", "t", "u"]).unwrap();
    let (x0, x1, t, u) = (r.var(0), r.var(1), r.var(2), r.var(3));
    let f = &(&x0 * &t) + &(&x1 * &u);
    let i = Ideal::new(&r, vec![&x0 * &x0, &x0 * &x1, &x1 * &x1, f]).unwrap();
    assert!(buchberger_violation(i.gb()).is_none());
    let lhs = &(&x1 * &t) * &x0;
    let rhs = -&(&(&x1 * &x1) * &u);
    assert_eq!(i.normal_form(&lhs), i.normal_form(&rhs));
    assert!(i.contains(&(&lhs - &rhs)));
    assert!(!i.contains(&(&x0 * &t)));
}

#[test]
fn monomial_and_principal_bases() {
    let r = Ring::standard(32003, 3).unwrap();
    let x = r.vars();
    let sq = vec![&x[0] * &x[0], &x[0] * &x[1], &x[1] * &x[1]];
    let i = Ideal::new(&r, sq.clone()).unwrap();
    let mut got = i.gb().polynomials();
    let mut want = sq;
    got.sort_by_key(|p| p.to_string());
    want.sort_by_key(|p| p.to_string());
    assert_eq!(got, want);

    let f = &x[0].scale(5) + &x[2].scale(3);
    let p = Ideal::new(&r, vec![f.clone()]).unwrap();
    assert_eq!(p.gb().polynomials(), vec![f.monic()]);
}

#[test]
fn conic_elimination() {
    let r = Ring::named(32003, &["s", "t", "x0", "x1", "x2"]).unwrap();
    let v = r.vars();
    let gens = vec![
        &v[2] - &(&v[0] * &v[0]),
        &v[3] - &(&v[0] * &v[1]),
        &v[4] - &(&v[1] * &v[1]),
    ];
    let i = Ideal::new(&r, gens).unwrap();
    let e = i.eliminate(2);
    let want = Ideal::new(&r, vec![&(&v[3] * &v[3]) - &(&v[2] * &v[4])]).unwrap();
    assert!(e.equals(&want));
    assert!(i.eliminate(0).equals(&i));
}

#[test]
fn toric_twisted_cubic_matches_minors() {
    let (_, cubic) = twisted_cubic();
    let t = toric_curve_ideal(32003, &[3, 2, 1, 0]).unwrap();
    assert_eq!(t.ring().nvars(), 4);
    let t = Ideal::new(cubic.ring(), t.generators().iter().map(|g| g.reorder(cubic.ring())).collect()).unwrap();
    assert!(t.equals(&cubic));
    assert!(toric_curve_ideal(32003, &[3, 3, 0]).is_err());
    assert!(toric_curve_ideal(32003, &[3, 2, 1]).is_err());
}

fn check_parametrization(i: &Ideal, exps: &[u32], points: usize) {
    let k = *i.ring().field();
    let d = exps[0];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..points {
        let s: u32 = rng.gen_range(1..32003);
        let t: u32 = rng.gen_range(1..32003);
        let pt: Vec<u32> = exps
            .iter()
            .map(|&a| k.mul(k.pow(s, a as u64), k.pow(t, (d - a) as u64)))
            .collect();
        for g in i.generators() {
            assert_eq!(g.eval(&pt), 0);
        }
    }
}

fn degree_counts(gens: &[Polynomial]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    let mut ds: Vec<u32> = gens.iter().map(|g| g.degree().unwrap()).collect();
    ds.sort();
    for d in ds {
        match out.last_mut() {
            Some((e, c)) if *e == d => *c += 1,
            _ => out.push((d, 1)),
        }
    }
    out
}

#[test]
fn sextic_curves() {
    let c1 = toric_curve_ideal(32003, &[6, 5, 3, 2, 1, 0]).unwrap();
    check_parametrization(&c1, &[6, 5, 3, 2, 1, 0], 50);
    assert_eq!(degree_counts(&c1.minimal_generators()), vec![(2, 8), (3, 1)]);
    let c2 = toric_curve_ideal(32003, &[6, 5, 4, 2, 1, 0]).unwrap();
    check_parametrization(&c2, &[6, 5, 4, 2, 1, 0], 50);
    assert_eq!(degree_counts(&c2.minimal_generators()), vec![(2, 8)]);
    // standard monomials of degree d correspond to lattice points reached by the parametrization
    for (ideal, exps) in [(&c1, [6u32, 5, 3, 2, 1, 0]), (&c2, [6, 5, 4, 2, 1, 0])] {
        for d in 1..5u32 {
            let images: HashSet<u32> = all_monomials(6, d)
                .iter()
                .map(|m| (0..6).map(|i| m.exponent(i) * exps[i]).sum())
                .collect();
            assert_eq!(standard_monomials(ideal.gb(), 6, d), images.len());
        }
    }
}

#[test]
fn colon_examples() {
    let r = Ring::standard(32003, 3).unwrap();
    let x = r.vars();
    let i = Ideal::new(&r, vec![&x[0] * &x[0]]).unwrap();
    assert!(i.colon(&x[0]).unwrap().equals(&Ideal::of_variables(&r, &[0])));
    assert!(i.colon(&r.one()).unwrap().equals(&i));
    assert!(matches!(i.colon(&r.zero()), Err(crate::Error::Argument(_))));

    let r = Ring::named(32003, &["x0", "x1", "t", "u"]).unwrap();
    let (x0, x1, t, u) = (r.var(0), r.var(1), r.var(2), r.var(3));
    let rope = Ideal::new(&r, vec![&x0 * &x0, &x0 * &x1, &x1 * &x1, &(&x0 * &t) + &(&x1 * &u)]).unwrap();
    let line = Ideal::of_variables(&r, &[0, 1]);
    let c = rope.colon_ideal(&line).unwrap();
    assert!(c.contains_ideal(&rope));
    assert!(!rope.contains_ideal(&c));
    // (x0, x1) · c ⊆ rope
    for g in c.generators() {
        assert!(rope.contains(&(g * &x0)) && rope.contains(&(g * &x1)));
    }
}

#[test]
fn intersection_and_saturation() {
    let r = Ring::standard(32003, 3).unwrap();
    let x = r.vars();
    let a = Ideal::of_variables(&r, &[0]);
    let b = Ideal::of_variables(&r, &[1]);
    let meet = a.intersect(&b).unwrap();
    assert!(meet.equals(&Ideal::new(&r, vec![&x[0] * &x[1]]).unwrap()));

    let i = Ideal::new(&r, vec![&x[0] * &x[0], &x[0] * &x[1]]).unwrap();
    let m = Ideal::of_variables(&r, &[0, 1]);
    let s = i.saturate(&m).unwrap();
    assert!(s.equals(&a));
    assert!(s.saturate(&m).unwrap().equals(&s));
    assert!(s.contains_ideal(&i));
    let (_, cubic) = twisted_cubic();
    let mm = Ideal::maximal(cubic.ring());
    assert!(cubic.saturate(&mm).unwrap().equals(&cubic));
}

#[test]
fn module_basis_of_koszul_relations() {
    let r = Ring::standard(32003, 3).unwrap();
    let x = r.vars();
    let z = r.zero();
    // relations among x0, x1, x2 in R(-1)^3
    let cols = [
        [-&x[1], x[0].clone(), z.clone()],
        [-&x[2], z.clone(), x[0].clone()],
        [z.clone(), -&x[2], x[1].clone()],
    ];
    let gens: Vec<ModuleElement> = cols.iter().map(|c| ModuleElement::from_column(&r, c)).collect();
    for ord in [
        ModuleOrder::PositionOverTerm(r.order()),
        ModuleOrder::TermOverPosition(r.order()),
    ] {
        let gb = GroebnerBasis::compute(&r, &[1, 1, 1], &gens, &ord);
        assert!(buchberger_violation(&gb).is_none());
        assert!(is_reduced(&gb));
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
        let tracked = GroebnerBasis::compute_tracked(&r, &[1, 1, 1], &gens, &ord);
        let reps = tracked.representations().unwrap();
        for (e, rep) in tracked.elements().iter().zip(reps) {
            let col = rep.to_column(gens.len());
            let mut acc = ModuleElement::zero(&r);
            for (g, c) in gens.iter().zip(&col) {
                acc = acc.add(&g.mul_poly(c));
            }
            assert_eq!(&acc, e);
        }
    }
}

fn arb_quadrics() -> impl Strategy<Value = Vec<Vec<(usize, usize, u32)>>> {
    prop::collection::vec(prop::collection::vec((0usize..4, 0usize..4, 1u32..32003), 1..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn random_bases_satisfy_criterion(spec in arb_quadrics()) {
        let r = Ring::standard(32003, 4).unwrap();
        let x = r.vars();
        let gens: Vec<Polynomial> = spec
            .iter()
            .map(|terms| {
                let mut f = r.zero();
                for &(a, b, c) in terms {
                    f = &f + &(&x[a] * &x[b]).scale(c);
                }
                f
            })
            .collect();
        let i = Ideal::new(&r, gens.clone()).unwrap();
        prop_assert!(buchberger_violation(i.gb()).is_none());
        prop_assert!(is_reduced(i.gb()));
        for g in &gens {
            prop_assert!(i.contains(g));
            let nf = i.normal_form(&(g * &x[0]));
            prop_assert!(nf.is_zero());
        }
        let f = &x[0] * &x[3];
        let nf = i.normal_form(&f);
        prop_assert_eq!(i.normal_form(&nf), nf.clone());
        prop_assert!(i.contains(&(&f - &nf)));
    }
}
