use super::*;
use crate::groebner::{toric_curve_ideal, GroebnerBasis, Ideal};
use crate::modfree::{GradedFreeModule, ModuleElement, ModuleOrder, RingMatrix};
use crate::ring::{Monomial, Polynomial, Ring};

fn table(entries: &[((usize, i32), u64)]) -> BettiTable {
    let mut all = vec![((0usize, 0i32), 1u64)];
    all.extend_from_slice(entries);
    BettiTable::from_entries(all)
}

fn twisted_cubic() -> Ideal {
    toric_curve_ideal(32003, &[3, 2, 1, 0]).unwrap()
}

fn euler_matches_hilbert(ideal: &Ideal, t: &BettiTable) {
    let hs = HilbertSeries::of_ideal(ideal);
    assert_eq!(t.euler_polynomial(), hs.numerator);
}

#[test]
fn principal_and_cubic() {
    let r = Ring::standard(32003, 3).unwrap();
    let i = Ideal::of_variables(&r, &[0]);
    assert_eq!(betti_table(&i).unwrap(), table(&[((1, 1), 1)]));
    let c = twisted_cubic();
    let t = betti_table(&c).unwrap();
    assert_eq!(t, table(&[((1, 2), 3), ((2, 3), 2)]));
    euler_matches_hilbert(&c, &t);
}

#[test]
fn sextic_tables() {
    let c1 = toric_curve_ideal(32003, &[6, 5, 3, 2, 1, 0]).unwrap();
    let res = schreyer_resolution(&c1).unwrap();
    assert!(res.is_complex());
    let min = minimalize(&res);
    assert!(min.is_complex() && min.is_minimal());
    let t = BettiTable::from_resolution(&min);
    let want = table(&[
        ((1, 2), 8),
        ((1, 3), 1),
        ((2, 3), 12),
        ((2, 4), 4),
        ((3, 4), 3),
        ((3, 5), 10),
        ((4, 6), 6),
        ((5, 7), 1),
    ]);
    assert_eq!(t, want);
    assert_eq!(BettiTable::from_tor(&res), want);
    euler_matches_hilbert(&c1, &t);
    // minimalizing again changes nothing
    assert_eq!(BettiTable::from_resolution(&minimalize(&min)), want);
}

#[test]
fn hilbert_function_matches_standard_monomials() {
    let c = toric_curve_ideal(32003, &[6, 5, 4, 2, 1, 0]).unwrap();
    let hs = HilbertSeries::of_ideal(&c);
    let leads = c.gb().lead_monomials();
    for d in 0..=10u32 {
        let count = all_monomials(6, d).iter().filter(|m| !leads.iter().any(|l| l.divides(m))).count();
        assert_eq!(hs.function(d as i32), count as i64);
    }
    assert_eq!(hs.degree(), 6);
    assert_eq!(hs.krull_dim(), 2);

    let r = Ring::standard(32003, 2).unwrap();
    let hs = HilbertSeries::of_ideal(&Ideal::zero(&r));
    assert_eq!(hs.numerator, [(0, 1)].into_iter().collect());
    let cubic = HilbertSeries::of_ideal(&twisted_cubic());
    assert_eq!(cubic.h_vector(), vec![1, 2]);
}

fn all_monomials(n: usize, d: u32) -> Vec<Monomial> {
    if n == 1 {
        return vec![Monomial::from_exponents(&[d]).unwrap()];
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for m in all_monomials(n - 1, d - e) {
            let mut ex = vec![e];
            ex.extend(m.exponents().iter().map(|&x| x as u32));
            out.push(Monomial::from_exponents(&ex).unwrap());
        }
    }
    out
}

#[test]
fn reports() {
    let rep = scheme_report(&twisted_cubic()).unwrap();
    assert_eq!((rep.dim, rep.codim, rep.degree, rep.pd, rep.depth, rep.is_acm), (1, 2, 3, 2, 2, true));
    let c1 = toric_curve_ideal(32003, &[6, 5, 3, 2, 1, 0]).unwrap();
    let rep = scheme_report(&c1).unwrap();
    assert_eq!((rep.dim, rep.codim, rep.degree, rep.pd, rep.depth, rep.is_acm), (1, 4, 6, 5, 1, false));
    assert!(!rep.saturated_input);

    let r = Ring::standard(32003, 3).unwrap();
    assert!(scheme_report(&Ideal::zero(&r)).is_err());
    assert!(scheme_report(&Ideal::new(&r, vec![r.one()]).unwrap()).is_err());
    // (x0^2, x0x1) has an embedded point at the irrelevant ideal's vertex? no: saturates to (x0)
    let x = r.vars();
    let unsat = Ideal::new(&r, vec![&x[0] * &x[0], &x[0] * &x[1], &x[0] * &x[2]]).unwrap();
    let rep = scheme_report(&unsat).unwrap();
    assert!(rep.saturated_input);
    assert_eq!((rep.dim, rep.degree), (1, 1));
}

#[test]
fn koszul_syzygies() {
    let r = Ring::standard(32003, 4).unwrap();
    let f1 = GradedFreeModule::uniform(&r, 3, 1);
    let d1 = RingMatrix::new(
        f1,
        GradedFreeModule::uniform(&r, 1, 0),
        (0..3).map(|i| vec![r.var(i)]).collect(),
    )
    .unwrap();
    let s = schreyer_syzygies(&d1).unwrap();
    assert_eq!(s.ncols(), 3);
    assert!(s.source().degrees().iter().all(|&d| d == 2));
    assert!(d1.compose(&s).unwrap().is_zero());
    // column space equals the Koszul relations
    let z = r.zero();
    let x = r.vars();
    let koszul = [
        [-&x[1], x[0].clone(), z.clone()],
        [-&x[2], z.clone(), x[0].clone()],
        [z.clone(), -&x[2], x[1].clone()],
    ];
    let ord = ModuleOrder::PositionOverTerm(r.order());
    let a = GroebnerBasis::of_columns(&s, &ord);
    let kz: Vec<ModuleElement> = koszul.iter().map(|c| ModuleElement::from_column(&r, c)).collect();
    let b = GroebnerBasis::compute(&r, &[1, 1, 1], &kz, &ord);
    assert!(a.same_module(&b));

    let p = RingMatrix::new(
        GradedFreeModule::uniform(&r, 1, 2),
        GradedFreeModule::uniform(&r, 1, 0),
        vec![vec![&x[0] * &x[1]]],
    )
    .unwrap();
    assert_eq!(schreyer_syzygies(&p).unwrap().ncols(), 0);
}

#[test]
fn syzygies_of_bidiagonal_transpose() {
    let s = Ring::named(32003, &["t", "u"]).unwrap();
    let (t, u) = (s.var(0), s.var(1));
    let z = s.zero();
    // B: S(-2)^3 -> S(-1)^4, columns (t, -u, 0, 0), (0, t, -u, 0), (0, 0, t, -u)
    let b = RingMatrix::new(
        GradedFreeModule::uniform(&s, 3, 2),
        GradedFreeModule::uniform(&s, 4, 1),
        vec![
            vec![t.clone(), -&u, z.clone(), z.clone()],
            vec![z.clone(), t.clone(), -&u, z.clone()],
            vec![z.clone(), z.clone(), t.clone(), -&u],
        ],
    )
    .unwrap();
    let syz = schreyer_syzygies(&b.transpose()).unwrap();
    assert_eq!(syz.ncols(), 1);
    let col: Vec<Polynomial> = syz.columns()[0].clone();
    let lc = col[0].lead().unwrap().1;
    let normalized: Vec<String> = col
        .iter()
        .map(|p| p.scale(s.field().inv(lc).unwrap()).to_string())
        .collect();
    assert_eq!(normalized, vec!["u^3", "t*u^2", "t^2*u", "t^3"]);
}

#[test]
fn tor_ranks_agree_on_monomial_ideals() {
    let r = Ring::standard(32003, 4).unwrap();
    let x = r.vars();
    let sq = Ideal::new(&r, vec![&x[0] * &x[0], &x[0] * &x[1], &x[1] * &x[1]]).unwrap();
    let res = schreyer_resolution(&sq).unwrap();
    let t = BettiTable::from_tor(&res);
    assert_eq!(t, table(&[((1, 2), 3), ((2, 3), 2)]));
    assert_eq!(BettiTable::from_resolution(&free_resolution(&sq).unwrap()), t);
}

#[test]
fn betti_json_round_trip() {
    let t = table(&[((1, 2), 3), ((2, 3), 2)]);
    let s = t.to_json();
    assert!(s.contains("\"format\":1"));
    assert_eq!(BettiTable::from_json(&s).unwrap(), t);
}

#[test]
fn monomial_numerators() {
    // R/(x0, x1)^2 in 3 variables: 1 - 3T^2 + 2T^3
    let m = |e: &[u32]| Monomial::from_exponents(e).unwrap();
    let n = monomial_numerator(vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0])]);
    assert_eq!(n, vec![1, 0, -3, 2]);
    assert_eq!(independent_set_dimension(&[m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0])], 3), 1);
}
