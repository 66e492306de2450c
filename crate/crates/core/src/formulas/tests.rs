use super::*;
use crate::constructions::{disjoint_linear_spaces, entry, scroll};
use crate::resolve::betti_table;
use crate::ring::DEFAULT_CHARACTERISTIC as P;

fn table(name: &str) -> BettiTable {
    betti_table(&entry(name).unwrap().build(P).unwrap()).unwrap()
}

#[test]
fn minimal_degree_matches_rational_normal_curves() {
    assert_eq!(predict_min_degree(1).unwrap().to_table().unwrap(), BettiTable::from_entries([((0, 0), 1), ((1, 2), 1)]));
    for c in 1..=4u32 {
        let computed = betti_table(&scroll(P, &[c + 1]).unwrap()).unwrap();
        assert_eq!(predict_min_degree(c as usize).unwrap().to_table().unwrap(), computed, "c={c}");
    }
    // codim 3 scrolls in ℙ⁵ carry C(4, 2) = 6 quadrics, the rnc of ℙ⁵ has C(5, 2) = 10
    assert_eq!(table("scroll-1-3"), predict_min_degree(3).unwrap().to_table().unwrap());
    assert_eq!(predict_min_degree(4).unwrap().slots[&(1, 2)], Slot::exact(10));
}

#[test]
fn acm_prediction() {
    let t2 = predict_acm(2).unwrap().to_table().unwrap();
    assert_eq!(t2, table("curves-i-ci"));
    let t3 = predict_acm(3).unwrap().to_table().unwrap();
    assert_eq!(t3, table("curves-ii-monomial-acm"));
    for c in 2..10 {
        let t = predict_acm(c).unwrap().to_table().unwrap();
        assert_eq!(t.pd(), c);
        assert_eq!(t.get(c, c as i32 + 2), 1);
        assert!((1..c).all(|i| t.get(i, i as i32 + 1) > 0));
    }
    assert!(predict_acm(1).is_err());
}

#[test]
fn curve_constraints_on_sextics() {
    let r1 = curve_constraints(5, &table("deg6-c1")).unwrap();
    assert!(r1.passed(), "{:?}", r1.failures());
    let g = r1.get("gamma_1 - beta_2").unwrap();
    assert_eq!(g.got, -3);
    let r2 = curve_constraints(5, &table("deg6-c2")).unwrap();
    assert!(r2.passed(), "{:?}", r2.failures());
    let s = TwoStrands::of(&table("deg6-c2")).unwrap();
    assert_eq!((s.q(1), s.l(2) - 8), (0, 3));
    let s = TwoStrands::of(&table("deg6-c1")).unwrap();
    assert_eq!((s.q(1), s.l(2) - 8), (1, 4));
}

#[test]
fn curve_constraints_low_codim() {
    assert!(curve_constraints(3, &table("curves-i-quartic")).unwrap().passed());
    assert!(curve_constraints(4, &table("curves-ii-monomial")).unwrap().passed());
    // the elliptic quintic is ACM
    assert_eq!(table("curves-ii-scroll-quintic"), predict_acm(3).unwrap().to_table().unwrap());
}

#[test]
fn shape_errors() {
    let t = BettiTable::from_entries([((0, 0), 1), ((1, 4), 1)]);
    assert!(matches!(curve_constraints(3, &t), Err(Error::Shape(_))));
}

#[test]
fn general_constraints_values() {
    let v = general_constraints(4, 2, 1, &table("veronese-projection")).unwrap();
    assert!(v.passed(), "{:?}", v.failures());
    assert_eq!(v.get("delta_1").unwrap().got, 0);
    for name in ["deg6-c1", "deg6-c2"] {
        let r = general_constraints(5, 4, 1, &table(name)).unwrap();
        assert!(r.passed(), "{name} {:?}", r.failures());
        assert_eq!(r.get("delta_1").unwrap().got, 8);
    }
    assert!(matches!(general_constraints(3, 2, 2, &table("curves-i-ci")), Err(Error::Precondition(_))));
}

#[test]
fn divisor_and_curve_checkers_agree() {
    for name in ["deg6-c1", "deg6-c2"] {
        let t = table(name);
        assert!(divisor_constraints(5, 4, &t).unwrap().passed(), "{name}");
        assert!(curve_constraints(5, &t).unwrap().passed(), "{name}");
    }
    assert!(divisor_constraints(3, 2, &table("curves-i-quartic")).unwrap().passed());
}

#[test]
fn two_linear_spaces() {
    let t3 = red2_predict(3).unwrap();
    assert_eq!(
        [(1, 2), (2, 3), (3, 4)].map(|k| t3.slots[&k].lower),
        [4, 4, 1]
    );
    for n in [3, 5, 7] {
        let computed = betti_table(&disjoint_linear_spaces(P, n).unwrap()).unwrap();
        assert_eq!(red2_predict(n).unwrap().to_table().unwrap(), computed, "n={n}");
    }
    assert_eq!(red2_predict(5).unwrap().to_table().unwrap(), table("buchsbaum-surface"));
    assert!(red2_predict(4).is_err());
}

#[test]
fn binomial_identity_exhaustive() {
    assert_eq!(binomial_identity(2, 0), (4, 4));
    for q in 1..=12 {
        for j in 0..=2 * q {
            let (l, r) = binomial_identity(q, j);
            assert_eq!(l, r, "q={q} j={j}");
        }
    }
}

#[test]
fn codim_two_degree_four() {
    assert_eq!(codim2_classify(&table("curves-i-ci")), Codim2Type::Ci);
    assert_eq!(codim2_classify(&table("curves-i-quartic")), Codim2Type::CurveType);
    assert_eq!(codim2_classify(&table("veronese-projection")), Codim2Type::SurfaceType);
    assert_eq!(codim2_classify(&table("twisted-cubic")), Codim2Type::Unknown);
}

#[test]
fn predicted_bounds() {
    let mut p = PredictedTable::default();
    p.set(1, 2, Slot::at_most(3));
    let t = BettiTable::from_entries([((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]);
    assert_eq!(p.violations(&t), vec![(2, 3)]);
    assert!(!p.is_exact());
    assert!(p.to_table().is_none());
}
