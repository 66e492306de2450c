//! Prime fields, monomials with graded orders, and sparse polynomials.

mod field;
mod monomial;
mod poly;

pub use field::{is_prime, PrimeField, Scalar, DEFAULT_CHARACTERISTIC};
pub use monomial::{Monomial, MonomialOrder, MAX_EXPONENT, MAX_VARS};
pub use poly::{Polynomial, Ring};

/// Binomial coefficient as a signed integer; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly(ring: Ring, max_deg: u32) -> impl Strategy<Value = Polynomial> {
        let n = ring.nvars();
        prop::collection::vec(
            (prop::collection::vec(0..=max_deg, n), 1u32..32003),
            0..6,
        )
        .prop_map(move |terms| {
            Polynomial::from_terms(
                &ring,
                terms
                    .into_iter()
                    .map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), c))
                    .collect(),
            )
        })
    }

    fn arb_homogeneous(ring: Ring, deg: u32) -> impl Strategy<Value = Polynomial> {
        let n = ring.nvars();
        prop::collection::vec((prop::collection::vec(0..=deg, n - 1), 1u32..32003), 0..5)
            .prop_map(move |terms| {
                let mut out = Vec::new();
                for (mut e, c) in terms {
                    let mut left = deg;
                    for x in e.iter_mut() {
                        *x = (*x).min(left);
                        left -= *x;
                    }
                    e.push(left);
                    out.push((Monomial::from_exponents(&e).unwrap(), c));
                }
                Polynomial::from_terms(&ring, out)
            })
    }

    proptest! {
        #[test]
        fn multiplication_commutes_and_associates(
            f in arb_poly(Ring::standard(32003, 3).unwrap(), 3),
            g in arb_poly(Ring::standard(32003, 3).unwrap(), 3),
            h in arb_poly(Ring::standard(32003, 3).unwrap(), 3),
            pt in prop::collection::vec(0u32..32003, 3),
        ) {
            prop_assert_eq!(&f * &g, &g * &f);
            let lhs = &(&f * &g) * &h;
            let rhs = &f * &(&g * &h);
            prop_assert_eq!(lhs.eval(&pt), rhs.eval(&pt));
            let k = *f.ring().field();
            prop_assert_eq!(lhs.eval(&pt), k.mul(k.mul(f.eval(&pt), g.eval(&pt)), h.eval(&pt)));
        }

        #[test]
        fn homogeneity_preserved(
            f in arb_homogeneous(Ring::standard(32003, 4).unwrap(), 2),
            g in arb_homogeneous(Ring::standard(32003, 4).unwrap(), 2),
            h in arb_homogeneous(Ring::standard(32003, 4).unwrap(), 3),
        ) {
            prop_assert!((&f + &g).is_homogeneous());
            let p = &f * &h;
            prop_assert!(p.is_homogeneous());
            if !p.is_zero() {
                prop_assert_eq!(p.degree(), Some(5));
            }
        }

        #[test]
        fn one_is_minimal(e in prop::collection::vec(0u32..4, 3)) {
            let m = Monomial::from_exponents(&e).unwrap();
            for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Elimination(1)] {
                prop_assert_ne!(ord.cmp(&m, &Monomial::one(3)), std::cmp::Ordering::Less);
            }
        }
    }

    #[test]
    fn grevlex_is_degree_compatible() {
        let a = Monomial::from_exponents(&[0, 0, 1]).unwrap();
        let b = Monomial::from_exponents(&[2, 0, 0]).unwrap();
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), std::cmp::Ordering::Less);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(6, 0), 1);
        assert_eq!(binomial(3, -1), 0);
    }
}
