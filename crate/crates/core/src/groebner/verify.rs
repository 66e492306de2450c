//! A second, deliberately naive reducer used to re-check Buchberger's criterion.

use std::collections::HashMap;

use super::GroebnerBasis;
use crate::modfree::ModuleOrder;
use crate::ring::{Monomial, PrimeField, Scalar};

type Key = (u32, Monomial);

struct Accumulator<'a> {
    terms: HashMap<Key, Scalar>,
    ord: &'a ModuleOrder,
    k: PrimeField,
}

impl Accumulator<'_> {
    fn add(&mut self, key: Key, c: Scalar) {
        let e = self.terms.entry(key).or_insert(0);
        *e = self.k.add(*e, c);
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    fn lead(&self) -> Option<(Key, Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| self.ord.cmp(&a.0 .1, a.0 .0, &b.0 .1, b.0 .0))
            .map(|(k, v)| (*k, *v))
    }
}

/// Reduce the s-vector of every pair (no criteria skipped) and report the first pair
/// whose s-vector does not reduce to zero.
pub fn buchberger_violation(gb: &GroebnerBasis) -> Option<(usize, usize)> {
    let k = *gb.ring().field();
    let ord = gb.order();
    let elems: Vec<Vec<(Key, Scalar)>> = gb
        .raw()
        .iter()
        .map(|v| v.iter().map(|t| ((t.0, t.1), t.2)).collect())
        .collect();
    let lead = |v: &Vec<(Key, Scalar)>| {
        *v.iter()
            .max_by(|a, b| ord.cmp(&a.0 .1, a.0 .0, &b.0 .1, b.0 .0))
            .expect("nonzero element")
    };
    let leads: Vec<(Key, Scalar)> = elems.iter().map(lead).collect();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let ((ci, mi), ai) = leads[i];
            let ((cj, mj), aj) = leads[j];
            if ci != cj {
                continue;
            }
            let l = mi.lcm(&mj);
            let qi = mi.quotient_of(&l).unwrap();
            let qj = mj.quotient_of(&l).unwrap();
            let mut acc = Accumulator {
                terms: HashMap::new(),
                ord,
                k,
            };
            let fi = k.inv(ai).unwrap();
            let fj = k.neg(k.inv(aj).unwrap());
            for ((c, m), a) in &elems[i] {
                acc.add((*c, m.mul(&qi)), k.mul(*a, fi));
            }
            for ((c, m), a) in &elems[j] {
                acc.add((*c, m.mul(&qj)), k.mul(*a, fj));
            }
            while let Some(((c, m), a)) = acc.lead() {
                let Some(r) = (0..elems.len()).find(|&r| leads[r].0 .0 == c && leads[r].0 .1.divides(&m)) else {
                    return Some((i, j));
                };
                let q = leads[r].0 .1.quotient_of(&m).unwrap();
                let f = k.neg(k.mul(a, k.inv(leads[r].1).unwrap()));
                for ((c2, m2), a2) in &elems[r] {
                    acc.add((*c2, m2.mul(&q)), k.mul(*a2, f));
                }
            }
        }
    }
    None
}

/// The basis is reduced: monic leads, no lead divides another term of any other element.
pub fn is_reduced(gb: &GroebnerBasis) -> bool {
    let elems = gb.raw();
    for (i, e) in elems.iter().enumerate() {
        if e[0].2 != 1 {
            return false;
        }
        for (j, f) in elems.iter().enumerate() {
            if i == j {
                continue;
            }
            if f.iter().any(|t| t.0 == e[0].0 && e[0].1.divides(&t.1)) {
                return false;
            }
        }
    }
    true
}
