use std::collections::BTreeMap;

use serde::Serialize;

use crate::groebner::{GroebnerBasis, Ideal};
use crate::ring::{binomial, Monomial};

/// `N(T) / (1 - T)^nvars`, with a Laurent numerator keyed by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub nvars: usize,
    pub numerator: BTreeMap<i32, i64>,
}

impl HilbertSeries {
    pub fn of_ideal(ideal: &Ideal) -> Self {
        Self::of_basis(ideal.gb())
    }

    /// Series of the cokernel `F / N` for a Gröbner basis of `N ⊆ F`.
    pub fn of_basis(gb: &GroebnerBasis) -> Self {
        let n = gb.ring().nvars();
        let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); gb.rank()];
        for (m, c) in gb.leads() {
            per_comp[c as usize].push(m);
        }
        let mut numerator = BTreeMap::new();
        for (c, gens) in per_comp.into_iter().enumerate() {
            let shift = gb.degrees()[c];
            for (e, v) in monomial_numerator(gens).into_iter().enumerate() {
                *numerator.entry(e as i32 + shift).or_insert(0) += v;
            }
        }
        numerator.retain(|_, v| *v != 0);
        HilbertSeries { nvars: n, numerator }
    }

    pub fn from_numerator(nvars: usize, numerator: BTreeMap<i32, i64>) -> Self {
        let mut numerator = numerator;
        numerator.retain(|_, v| *v != 0);
        HilbertSeries { nvars, numerator }
    }

    /// `dim_K` of the degree-`d` piece.
    pub fn function(&self, d: i32) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .filter(|(&e, _)| e <= d)
            .map(|(&e, &v)| v * binomial((d - e) as i64 + n - 1, n - 1))
            .sum()
    }

    /// `(h, dim)` with `N(T) = h(T) (1 - T)^{nvars - dim}` and `h(1) != 0`; `h` is keyed by exponent.
    pub fn reduced(&self) -> (BTreeMap<i32, i64>, usize) {
        let mut h = self.numerator.clone();
        let mut dim = self.nvars;
        while dim > 0 && !h.is_empty() && h.values().sum::<i64>() == 0 {
            h = divide_by_one_minus_t(&h);
            dim -= 1;
        }
        (h, dim)
    }

    /// Krull dimension of the graded module.
    pub fn krull_dim(&self) -> usize {
        if self.numerator.is_empty() {
            return 0;
        }
        self.reduced().1
    }

    /// Multiplicity `h(1)`.
    pub fn degree(&self) -> i64 {
        self.reduced().0.values().sum()
    }

    /// Coefficients of `h` starting at its lowest exponent.
    pub fn h_vector(&self) -> Vec<i64> {
        let (h, _) = self.reduced();
        let (Some(&lo), Some(&hi)) = (h.keys().next(), h.keys().next_back()) else {
            return Vec::new();
        };
        (lo..=hi).map(|e| h.get(&e).copied().unwrap_or(0)).collect()
    }
}

fn divide_by_one_minus_t(p: &BTreeMap<i32, i64>) -> BTreeMap<i32, i64> {
    // q(T) (1 - T) = p(T): q_e = Σ_{f <= e} p_f
    let mut out = BTreeMap::new();
    let (Some(&lo), Some(&hi)) = (p.keys().next(), p.keys().next_back()) else {
        return out;
    };
    let mut acc = 0;
    for e in lo..hi {
        acc += p.get(&e).copied().unwrap_or(0);
        if acc != 0 {
            out.insert(e, acc);
        }
    }
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `R / (gens)` by pivot splitting:
/// `N(I) = N(I + (p)) + T^{deg p} N(I : p)`.
pub fn monomial_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.gcd_is_one(b)));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = vec![0i64; acc.len() + d];
            for (e, &v) in acc.iter().enumerate() {
                next[e] += v;
                next[e + d] -= v;
            }
            acc = next;
        }
        return trim(acc);
    }
    let n = gens[0].nvars();
    // pivot on the variable shared by the most generators, at its smallest positive exponent
    let (var, _) = (0..n)
        .map(|i| (i, gens.iter().filter(|g| g.exponent(i) > 0).count()))
        .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
        .unwrap();
    let e = gens
        .iter()
        .map(|g| g.exponent(var))
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let mut ex = vec![0u32; n];
    ex[var] = e;
    let p = Monomial::from_exponents(&ex).unwrap();
    let mut plus = gens.clone();
    plus.push(p);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex: Vec<u32> = g.exponents().iter().map(|&x| x as u32).collect();
            ex[var] = ex[var].saturating_sub(e);
            Monomial::from_exponents(&ex).unwrap()
        })
        .collect();
    let a = monomial_numerator(plus);
    let b = monomial_numerator(colon);
    let mut out = vec![0i64; a.len().max(b.len() + e as usize)];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i + e as usize] += v;
    }
    trim(out)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Largest set of variables containing the support of no leading monomial.
pub fn independent_set_dimension(leads: &[Monomial], nvars: usize) -> usize {
    let masks: Vec<u32> = leads.iter().map(|m| m.support_mask()).collect();
    let mut best = 0;
    for s in 0u32..(1u32 << nvars) {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        if masks.iter().all(|&m| m & !s != 0) {
            best = size;
        }
    }
    best
}
