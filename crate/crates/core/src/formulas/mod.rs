//! Closed-form Betti numbers for schemes of small degree and checkers that compare them
//! with computed tables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::resolve::BettiTable;
use crate::ring::binomial;

fn c(n: i64, k: i64) -> i64 {
    binomial(n, k)
}

/// Predicted value of one Betti number: exact when `lower == upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub lower: i64,
    pub upper: Option<i64>,
}

impl Slot {
    pub fn exact(v: i64) -> Self {
        Slot { lower: v, upper: Some(v) }
    }
    pub fn at_most(v: i64) -> Self {
        Slot { lower: 0, upper: Some(v) }
    }
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }
    pub fn contains(&self, v: i64) -> bool {
        v >= self.lower && self.upper.is_none_or(|u| v <= u)
    }
}

/// Betti numbers `β_{i,j}` of `R/I` for `i ≥ 1`, each known exactly or within bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PredictedTable {
    pub slots: BTreeMap<(usize, i32), Slot>,
}

impl PredictedTable {
    fn set(&mut self, i: usize, j: i32, s: Slot) {
        if let Some(u) = s.upper {
            assert!(s.lower <= u, "inconsistent bounds at ({i}, {j})");
        }
        self.slots.insert((i, j), s);
    }

    pub fn is_exact(&self) -> bool {
        self.slots.values().all(Slot::is_exact)
    }

    /// The table of `R/I`, when every entry is exact.
    pub fn to_table(&self) -> Option<BettiTable> {
        if !self.is_exact() {
            return None;
        }
        let mut t = BettiTable::from_entries([((0, 0), 1)]);
        for (&(i, j), s) in &self.slots {
            if s.lower > 0 {
                t.add(i, j, s.lower as u64);
            }
        }
        Some(t)
    }

    /// Entries of `t` that fall outside their slot, including entries where no slot exists.
    pub fn violations(&self, t: &BettiTable) -> Vec<(usize, i32)> {
        let mut keys: Vec<(usize, i32)> = self.slots.keys().copied().collect();
        keys.extend(t.entries().keys().filter(|k| k.0 > 0));
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter(|&(i, j)| {
                let got = t.get(i, j) as i64;
                match self.slots.get(&(i, j)) {
                    Some(s) => !s.contains(got),
                    None => got != 0,
                }
            })
            .collect()
    }
}

/// Varieties of minimal degree and codimension `c`: `β_{i,i+1} = i C(c+1, i+1)` for `1 ≤ i ≤ c`.
pub fn predict_min_degree(c: usize) -> Result<PredictedTable> {
    if c == 0 {
        return Err(Error::Argument("codimension must be positive".into()));
    }
    let mut t = PredictedTable::default();
    let ci = c as i64;
    for i in 1..=c {
        let ii = i as i64;
        t.set(i, i as i32 + 1, Slot::exact(ii * self::c(ci + 1, ii + 1)));
    }
    Ok(t)
}

/// ACM varieties of codimension `c` and degree `c + 2`: linear up to step `c - 1`, then `R(-c-2)`.
pub fn predict_acm(c: usize) -> Result<PredictedTable> {
    if c < 2 {
        return Err(Error::Argument("an ACM variety of degree c + 2 needs c >= 2".into()));
    }
    let mut t = PredictedTable::default();
    let ci = c as i64;
    for i in 1..c {
        let ii = i as i64;
        t.set(i, i as i32 + 1, Slot::exact(ii * self::c(ci + 1, ii + 1) - self::c(ci, ii - 1)));
    }
    t.set(c, c as i32 + 2, Slot::exact(1));
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstraintKind {
    Equality,
    Bound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub name: String,
    pub kind: ConstraintKind,
    pub expected: String,
    pub got: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstraintReport {
    pub constraints: Vec<Constraint>,
}

impl ConstraintReport {
    fn equal(&mut self, name: String, expected: i64, got: i64) {
        self.constraints.push(Constraint {
            name,
            kind: ConstraintKind::Equality,
            expected: format!("= {expected}"),
            got,
            pass: expected == got,
        });
    }

    fn bound(&mut self, name: String, lo: i64, hi: i64, got: i64) {
        self.constraints.push(Constraint {
            name,
            kind: ConstraintKind::Bound,
            expected: if hi == i64::MAX { format!(">= {lo}") } else { format!("in [{lo}, {hi}]") },
            got,
            pass: lo <= got && got <= hi,
        });
    }

    pub fn passed(&self) -> bool {
        self.constraints.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Constraint> {
        self.constraints.iter().filter(|c| !c.pass).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Constraint> {
        self.constraints.iter().find(|c| c.name == name)
    }
}

/// The linear strand `l_i = β_{i,i+1}` and the quadratic strand `q_i = β_{i,i+2}` of a table
/// with no other entries past step 0.
pub struct TwoStrands {
    pub linear: Vec<i64>,
    pub quadratic: Vec<i64>,
}

impl TwoStrands {
    pub fn of(t: &BettiTable) -> Result<Self> {
        let pd = t.pd();
        let mut linear = vec![0; pd + 2];
        let mut quadratic = vec![0; pd + 2];
        for (&(i, j), &b) in t.entries() {
            match (i, j - i as i32) {
                (0, 0) => {}
                (i, 1) if i > 0 => linear[i] = b as i64,
                (i, 2) if i > 0 => quadratic[i] = b as i64,
                _ => return Err(Error::Shape(format!("β_{{{i},{j}}} = {b} lies outside the two strands"))),
            }
        }
        Ok(TwoStrands { linear, quadratic })
    }

    fn l(&self, i: usize) -> i64 {
        self.linear.get(i).copied().unwrap_or(0)
    }
    fn q(&self, i: usize) -> i64 {
        self.quadratic.get(i).copied().unwrap_or(0)
    }
}

/// Non-ACM integral curves of degree `n + 1` in `ℙ^n`, written as
/// `F_i = R(-i-1)^{α_i + β_i} ⊕ R(-i-2)^{γ_i}` with `α_i = i C(n-1, i+1)`.
pub fn curve_constraints(n: usize, t: &BettiTable) -> Result<ConstraintReport> {
    if n < 3 {
        return Err(Error::Argument("a non-ACM curve of degree n + 1 needs n >= 3".into()));
    }
    let s = TwoStrands::of(t)?;
    let ni = n as i64;
    let alpha = |i: usize| i as i64 * c(ni - 1, i as i64 + 1);
    let beta = |i: usize| s.l(i) - alpha(i);
    let gamma = |i: usize| s.q(i);
    let mut r = ConstraintReport::default();
    r.equal("pd".into(), ni, t.pd() as i64);
    r.equal("beta_1".into(), ni - 3, beta(1));
    for i in n.saturating_sub(2).max(1)..=n {
        r.equal(format!("beta_{i}"), 0, beta(i));
    }
    if n >= 4 {
        r.equal(format!("gamma_{}", n - 3), c(ni + 1, 3) - (ni - 1).pow(2), gamma(n - 3));
    }
    r.equal(format!("gamma_{}", n - 2), c(ni, 2), gamma(n - 2));
    r.equal(format!("gamma_{}", n - 1), ni + 1, gamma(n - 1));
    r.equal(format!("gamma_{n}"), 1, gamma(n));
    for i in 1..=n {
        let ii = i as i64;
        r.equal(
            format!("gamma_{i} - beta_{}", i + 1),
            c(ni + 1, ii + 1) - c(ni - 1, ii + 1) - (ni - 1) * c(ni - 2, ii),
            gamma(i) - beta(i + 1),
        );
        r.bound(format!("beta_{i} >= 0"), 0, i64::MAX, beta(i));
        // γ_{n-1} = n + 1 exceeds C(n, n-1), so the bound is only checked up to n - 2
        if i + 2 <= n {
            r.bound(format!("gamma_{i} bound"), 0, c(ni, ii), gamma(i));
        }
    }
    Ok(r)
}

/// Non-ACM varieties of degree `c + 2` with `depth ≤ dim`, `p = n + 1 - depth`, written as
/// `F_i = R(-i-1)^{δ_i} ⊕ R(-i-2)^{γ_i}`.
pub fn general_constraints(n: usize, c: usize, depth: usize, t: &BettiTable) -> Result<ConstraintReport> {
    if c == 0 || c >= n || depth == 0 {
        return Err(Error::Argument(format!("need 1 <= c < n and depth >= 1, got n={n} c={c} depth={depth}")));
    }
    if depth > n - c {
        return Err(Error::Precondition(format!(
            "depth {depth} exceeds the dimension {}: the variety is ACM",
            n - c
        )));
    }
    let s = TwoStrands::of(t)?;
    let p = (n + 1 - depth) as i64;
    let ci = c as i64;
    let delta = |i: usize| s.l(i);
    let gamma = |i: usize| s.q(i);
    let mut r = ConstraintReport::default();
    r.equal("pd".into(), p, t.pd() as i64);
    r.equal("delta_1".into(), self::c(ci + 2, 2) - p - 2, delta(1));
    for i in c..=p as usize {
        r.equal(format!("delta_{i}"), 0, delta(i));
        r.equal(format!("gamma_{i}"), self::c(p + 1, i as i64 + 1), gamma(i));
    }
    r.equal(format!("gamma_{}", c - 1), self::c(p + 1, ci) - (ci + 1), gamma(c - 1));
    if c >= 3 {
        r.bound(format!("gamma_{}", c - 2), 0, self::c(p + 1, ci - 1) - ci * ci, gamma(c - 2));
    }
    for i in 1..c.saturating_sub(2) {
        r.bound(format!("gamma_{i}"), 0, self::c(p + 1, i as i64 + 1), gamma(i));
    }
    for i in 1..=p as usize {
        let ii = i as i64;
        r.equal(
            format!("gamma_{i} - delta_{}", i + 1),
            self::c(p + 1, ii + 1) + self::c(ci, ii + 2) - (ci + 1) * self::c(ci, ii + 1),
            gamma(i) - delta(i + 1),
        );
    }
    Ok(r)
}

/// Depth-one divisors of degree `c + 2` on a variety of minimal degree, `k = n - c`, written
/// as `F_i = R(-i-1)^{α_i + β_i} ⊕ R(-i-2)^{γ_i}` with `α_i = i C(c, i+1)`.
pub fn divisor_constraints(n: usize, c: usize, t: &BettiTable) -> Result<ConstraintReport> {
    if c == 0 || c >= n {
        return Err(Error::Argument(format!("need 1 <= c < n, got n={n} c={c}")));
    }
    let k = n - c;
    if k >= c {
        return Err(Error::Precondition(format!("no such divisor exists with dim {k} >= codim {c}")));
    }
    let s = TwoStrands::of(t)?;
    let (ni, ci, ki) = (n as i64, c as i64, k as i64);
    let alpha = |i: usize| i as i64 * self::c(ci, i as i64 + 1);
    let beta = |i: usize| s.l(i) - alpha(i);
    let gamma = |i: usize| s.q(i);
    let mut r = ConstraintReport::default();
    r.equal("pd".into(), ni, t.pd() as i64);
    r.equal("beta_1".into(), ci - ki - 1, beta(1));
    for i in (c - k).max(2)..=n {
        r.equal(format!("beta_{i}"), 0, beta(i));
    }
    for i in (c - k - 1).max(1)..c {
        let ii = i as i64;
        r.equal(
            format!("gamma_{i}"),
            self::c(ni + 1, ii + 1) - self::c(ci, ii + 1) - ci * self::c(ci - 1, ii),
            gamma(i),
        );
    }
    for i in c..=n {
        r.equal(format!("gamma_{i}"), self::c(ni + 1, i as i64 + 1), gamma(i));
    }
    for i in 1..=n {
        let ii = i as i64;
        r.equal(
            format!("gamma_{i} - beta_{}", i + 1),
            self::c(ni + 1, ii + 1) - self::c(ci, ii + 1) - ci * self::c(ci - 1, ii),
            gamma(i) - beta(i + 1),
        );
        r.bound(format!("beta_{i} >= 0"), 0, i64::MAX, beta(i));
        r.bound(format!("gamma_{i} bound"), 0, self::c(ni + 1, ii), gamma(i));
    }
    Ok(r)
}

/// Two disjoint linear spaces of dimension `(n-1)/2`: `δ_i = C(n+1, i+1) - 2 C(q, i+1)`.
pub fn red2_predict(n: usize) -> Result<PredictedTable> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Argument(format!("n must be odd and at least 3, got {n}")));
    }
    let q = (n as i64 + 1) / 2;
    let mut t = PredictedTable::default();
    for i in 1..=n {
        let ii = i as i64;
        t.set(i, i as i32 + 1, Slot::exact(c(n as i64 + 1, ii + 1) - 2 * c(q, ii + 1)));
    }
    Ok(t)
}

/// Both sides of `Σ_{i=0}^{j} C(q, i+1) C(q, j-i+1) = C(2q, j+2) - 2 C(q, j+2)`.
pub fn binomial_identity(q: i64, j: i64) -> (i64, i64) {
    let lhs = (0..=j).map(|i| c(q, i + 1) * c(q, j - i + 1)).sum();
    (lhs, c(2 * q, j + 2) - 2 * c(q, j + 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Codim2Type {
    #[serde(rename = "CI")]
    Ci,
    CurveType,
    SurfaceType,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl std::fmt::Display for Codim2Type {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Codim2Type::Ci => "CI",
            Codim2Type::CurveType => "curve-type",
            Codim2Type::SurfaceType => "surface-type",
            Codim2Type::Unknown => "UNKNOWN",
        })
    }
}

/// The three resolution shapes of codimension-two varieties of degree four.
pub fn codim2_shapes() -> [(Codim2Type, BettiTable); 3] {
    let q = |e: &[(usize, i32, u64)]| {
        BettiTable::from_entries(std::iter::once(((0, 0), 1)).chain(e.iter().map(|&(i, j, b)| ((i, j), b))))
    };
    [
        (Codim2Type::Ci, q(&[(1, 2, 2), (2, 4, 1)])),
        (Codim2Type::CurveType, q(&[(1, 2, 1), (1, 3, 3), (2, 4, 4), (3, 5, 1)])),
        (Codim2Type::SurfaceType, q(&[(1, 3, 7), (2, 4, 10), (3, 5, 5), (4, 6, 1)])),
    ]
}

pub fn codim2_classify(t: &BettiTable) -> Codim2Type {
    codim2_shapes()
        .into_iter()
        .find(|(_, s)| s == t)
        .map_or(Codim2Type::Unknown, |x| x.0)
}

#[cfg(test)]
mod tests;
