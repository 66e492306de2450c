use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of variables a ring may have.
pub const MAX_VARS: usize = 16;

/// Exponents above this bound are rejected.
pub const MAX_EXPONENT: u16 = 1 << 15;

/// A power product `x_0^{e_0} ... x_{n}^{e_n}` stored inline.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            deg: 0,
        }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        assert!(i < nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Dimension(format!(
                "{} variables exceeds the supported maximum {MAX_VARS}",
                exps.len()
            )));
        }
        let mut m = Self::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT as u32 {
                return Err(Error::Arithmetic(format!("exponent {e} exceeds 2^15")));
            }
            m.exps[i] = e as u16;
            m.deg += e;
        }
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `i` set iff `x_i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for i in 0..self.nvars as usize {
            if self.exps[i] != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Product; panics if an exponent leaves the supported range.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..self.nvars as usize {
            let e = self.exps[i] + other.exps[i];
            assert!(e <= MAX_EXPONENT, "exponent overflow beyond 2^15");
            out.exps[i] = e;
        }
        out.deg = self.deg + other.deg;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..self.nvars as usize {
            out.exps[i] -= self.exps[i];
        }
        out.deg = other.deg - self.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.deg = deg;
        out
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Drop the variable `i` (its exponent must be zero) or keep a window of variables.
    pub fn restrict(&self, keep: &[usize]) -> Monomial {
        let mut out = Monomial::one(keep.len());
        for (j, &i) in keep.iter().enumerate() {
            out.exps[j] = self.exps[i];
            out.deg += self.exps[i] as u32;
        }
        out
    }

    /// Embed into a ring with `nvars` variables by sending variable `i` to `map[i]`.
    pub fn embed(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut out = Monomial::one(nvars);
        for (i, &j) in map.iter().enumerate() {
            out.exps[j] += self.exps[i];
        }
        out.deg = self.deg;
        out
    }

    /// Sum of exponents over the first `b` variables.
    #[inline]
    fn block_degree(&self, b: usize) -> u32 {
        self.exps[..b].iter().map(|&e| e as u32).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Global monomial orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Block order eliminating the first `b` variables: degree in the block, then
    /// grevlex on the block, then grevlex on the remaining variables.
    Elimination(usize),
}

#[inline]
fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let (da, db): (u32, u32) = (
        a.exps[lo..hi].iter().map(|&e| e as u32).sum(),
        b.exps[lo..hi].iter().map(|&e| e as u32).sum(),
    );
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compare two monomials, checking that they live in the same number of variables.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars != b.nvars {
            return Err(Error::Dimension(format!(
                "monomials with {} and {} variables",
                a.nvars, b.nvars
            )));
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.nvars as usize;
        match *self {
            MonomialOrder::Grevlex => {
                match a.deg.cmp(&b.deg) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for i in (0..n).rev() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps[..n].cmp(&b.exps[..n]),
            MonomialOrder::Elimination(block) => {
                let block = block.min(n);
                match a.block_degree(block).cmp(&b.block_degree(block)) {
                    Ordering::Equal => {}
                    o => return o,
                }
                match grevlex_range(a, b, 0, block) {
                    Ordering::Equal => grevlex_range(a, b, block, n),
                    o => o,
                }
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(b) => format!("elim{b}"),
        }
    }
}
