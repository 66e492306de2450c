use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::FreeResolution;
use crate::error::{Error, Result};
use crate::ring::Scalar;

/// Graded Betti numbers `β_{i,j}`, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), u64>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    i: usize,
    j: i32,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    format: u32,
    entries: Vec<Entry>,
    pd: usize,
    reg: i32,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            format: 1,
            entries: self.entries.iter().map(|(&(i, j), &beta)| Entry { i, j, beta }).collect(),
            pd: self.pd(),
            reg: self.regularity(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        if w.format != 1 {
            return Err(serde::de::Error::custom(format!("unsupported format {}", w.format)));
        }
        Ok(BettiTable::from_entries(w.entries.into_iter().map(|e| ((e.i, e.j), e.beta))))
    }
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(it: impl IntoIterator<Item = ((usize, i32), u64)>) -> Self {
        let mut t = BettiTable::new();
        for ((i, j), b) in it {
            t.add(i, j, b);
        }
        t
    }

    /// Ranks and twists of the modules of a (minimal) resolution.
    pub fn from_resolution(res: &FreeResolution) -> Self {
        let mut t = BettiTable::new();
        for (i, m) in res.modules().iter().enumerate() {
            for &d in m.degrees() {
                t.add(i, d, 1);
            }
        }
        t
    }

    /// Betti numbers of any free resolution, minimal or not: `β_{i,j}` is the dimension of
    /// the homology of `F ⊗ K` in position `i`, degree `j`, which only sees the scalar
    /// entries of the differentials.
    pub fn from_tor(res: &FreeResolution) -> Self {
        let k = *res.ring().field();
        let len = res.modules().len();
        let mut t = BettiTable::new();
        for i in 0..len {
            let m = res.module(i);
            let mut degs: Vec<i32> = m.degrees().to_vec();
            degs.sort();
            degs.dedup();
            for j in degs {
                let f = m.degrees().iter().filter(|&&d| d == j).count() as i64;
                let out = if i >= 1 { scalar_rank(res, i, j, &k) } else { 0 };
                let inc = if i + 1 < len { scalar_rank(res, i + 1, j, &k) } else { 0 };
                let b = f - out as i64 - inc as i64;
                if b > 0 {
                    t.add(i, j, b as u64);
                }
            }
        }
        t
    }

    pub fn add(&mut self, i: usize, j: i32, b: u64) {
        if b == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += b;
    }

    pub fn get(&self, i: usize, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i32), u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// `max (j - i)` over nonzero entries.
    pub fn regularity(&self) -> i32 {
        self.entries.keys().map(|&(i, j)| j - i as i32).max().unwrap_or(0)
    }

    pub fn min_row(&self) -> i32 {
        self.entries.keys().map(|&(i, j)| j - i as i32).min().unwrap_or(0)
    }

    /// `Σ_i (-1)^i β_{i,j} T^j`, keyed by `j`.
    pub fn euler_polynomial(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&(i, j), &b) in &self.entries {
            let s = if i % 2 == 0 { b as i64 } else { -(b as i64) };
            *out.entry(j).or_insert(0) += s;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Entries with homological index `i`, twist `j` for `i >= 1`, as the resolution of the ideal.
    pub fn ideal_part(&self) -> BettiTable {
        BettiTable::from_entries(self.entries.iter().filter(|(k, _)| k.0 >= 1).map(|(k, v)| (*k, *v)))
    }

    /// Parse the JSON form produced by `serde_json::to_string`.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Argument(format!("bad Betti JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// `(position, [(twist, rank)])` listing for compact comparisons.
    pub fn shape(&self) -> Vec<(usize, Vec<(i32, u64)>)> {
        let mut out: Vec<(usize, Vec<(i32, u64)>)> = Vec::new();
        for (&(i, j), &b) in &self.entries {
            match out.last_mut() {
                Some((p, v)) if *p == i => v.push((j, b)),
                _ => out.push((i, vec![(j, b)])),
            }
        }
        out
    }
}

/// Rank over `K` of the degree-`j` scalar block of `d_i`.
fn scalar_rank(res: &FreeResolution, i: usize, j: i32, k: &crate::ring::PrimeField) -> usize {
    let d = res.differential(i);
    let cols: Vec<usize> = (0..d.ncols()).filter(|&c| d.source().degree(c) == j).collect();
    let rows: Vec<usize> = (0..d.nrows()).filter(|&r| d.target().degree(r) == j).collect();
    let mut m: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| d.entry(r, c).constant_term()).collect())
        .collect();
    rank_mod_p(&mut m, k)
}

pub(crate) fn rank_mod_p(m: &mut [Vec<Scalar>], k: &crate::ring::PrimeField) -> usize {
    let nrows = m.len();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = k.inv(m[rank][c]).unwrap();
        for x in m[rank].iter_mut() {
            *x = k.mul(*x, inv);
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = k.sub(*x, k.mul(f, *y));
                }
            }
        }
        rank += 1;
    }
    rank
}
