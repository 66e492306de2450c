use crate::error::{Error, Result};
use crate::ring::Ring;

/// `⊕ R(-a_i)`, stored by generator degrees `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    ring: Ring,
    degrees: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(ring: &Ring, degrees: Vec<i32>) -> Self {
        GradedFreeModule {
            ring: ring.clone(),
            degrees,
        }
    }

    /// `R(-d)^rank`.
    pub fn uniform(ring: &Ring, rank: usize, degree: i32) -> Self {
        Self::new(ring, vec![degree; rank])
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }
    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    /// Twist `R(-a)` becomes `R(-a-shift)`.
    pub fn shifted(&self, shift: i32) -> Self {
        Self::new(&self.ring, self.degrees.iter().map(|d| d + shift).collect())
    }

    /// `Hom(F, R)`.
    pub fn dual(&self) -> Self {
        Self::new(&self.ring, self.degrees.iter().map(|d| -d).collect())
    }

    pub fn direct_sum(&self, other: &GradedFreeModule) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        Ok(Self::new(&self.ring, degrees))
    }

    /// Degree-sorted multiset of generator degrees, for comparing shapes.
    pub fn shape(&self) -> Vec<(i32, usize)> {
        let mut out: Vec<(i32, usize)> = Vec::new();
        let mut ds = self.degrees.clone();
        ds.sort();
        for d in ds {
            match out.last_mut() {
                Some((e, c)) if *e == d => *c += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    /// `∧^i F` with basis `e_S` indexed by the lexicographically ordered `i`-subsets.
    pub fn wedge_power(&self, i: usize) -> GradedFreeModule {
        if i > self.rank() {
            return Self::zero(&self.ring);
        }
        let degrees = subsets(self.rank(), i)
            .iter()
            .map(|s| s.iter().map(|&j| self.degrees[j]).sum())
            .collect();
        Self::new(&self.ring, degrees)
    }

    /// `F ⊗ G` with basis `e_a ⊗ f_b` at index `a * rank(G) + b`.
    pub fn tensor(&self, other: &GradedFreeModule) -> Result<GradedFreeModule> {
        self.ring.check_same(&other.ring)?;
        let mut degrees = Vec::with_capacity(self.rank() * other.rank());
        for a in &self.degrees {
            for b in &other.degrees {
                degrees.push(a + b);
            }
        }
        Ok(Self::new(&self.ring, degrees))
    }

    pub fn check_same(&self, other: &GradedFreeModule, what: &str) -> Result<()> {
        if self != other {
            return Err(Error::Dimension(format!(
                "{what}: module of degrees {:?} does not match {:?}",
                self.degrees, other.degrees
            )));
        }
        Ok(())
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Position of a strictly increasing subset of `0..n` in [`subsets`] order.
pub fn subset_index(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut idx = 0usize;
    let mut prev: usize = 0;
    for (pos, &s) in subset.iter().enumerate() {
        let start = if pos == 0 { 0 } else { prev + 1 };
        for v in start..s {
            idx += crate::ring::binomial((n - v - 1) as i64, (k - pos - 1) as i64) as usize;
        }
        prev = s;
    }
    idx
}
