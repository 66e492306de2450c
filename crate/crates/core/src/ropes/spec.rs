use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modfree::{subsets, GradedFreeModule, RingMatrix};
use crate::resolve::HilbertSeries;
use crate::ring::{Polynomial, Ring};

/// A rope on the line `x_0 = ... = x_r = 0` of `ℙ^n`, `r = n - 2`, given by a graded
/// matrix `B: ⊕ S(-β_j - 1) -> S(-1)^{r+1}` over `S = K[t, u]`.
#[derive(Clone, Debug)]
pub struct RopeSpec {
    n: usize,
    b: RingMatrix,
    beta: Vec<u32>,
}

/// `K[t, u]`.
pub fn line_ring(p: u32) -> Result<Ring> {
    Ring::named(p, &["t", "u"])
}

/// `K[x_0, ..., x_r, t, u]` for `ℙ^n`.
pub fn rope_ring(p: u32, n: usize) -> Result<Ring> {
    let mut names: Vec<String> = (0..n - 1).map(|i| format!("x{i}")).collect();
    names.push("t".into());
    names.push("u".into());
    Ring::named(p, &names)
}

impl RopeSpec {
    pub fn new(n: usize, b: RingMatrix) -> Result<Self> {
        if n < 3 {
            return Err(Error::SpecInvalid(format!("a rope needs n >= 3, got {n}")));
        }
        let s = b.ring();
        if s.nvars() != 2 {
            return Err(Error::SpecInvalid("B must have entries in K[t, u]".into()));
        }
        let r = n - 2;
        if b.nrows() != r + 1 || b.target().degrees().iter().any(|&d| d != 1) {
            return Err(Error::SpecInvalid(format!("B must map to S(-1)^{}", r + 1)));
        }
        if b.ncols() > r + 1 {
            return Err(Error::SpecInvalid(format!("B has {} columns but only {} rows", b.ncols(), r + 1)));
        }
        let mut beta = Vec::with_capacity(b.ncols());
        for j in 0..b.ncols() {
            let col = &b.columns()[j];
            let Some(first) = col.iter().find(|p| !p.is_zero()) else {
                return Err(Error::SpecInvalid(format!("column {} of B is zero", j + 1)));
            };
            let d = first.degree().unwrap();
            if col.iter().any(|p| !p.is_zero() && (!p.is_homogeneous() || p.degree() != Some(d))) {
                return Err(Error::SpecInvalid(format!("column {} of B is not homogeneous", j + 1)));
            }
            beta.push(d);
        }
        let source = GradedFreeModule::new(s, beta.iter().map(|&d| d as i32 + 1).collect());
        let b = b.with_modules(source, b.target().clone())?;
        let spec = RopeSpec { n, b, beta };
        let minors = spec.minors_ideal()?;
        if !minors.is_unit() && HilbertSeries::of_ideal(&minors).krull_dim() != 0 {
            return Err(Error::SpecInvalid(format!(
                "the maximal minors of B do not have codimension 2 in K[t, u]: {:?}",
                minors.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>()
            )));
        }
        Ok(spec)
    }

    /// `B` from its rows over `S`.
    pub fn from_rows(n: usize, s: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let target = GradedFreeModule::uniform(s, n - 1, 1);
        Self::new(n, RingMatrix::from_rows(target, rows)?)
    }

    /// The rope `L^{(2)}` with ideal `I_L^2`.
    pub fn square(p: u32, n: usize) -> Result<Self> {
        let s = line_ring(p)?;
        Self::from_rows(n, &s, vec![Vec::new(); n.saturating_sub(1)])
    }

    /// `(x_0, x_1)^2 + (x_0 t^β + x_1 u^β)` in `ℙ^3`.
    pub fn line_pair(p: u32, beta: u32) -> Result<Self> {
        let s = line_ring(p)?;
        Self::from_rows(3, &s, vec![vec![s.var(0).pow(beta)], vec![s.var(1).pow(beta)]])
    }

    /// `t^β` on the diagonal and `-u^β` below it: an `(r+1) × r` matrix, a double line.
    pub fn bidiagonal(p: u32, n: usize, beta: u32) -> Result<Self> {
        let s = line_ring(p)?;
        let r = n - 2;
        let (t, u) = (s.var(0).pow(beta), s.var(1).pow(beta));
        let rows = (0..=r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            t.clone()
                        } else if i == j + 1 {
                            -&u
                        } else {
                            s.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(n, &s, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> usize {
        self.n - 2
    }
    pub fn k(&self) -> usize {
        self.beta.len()
    }
    pub fn beta(&self) -> &[u32] {
        &self.beta
    }
    pub fn matrix(&self) -> &RingMatrix {
        &self.b
    }
    pub fn line_ring(&self) -> &Ring {
        self.b.ring()
    }
    pub fn characteristic(&self) -> u32 {
        self.b.ring().characteristic()
    }

    pub fn ring(&self) -> Result<Ring> {
        rope_ring(self.characteristic(), self.n)
    }

    /// Ideal of `k × k` minors of `B` in `S`.
    pub fn minors_ideal(&self) -> Result<Ideal> {
        let s = self.b.ring();
        let k = self.k();
        let gens = subsets(self.r() + 1, k)
            .iter()
            .map(|rows| {
                let m: Vec<Vec<Polynomial>> = rows
                    .iter()
                    .map(|&i| (0..k).map(|j| self.b.entry(i, j).clone()).collect())
                    .collect();
                determinant(s, &m)
            })
            .collect();
        Ideal::new(s, gens)
    }

    /// The spec without its last column.
    pub fn drop_last(&self) -> Result<Self> {
        let k = self.k();
        if k == 0 {
            return Err(Error::Precondition("no column to drop".into()));
        }
        Self::new(self.n, self.b.select_columns(&(0..k - 1).collect::<Vec<_>>()))
    }

    /// `B` with entries in `R`, as `τ_B: Q -> P`.
    pub fn tau(&self, ring: &Ring) -> Result<RingMatrix> {
        let r = self.r();
        let images = [ring.var(r + 1), ring.var(r + 2)];
        let q = GradedFreeModule::new(ring, self.b.source().degrees().to_vec());
        let p = GradedFreeModule::uniform(ring, r + 1, 1);
        let cols = self
            .b
            .columns()
            .iter()
            .map(|c| c.iter().map(|e| e.map(ring, &images)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RingMatrix::new(q, p, cols)
    }

    /// The generators `F_j = Σ_i x_i B_{ij}`.
    pub fn extra_generators(&self, ring: &Ring) -> Result<Vec<Polynomial>> {
        let tau = self.tau(ring)?;
        Ok(tau
            .columns()
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .fold(ring.zero(), |acc, (i, e)| &acc + &(&ring.var(i) * e))
            })
            .collect())
    }
}

/// Laplace expansion along the first row.
pub(crate) fn determinant(ring: &Ring, m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        0 => ring.one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = ring.zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &determinant(ring, &minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// `((x_0, ..., x_r)^2, F_1, ..., F_k)`.
pub fn rope_ideal(spec: &RopeSpec) -> Result<Ideal> {
    let ring = spec.ring()?;
    let r = spec.r();
    let mut gens = Vec::new();
    for i in 0..=r {
        for j in i..=r {
            gens.push(&ring.var(i) * &ring.var(j));
        }
    }
    gens.extend(spec.extra_generators(&ring)?);
    Ideal::new(&ring, gens)
}
