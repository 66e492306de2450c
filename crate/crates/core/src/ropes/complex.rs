use super::spec::{rope_ring, RopeSpec};
use crate::error::{Error, Result};
use crate::modfree::{subset_index, subsets, GradedFreeModule, RingMatrix};
use crate::resolve::FreeResolution;
use crate::ring::{PrimeField, Ring, Scalar};

// Bases: ∧^i P has the i-subsets of 0..m in lex order, ∧^i P ⊗ X has index
// subset_index(S) * rank X + a. ∧^i P sits in degree i.

fn wedge(ring: &Ring, m: usize, i: usize, shift: i32) -> GradedFreeModule {
    GradedFreeModule::uniform(ring, crate::ring::binomial(m as i64, i as i64) as usize, i as i32 + shift)
}

/// `∧^i P ⊗ X` for a free module `X` given by its degrees.
fn wedge_tensor(ring: &Ring, m: usize, i: usize, x: &[i32]) -> GradedFreeModule {
    let count = crate::ring::binomial(m as i64, i as i64) as usize;
    let mut degs = Vec::with_capacity(count * x.len());
    for _ in 0..count {
        degs.extend(x.iter().map(|&d| d + i as i32));
    }
    GradedFreeModule::new(ring, degs)
}

fn sign(k: &PrimeField, odd: bool) -> Scalar {
    if odd {
        k.neg(1)
    } else {
        1
    }
}

/// `δ_i ⊗ id_X: ∧^i P ⊗ X -> ∧^{i-1} P ⊗ X` with
/// `δ_i(e_{s_1} ∧ ... ∧ e_{s_i}) = Σ_j (-1)^{i-j} x_{s_j} e_{S \ s_j}`.
fn delta_tensor(ring: &Ring, m: usize, i: usize, x: &[i32]) -> RingMatrix {
    let k = *ring.field();
    let src = wedge_tensor(ring, m, i, x);
    let tgt = wedge_tensor(ring, m, i - 1, x);
    let mut out = RingMatrix::zero(&src, &tgt);
    let xr = x.len();
    for (si, s) in subsets(m, i).iter().enumerate() {
        for (pos, &v) in s.iter().enumerate() {
            let mut rest = s.clone();
            rest.remove(pos);
            let ti = subset_index(m, &rest);
            let e = ring.var(v).scale(sign(&k, (i - 1 - pos) % 2 == 1));
            for a in 0..xr {
                out.set_entry(ti * xr + a, si * xr + a, e.clone());
            }
        }
    }
    out
}

/// Koszul differential `δ_i: ∧^i P -> ∧^{i-1} P`.
pub fn koszul_differential(ring: &Ring, m: usize, i: usize) -> RingMatrix {
    delta_tensor(ring, m, i, &[0])
}

/// Koszul complex on `x_0, ..., x_{m-1}`, resolving `R / I_L`.
pub fn koszul_complex(ring: &Ring, num_lin: usize) -> Result<FreeResolution> {
    if num_lin == 0 || num_lin > ring.nvars() {
        return Err(Error::Argument(format!(
            "need 1 <= num_lin <= {}, got {num_lin}",
            ring.nvars()
        )));
    }
    FreeResolution::from_differentials((1..=num_lin).map(|i| koszul_differential(ring, num_lin, i)).collect())
}

/// `∂_i: ∧^i P -> ∧^{i-1} P ⊗ P`, `u_1 ∧ ... ∧ u_i ↦ Σ_j (-1)^{j+1} (... û_j ...) ⊗ u_j`.
fn coproduct(ring: &Ring, m: usize, i: usize) -> RingMatrix {
    let k = *ring.field();
    let src = wedge(ring, m, i, 0);
    let tgt = wedge_tensor(ring, m, i - 1, &vec![1; m]);
    let mut out = RingMatrix::zero(&src, &tgt);
    for (si, s) in subsets(m, i).iter().enumerate() {
        for (pos, &v) in s.iter().enumerate() {
            let mut rest = s.clone();
            rest.remove(pos);
            let row = subset_index(m, &rest) * m + v;
            out.set_entry(row, si, ring.constant(sign(&k, pos % 2 == 1)));
        }
    }
    out
}

/// `δ_1 ⊗ δ_1: P ⊗ P -> R`.
fn square_map(ring: &Ring, m: usize) -> RingMatrix {
    let src = GradedFreeModule::uniform(ring, m * m, 2);
    let tgt = GradedFreeModule::uniform(ring, 1, 0);
    let cols = (0..m * m).map(|idx| vec![&ring.var(idx / m) * &ring.var(idx % m)]).collect();
    RingMatrix::new(src, tgt, cols).expect("shapes")
}

/// The non-minimal resolution of `R / I_L^2` with terms `(∧^i P ⊗ P) ⊕ ∧^i P` and block
/// differentials built from `δ_i ⊗ id_P`, `∂_i` and `δ_i`.
pub fn square_resolution(p: u32, n: usize) -> Result<FreeResolution> {
    if n < 3 {
        return Err(Error::Argument(format!("need n >= 3, got {n}")));
    }
    let ring = rope_ring(p, n)?;
    let k = *ring.field();
    let m = n - 1;
    let ones = vec![1; m];
    let mut ds = vec![square_map(&ring, m)];
    ds.push(delta_tensor(&ring, m, 2, &ones).hstack(&coproduct(&ring, m, 2))?);
    for i in 3..=m {
        let zero = RingMatrix::zero(&wedge_tensor(&ring, m, i, &ones), &wedge(&ring, m, i - 1, 0));
        ds.push(RingMatrix::block(
            &delta_tensor(&ring, m, i, &ones),
            &coproduct(&ring, m, i).scale(sign(&k, i % 2 == 1)),
            &zero,
            &koszul_differential(&ring, m, i),
        )?);
    }
    FreeResolution::from_differentials(ds)
}

/// Row-reduced basis of a growing span of vectors over `K`.
struct Echelon {
    k: PrimeField,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    fn new(k: PrimeField) -> Self {
        Echelon { k, rows: Vec::new() }
    }

    /// Adds `v` if it is independent of the span so far.
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        let k = self.k;
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = k.sub(*x, k.mul(c, *y));
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = k.inv(v[piv]).unwrap();
        for x in v.iter_mut() {
            *x = k.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = k.sub(*x, k.mul(c, *y));
                }
            }
        }
        self.rows.push((piv, v));
        true
    }
}

/// Inverse of a square matrix given row-wise.
fn invert(k: &PrimeField, m: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1 } else { 0 }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| a[r][c] != 0)
            .ok_or_else(|| Error::Internal("singular change of basis".into()))?;
        a.swap(c, p);
        let inv = k.inv(a[c][c])?;
        for x in a[c].iter_mut() {
            *x = k.mul(*x, inv);
        }
        let piv = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&piv) {
                    *x = k.sub(*x, k.mul(f, *y));
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `D_i` as a direct summand of `∧^i P ⊗ P` complementary to `∂_{i+1}(∧^{i+1} P)`.
#[derive(Clone, Debug)]
pub struct SplitPart {
    /// Standard basis vectors of `∧^i P ⊗ P` spanning `D_i`.
    pub complement: Vec<usize>,
    /// `ι: D_i -> ∧^i P ⊗ P`, row-wise.
    pub inclusion: Vec<Vec<Scalar>>,
    /// `π: ∧^i P ⊗ P -> D_i` with kernel the image of `∂_{i+1}` and `π ∘ ι = id`, row-wise.
    pub projection: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug)]
pub struct SplitComplement {
    ring: Ring,
    m: usize,
    /// `parts[i - 1]` describes `D_i`, `1 <= i <= m`.
    parts: Vec<SplitPart>,
}

pub fn split_complement(p: u32, n: usize) -> Result<SplitComplement> {
    if n < 3 {
        return Err(Error::Argument(format!("need n >= 3, got {n}")));
    }
    let ring = rope_ring(p, n)?;
    let k = *ring.field();
    let m = n - 1;
    let mut parts = Vec::with_capacity(m);
    for i in 1..=m {
        let big = crate::ring::binomial(m as i64, i as i64) as usize * m;
        let image: Vec<Vec<Scalar>> = if i < m {
            let d = coproduct(&ring, m, i + 1);
            d.columns().iter().map(|c| c.iter().map(|e| e.constant_term()).collect()).collect()
        } else {
            Vec::new()
        };
        let mut ech = Echelon::new(k);
        for v in &image {
            if !ech.insert(v.clone()) {
                return Err(Error::Internal(format!("∂_{} is not injective", i + 1)));
            }
        }
        let mut complement = Vec::new();
        for e in 0..big {
            let mut v = vec![0; big];
            v[e] = 1;
            if ech.insert(v) {
                complement.push(e);
            }
        }
        // columns: image vectors then complement vectors; rows of the inverse split coordinates
        let mut basis = vec![vec![0; big]; big];
        for (c, v) in image.iter().enumerate() {
            for (r, &x) in v.iter().enumerate() {
                basis[r][c] = x;
            }
        }
        for (c, &e) in complement.iter().enumerate() {
            basis[e][image.len() + c] = 1;
        }
        let inv = invert(&k, &basis)?;
        let projection = inv[image.len()..].to_vec();
        let inclusion = (0..big)
            .map(|r| complement.iter().map(|&e| if e == r { 1 } else { 0 }).collect())
            .collect();
        parts.push(SplitPart { complement, inclusion, projection });
    }
    Ok(SplitComplement { ring, m, parts })
}

impl SplitComplement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn part(&self, i: usize) -> &SplitPart {
        &self.parts[i - 1]
    }

    /// `rank D_i`; zero outside `1..=m`.
    pub fn rank(&self, i: usize) -> usize {
        if i == 0 || i > self.m {
            0
        } else {
            self.parts[i - 1].complement.len()
        }
    }

    /// `D_i`, generated in degree `i + 1`.
    pub fn module(&self, i: usize) -> GradedFreeModule {
        GradedFreeModule::uniform(&self.ring, self.rank(i), i as i32 + 1)
    }

    fn ambient(&self, i: usize) -> GradedFreeModule {
        wedge_tensor(&self.ring, self.m, i, &vec![1; self.m])
    }

    pub fn inclusion(&self, i: usize) -> RingMatrix {
        RingMatrix::from_scalars(&self.module(i), &self.ambient(i), &self.parts[i - 1].inclusion).expect("shapes")
    }

    pub fn projection(&self, i: usize) -> RingMatrix {
        RingMatrix::from_scalars(&self.ambient(i), &self.module(i), &self.parts[i - 1].projection).expect("shapes")
    }

    /// `∂_{i+1}: ∧^{i+1} P -> ∧^i P ⊗ P` in the ring of the complement.
    pub fn coproduct(&self, i: usize) -> RingMatrix {
        coproduct(&self.ring, self.m, i)
    }

    /// The induced differential `d_i: D_i -> D_{i-1}`, with `d_1: D_1 -> R`.
    pub fn differential(&self, i: usize) -> Result<RingMatrix> {
        let ones = vec![1; self.m];
        if i == 1 {
            return square_map(&self.ring, self.m).compose(&self.inclusion(1));
        }
        self.projection(i - 1)
            .compose(&delta_tensor(&self.ring, self.m, i, &ones))?
            .compose(&self.inclusion(i))
    }

    /// The complex `D_•` resolving `R / I_L^2`.
    pub fn complex(&self) -> Result<FreeResolution> {
        FreeResolution::from_differentials((1..=self.m).map(|i| self.differential(i)).collect::<Result<Vec<_>>>()?)
    }

    /// `μ_i: ∧^{i-1} P ⊗ Q -> D_{i-1}` for `i >= 2`, and `μ_1 = δ_1 ∘ τ_B: Q -> R`.
    pub fn mu(&self, i: usize, tau: &RingMatrix) -> Result<RingMatrix> {
        if i == 1 {
            return koszul_differential(&self.ring, self.m, 1)
                .with_modules(tau.target().clone(), GradedFreeModule::uniform(&self.ring, 1, 0))?
                .compose(tau);
        }
        let lifted = wedge_times(&self.ring, self.m, i - 1, tau)?;
        self.projection(i - 1).compose(&lifted)
    }
}

/// `id_{∧^j P} ⊗ τ: ∧^j P ⊗ Q -> ∧^j P ⊗ P`.
fn wedge_times(ring: &Ring, m: usize, j: usize, tau: &RingMatrix) -> Result<RingMatrix> {
    let q = tau.source().degrees().to_vec();
    let src = wedge_tensor(ring, m, j, &q);
    let tgt = wedge_tensor(ring, m, j, &vec![1; m]);
    let mut out = RingMatrix::zero(&src, &tgt);
    let count = crate::ring::binomial(m as i64, j as i64) as usize;
    for s in 0..count {
        for (b, _) in q.iter().enumerate() {
            for a in 0..m {
                out.set_entry(s * m + a, s * q.len() + b, tau.entry(a, b).clone());
            }
        }
    }
    Ok(out)
}

/// The resolution `G_•` of `R / I_C` with `G_i = D_i ⊕ (∧^{i-1} P ⊗ Q)`.
pub fn rope_complex(spec: &RopeSpec) -> Result<FreeResolution> {
    let n = spec.n();
    let split = split_complement(spec.characteristic(), n)?;
    let ring = split.ring().clone();
    let k = *ring.field();
    let m = n - 1;
    let tau = spec.tau(&ring)?;
    let q = tau.source().degrees().to_vec();
    let mut ds = vec![split.differential(1)?.hstack(&split.mu(1, &tau)?.neg())?];
    for i in 2..=n {
        let d = if i <= m {
            split.differential(i)?
        } else {
            RingMatrix::zero(&split.module(i), &split.module(i - 1))
        };
        let lower = delta_tensor(&ring, m, i - 1, &q);
        let zero = RingMatrix::zero(&split.module(i), lower.target());
        let mu = split.mu(i, &tau)?.scale(sign(&k, i % 2 == 1));
        ds.push(RingMatrix::block(&d, &mu, &zero, &lower)?);
    }
    while ds.len() > 1 && ds.last().is_some_and(|d| d.ncols() == 0) {
        ds.pop();
    }
    FreeResolution::from_differentials(ds)
}
