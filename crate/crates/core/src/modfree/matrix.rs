use std::fmt;

use super::{GradedFreeModule, ModuleElement};
use crate::error::{Error, Result};
use crate::ring::{Polynomial, Ring, Scalar};

/// A graded map `source -> target`; column `j` is the image of the `j`-th source generator.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix {
    source: GradedFreeModule,
    target: GradedFreeModule,
    cols: Vec<Vec<Polynomial>>,
}

impl RingMatrix {
    pub fn new(
        source: GradedFreeModule,
        target: GradedFreeModule,
        cols: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        source.ring().check_same(target.ring())?;
        if cols.len() != source.rank() {
            return Err(Error::Dimension(format!(
                "{} columns for a source of rank {}",
                cols.len(),
                source.rank()
            )));
        }
        for c in &cols {
            if c.len() != target.rank() {
                return Err(Error::Dimension(format!(
                    "column of length {} for a target of rank {}",
                    c.len(),
                    target.rank()
                )));
            }
            for p in c {
                source.ring().check_same(p.ring())?;
            }
        }
        Ok(RingMatrix { source, target, cols })
    }

    /// Rows of polynomials; the source degrees are inferred from the first nonzero
    /// entry of each column (degree of the entry plus the row's target degree).
    pub fn from_rows(target: GradedFreeModule, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows or row count mismatch".into()));
        }
        let mut cols = vec![Vec::with_capacity(rows.len()); ncols];
        for row in &rows {
            for (j, p) in row.iter().enumerate() {
                cols[j].push(p.clone());
            }
        }
        let degrees = cols
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .find(|(_, p)| !p.is_zero())
                    .map(|(i, p)| p.degree().unwrap() as i32 + target.degree(i))
                    .unwrap_or(0)
            })
            .collect();
        let source = GradedFreeModule::new(target.ring(), degrees);
        Self::new(source, target, cols)
    }

    pub fn zero(source: &GradedFreeModule, target: &GradedFreeModule) -> Self {
        let ring = source.ring();
        RingMatrix {
            source: source.clone(),
            target: target.clone(),
            cols: vec![vec![ring.zero(); target.rank()]; source.rank()],
        }
    }

    pub fn identity(module: &GradedFreeModule) -> Self {
        let mut m = Self::zero(module, module);
        for i in 0..module.rank() {
            m.cols[i][i] = module.ring().one();
        }
        m
    }

    /// Scalar matrix given row-wise.
    pub fn from_scalars(
        source: &GradedFreeModule,
        target: &GradedFreeModule,
        rows: &[Vec<Scalar>],
    ) -> Result<Self> {
        let ring = source.ring();
        let cols = (0..source.rank())
            .map(|j| (0..target.rank()).map(|i| ring.constant(rows[i][j])).collect())
            .collect();
        Self::new(source.clone(), target.clone(), cols)
    }

    pub fn ring(&self) -> &Ring {
        self.source.ring()
    }
    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }
    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }
    pub fn nrows(&self) -> usize {
        self.target.rank()
    }
    pub fn ncols(&self) -> usize {
        self.source.rank()
    }
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }
    pub fn set_entry(&mut self, i: usize, j: usize, p: Polynomial) {
        self.cols[j][i] = p;
    }
    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }
    pub fn column(&self, j: usize) -> ModuleElement {
        ModuleElement::from_column(self.ring(), &self.cols[j])
    }
    pub fn column_elements(&self) -> Vec<ModuleElement> {
        (0..self.ncols()).map(|j| self.column(j)).collect()
    }

    pub fn from_elements(
        source: GradedFreeModule,
        target: GradedFreeModule,
        elems: &[ModuleElement],
    ) -> Result<Self> {
        let cols = elems.iter().map(|e| e.to_column(target.rank())).collect();
        Self::new(source, target, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().flatten().all(|p| p.is_zero())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.source != other.target {
            return Err(Error::Dimension(format!(
                "cannot compose: source degrees {:?} vs target degrees {:?}",
                self.source.degrees(),
                other.target.degrees()
            )));
        }
        let ring = self.ring();
        let mut cols = Vec::with_capacity(other.ncols());
        for oc in &other.cols {
            let mut col = vec![ring.zero(); self.nrows()];
            for (k, g) in oc.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                for (i, slot) in col.iter_mut().enumerate() {
                    let f = &self.cols[k][i];
                    if !f.is_zero() {
                        *slot = &*slot + &(f * g);
                    }
                }
            }
            cols.push(col);
        }
        Ok(RingMatrix {
            source: other.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    /// The transpose as a map between duals `target^* -> source^*`.
    pub fn transpose(&self) -> RingMatrix {
        let cols = (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.cols[j][i].clone()).collect())
            .collect();
        RingMatrix {
            source: self.target.dual(),
            target: self.source.dual(),
            cols,
        }
    }

    pub fn try_add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.source.check_same(&other.source, "matrix sum")?;
        self.target.check_same(&other.target, "matrix sum")?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(RingMatrix {
            source: self.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    pub fn scale(&self, c: Scalar) -> RingMatrix {
        let mut out = self.clone();
        for p in out.cols.iter_mut().flatten() {
            *p = p.scale(c);
        }
        out
    }

    pub fn neg(&self) -> RingMatrix {
        self.scale(self.ring().field().neg(1))
    }

    /// Block matrix `[[a, b], [c, d]]` from `S1 ⊕ S2` to `T1 ⊕ T2`.
    pub fn block(a: &RingMatrix, b: &RingMatrix, c: &RingMatrix, d: &RingMatrix) -> Result<RingMatrix> {
        a.source.check_same(&c.source, "block column 1")?;
        b.source.check_same(&d.source, "block column 2")?;
        a.target.check_same(&b.target, "block row 1")?;
        c.target.check_same(&d.target, "block row 2")?;
        let source = a.source.direct_sum(&b.source)?;
        let target = a.target.direct_sum(&c.target)?;
        let mut cols = Vec::with_capacity(source.rank());
        for j in 0..a.ncols() {
            let mut col = a.cols[j].clone();
            col.extend(c.cols[j].iter().cloned());
            cols.push(col);
        }
        for j in 0..b.ncols() {
            let mut col = b.cols[j].clone();
            col.extend(d.cols[j].iter().cloned());
            cols.push(col);
        }
        RingMatrix::new(source, target, cols)
    }

    /// Columns of `self` followed by those of `other`.
    pub fn hstack(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.target.check_same(&other.target, "hstack")?;
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        RingMatrix::new(self.source.direct_sum(&other.source)?, self.target.clone(), cols)
    }

    /// Rows of `self` followed by those of `other`.
    pub fn vstack(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.source.check_same(&other.source, "vstack")?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        RingMatrix::new(self.source.clone(), self.target.direct_sum(&other.target)?, cols)
    }

    pub fn select_columns(&self, keep: &[usize]) -> RingMatrix {
        let source = GradedFreeModule::new(
            self.ring(),
            keep.iter().map(|&j| self.source.degree(j)).collect(),
        );
        RingMatrix {
            source,
            target: self.target.clone(),
            cols: keep.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    pub fn select_rows(&self, keep: &[usize]) -> RingMatrix {
        let target = GradedFreeModule::new(
            self.ring(),
            keep.iter().map(|&i| self.target.degree(i)).collect(),
        );
        RingMatrix {
            source: self.source.clone(),
            target,
            cols: self
                .cols
                .iter()
                .map(|c| keep.iter().map(|&i| c[i].clone()).collect())
                .collect(),
        }
    }

    /// Same entries with new source/target degree bookkeeping.
    pub fn with_modules(&self, source: GradedFreeModule, target: GradedFreeModule) -> Result<RingMatrix> {
        RingMatrix::new(source, target, self.cols.clone())
    }

    /// Every nonzero entry `(i, j)` is homogeneous of degree `src(j) - tgt(i)`.
    pub fn is_homogeneous(&self) -> bool {
        self.degree_violation().is_none()
    }

    pub fn degree_violation(&self) -> Option<(usize, usize)> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, p) in c.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = self.source.degree(j) - self.target.degree(i);
                if !p.is_homogeneous() || p.degree().map(|d| d as i32) != Some(want) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.cols
            .iter()
            .flatten()
            .any(|p| !p.is_zero() && p.is_constant())
    }

    /// Apply a ring map entrywise, keeping degree bookkeeping.
    pub fn map_entries(&self, target_ring: &Ring, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<RingMatrix> {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(&f).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RingMatrix::new(
            GradedFreeModule::new(target_ring, self.source.degrees().to_vec()),
            GradedFreeModule::new(target_ring, self.target.degrees().to_vec()),
            cols,
        )
    }

    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.cols[j][i].to_string()).collect())
            .collect()
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "RingMatrix {:?} -> {:?}",
            self.source.degrees(),
            self.target.degrees()
        )?;
        for row in self.rows_as_strings() {
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
