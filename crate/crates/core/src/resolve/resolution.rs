use crate::error::{Error, Result};
use crate::groebner::engine::{self, Reducer, Term};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::modfree::{GradedFreeModule, ModuleOrder, RingMatrix};
use crate::ring::{Monomial, Polynomial, Ring, Scalar};

/// `0 <- F_0 <- F_1 <- ... <- F_p`, with `differentials[i - 1]: F_i -> F_{i-1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    modules: Vec<GradedFreeModule>,
    differentials: Vec<RingMatrix>,
    minimal: bool,
}

impl FreeResolution {
    /// Assemble from differentials `d_1, ..., d_p`; consecutive maps must share modules.
    pub fn from_differentials(differentials: Vec<RingMatrix>) -> Result<Self> {
        let first = differentials
            .first()
            .ok_or_else(|| Error::Argument("a resolution needs at least one differential".into()))?;
        let mut modules = vec![first.target().clone()];
        for (i, d) in differentials.iter().enumerate() {
            d.target().check_same(&modules[i], "differential target")?;
            modules.push(d.source().clone());
        }
        let minimal = differentials.iter().all(|d| !d.has_unit_entry());
        Ok(FreeResolution {
            modules,
            differentials,
            minimal,
        })
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }
    pub fn module(&self, i: usize) -> &GradedFreeModule {
        &self.modules[i]
    }
    /// `d_i: F_i -> F_{i-1}` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &RingMatrix {
        &self.differentials[i - 1]
    }
    pub fn differentials(&self) -> &[RingMatrix] {
        &self.differentials
    }
    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.modules.iter().rposition(|m| m.rank() > 0).unwrap_or(0)
    }
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }
    pub fn ring(&self) -> &Ring {
        self.modules[0].ring()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// All consecutive compositions vanish.
    pub fn is_complex(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[0].compose(&w[1]).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// Drop trailing zero modules.
    fn trimmed(mut self) -> Self {
        let len = self.length().max(1);
        self.modules.truncate(len + 1);
        self.differentials.truncate(len);
        self
    }
}

/// Iterated Schreyer syzygies of a rank-one Gröbner basis, resolving `R/I` non-minimally.
pub fn schreyer_resolution(ideal: &Ideal) -> Result<FreeResolution> {
    ideal.check_homogeneous()?;
    let ring = ideal.ring().clone();
    let k = *ring.field();
    let n = ring.nvars();
    let gb = ideal.gb();
    if gb.lead_monomials().iter().any(|m| m.is_one()) {
        return Err(Error::Argument("the unit ideal has no quotient to resolve".into()));
    }
    let f0 = GradedFreeModule::new(&ring, vec![0]);
    let mut differentials = Vec::new();
    let mut order = ModuleOrder::PositionOverTerm(ring.order());
    let mut target = f0;
    let mut level: Vec<Vec<Term>> = gb.raw().to_vec();

    while !level.is_empty() {
        if differentials.len() >= n {
            return Err(Error::Internal(format!(
                "Schreyer frame did not terminate within {n} steps"
            )));
        }
        sort_level(&mut level);
        let degrees: Vec<i32> = level
            .iter()
            .map(|v| v[0].1.degree() as i32 + target.degree(v[0].0 as usize))
            .collect();
        let source = GradedFreeModule::new(&ring, degrees);
        let cols: Vec<Vec<Polynomial>> = level
            .iter()
            .map(|v| engine::to_element(&ring, v).to_column(target.rank()))
            .collect();
        differentials.push(RingMatrix::new(source.clone(), target.clone(), cols)?);

        let leads: Vec<(Monomial, u32)> = level.iter().map(|v| (v[0].1, v[0].0)).collect();
        let next_order = order.induced(&leads);
        let next = schreyer_step(&ring, &order, &next_order, &level, &k)?;
        order = next_order;
        target = source;
        level = next;
    }
    if differentials.is_empty() {
        let z = GradedFreeModule::zero(&ring);
        differentials.push(RingMatrix::zero(&z, &GradedFreeModule::new(&ring, vec![0])));
    }
    let mut res = FreeResolution::from_differentials(differentials)?;
    res.minimal = res.differentials.iter().all(|d| !d.has_unit_entry());
    Ok(res.trimmed())
}

/// Within each component, leads in decreasing lex order; keeps the frame length bounded.
fn sort_level(level: &mut [Vec<Term>]) {
    level.sort_by(|a, b| {
        a[0].0
            .cmp(&b[0].0)
            .then_with(|| b[0].1.exponents().cmp(a[0].1.exponents()))
    });
}

/// Syzygies of a Gröbner basis `level` (w.r.t. `order`), as vectors sorted by `next_order`.
pub(crate) fn schreyer_step(
    _ring: &Ring,
    order: &ModuleOrder,
    next_order: &ModuleOrder,
    level: &[Vec<Term>],
    k: &crate::ring::PrimeField,
) -> Result<Vec<Vec<Term>>> {
    let ncomp = level.iter().map(|v| v[0].0 as usize + 1).max().unwrap_or(0);
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for (i, v) in level.iter().enumerate() {
        by_comp[v[0].0 as usize].push(i);
    }
    let reducer = Reducer {
        ord: order,
        k: *k,
        elems: level,
        by_comp: &by_comp,
    };
    let mut out = Vec::new();
    for idxs in &by_comp {
        for (a, &ka) in idxs.iter().enumerate() {
            let ma = level[ka][0].1;
            // minimal generators of the quotient monomials lcm(m_a, m_b) / m_a, b after a
            let mut quots: Vec<(Monomial, usize)> = Vec::new();
            for &kb in &idxs[a + 1..] {
                let q = ma.quotient_of(&ma.lcm(&level[kb][0].1)).unwrap();
                quots.push((q, kb));
            }
            let mut minimal: Vec<(Monomial, usize)> = Vec::new();
            for (i, (q, kb)) in quots.iter().enumerate() {
                let dominated = quots.iter().enumerate().any(|(j, (p, _))| {
                    p.divides(q) && (p != q || j < i)
                });
                if !dominated {
                    minimal.push((*q, *kb));
                }
            }
            for (qa, kb) in minimal {
                let mb = level[kb][0].1;
                let qb = mb.quotient_of(&ma.mul(&qa)).unwrap();
                let ca = level[ka][0].2;
                let cb = level[kb][0].2;
                let ratio = k.mul(ca, k.inv(cb)?);
                let s = engine::sub_mul(order, k, &engine::mul_term(k, &level[ka], 1, &qa), ratio, &qb, &level[kb]);
                let mut steps = Vec::new();
                let rem = reducer.reduce(s, true, None, Some(&mut steps));
                if !rem.is_empty() {
                    return Err(Error::Internal("s-vector of a Gröbner basis did not reduce to zero".into()));
                }
                let mut terms: Vec<Term> = vec![(ka as u32, qa, 1), (kb as u32, qb, k.neg(ratio))];
                for (idx, m, c) in steps {
                    terms.push((idx as u32, m, k.neg(c)));
                }
                let v = engine::normalize(next_order, k, terms);
                debug_assert_eq!(v[0].0 as usize, ka);
                debug_assert_eq!(v[0].1, qa);
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Cancel unit entries until none remain.
pub fn minimalize(res: &FreeResolution) -> FreeResolution {
    let ring = res.ring().clone();
    let mut degs: Vec<Vec<i32>> = res.modules.iter().map(|m| m.degrees().to_vec()).collect();
    let mut mats: Vec<Vec<Vec<Polynomial>>> = res.differentials.iter().map(|d| d.columns().to_vec()).collect();
    let k = *ring.field();
    for i in 0..mats.len() {
        loop {
            let pivot = find_unit(&mats[i]);
            let Some((r, c, a)) = pivot else { break };
            let inv = k.inv(a).expect("unit");
            // rank-one update of d_i: d[l][m] -= d[l][c] * d[r][m] / a
            let col_c = mats[i][c].clone();
            let ncols = mats[i].len();
            for m in 0..ncols {
                if m == c {
                    continue;
                }
                let drm = mats[i][m][r].clone();
                if drm.is_zero() {
                    continue;
                }
                let f = drm.scale(inv);
                for (l, dlc) in col_c.iter().enumerate() {
                    if l == r || dlc.is_zero() {
                        continue;
                    }
                    let upd = &mats[i][m][l] - &(dlc * &f);
                    mats[i][m][l] = upd;
                }
            }
            mats[i].remove(c);
            for col in mats[i].iter_mut() {
                col.remove(r);
            }
            degs[i + 1].remove(c);
            degs[i].remove(r);
            if i + 1 < mats.len() {
                for col in mats[i + 1].iter_mut() {
                    col.remove(c);
                }
            }
            if i > 0 {
                mats[i - 1].remove(r);
            }
        }
    }
    let mut differentials = Vec::with_capacity(mats.len());
    for (i, cols) in mats.into_iter().enumerate() {
        let src = GradedFreeModule::new(&ring, degs[i + 1].clone());
        let tgt = GradedFreeModule::new(&ring, degs[i].clone());
        differentials.push(RingMatrix::new(src, tgt, cols).expect("shapes preserved"));
    }
    let mut out = FreeResolution::from_differentials(differentials).expect("chain preserved");
    out.minimal = true;
    out.trimmed()
}

fn find_unit(cols: &[Vec<Polynomial>]) -> Option<(usize, usize, Scalar)> {
    for (c, col) in cols.iter().enumerate() {
        for (r, p) in col.iter().enumerate() {
            if !p.is_zero() && p.is_constant() {
                return Some((r, c, p.constant_term()));
            }
        }
    }
    None
}

/// Minimal free resolution of `R/I`.
pub fn free_resolution(ideal: &Ideal) -> Result<FreeResolution> {
    Ok(minimalize(&schreyer_resolution(ideal)?))
}

/// Reduced Gröbner basis of the column space of a graded matrix, then the Schreyer step.
pub(crate) fn gb_syzygies(gb: &GroebnerBasis) -> Result<Vec<Vec<Term>>> {
    let ring = gb.ring();
    let k = *ring.field();
    let next = gb.order().induced(&gb.leads());
    schreyer_step(ring, gb.order(), &next, gb.raw(), &k)
}
