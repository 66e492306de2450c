use super::engine::{self, Reducer, Term};
use crate::error::{Error, Result};
use crate::modfree::{GradedFreeModule, ModuleElement, ModuleOrder, RingMatrix};
use crate::ring::{Monomial, Polynomial, Ring};

/// A reduced Gröbner basis of a submodule of a graded free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: ModuleOrder,
    degrees: Vec<i32>,
    elems: Vec<Vec<Term>>,
    by_comp: Vec<Vec<usize>>,
    reprs: Option<Vec<ModuleElement>>,
}

impl GroebnerBasis {
    /// Gröbner basis of the submodule generated by `gens` inside `⊕ R(-degrees[i])`.
    pub fn compute(ring: &Ring, degrees: &[i32], gens: &[ModuleElement], order: &ModuleOrder) -> Self {
        Self::build(ring, degrees, gens, order, false)
    }

    /// Like [`compute`](Self::compute), also expressing every basis element in terms of `gens`.
    pub fn compute_tracked(ring: &Ring, degrees: &[i32], gens: &[ModuleElement], order: &ModuleOrder) -> Self {
        Self::build(ring, degrees, gens, order, true)
    }

    fn build(ring: &Ring, degrees: &[i32], gens: &[ModuleElement], order: &ModuleOrder, track: bool) -> Self {
        let k = *ring.field();
        let inputs = gens.iter().map(|g| engine::from_element(order, &k, g)).collect();
        let out = engine::buchberger(ring, order, degrees, inputs, track);
        Self::from_parts(ring, degrees.to_vec(), order.clone(), out.elems, out.reprs)
    }

    fn from_parts(
        ring: &Ring,
        degrees: Vec<i32>,
        order: ModuleOrder,
        elems: Vec<Vec<Term>>,
        reprs: Option<Vec<ModuleElement>>,
    ) -> Self {
        let mut by_comp = vec![Vec::new(); degrees.len()];
        for (i, e) in elems.iter().enumerate() {
            by_comp[e[0].0 as usize].push(i);
        }
        GroebnerBasis {
            ring: ring.clone(),
            order,
            degrees,
            elems,
            by_comp,
            reprs,
        }
    }

    /// Gröbner basis of an ideal under the ring's own monomial order.
    pub fn of_polynomials(ring: &Ring, gens: &[Polynomial]) -> Self {
        let elems: Vec<ModuleElement> = gens
            .iter()
            .map(|g| ModuleElement::from_column(ring, std::slice::from_ref(g)))
            .collect();
        Self::compute(ring, &[0], &elems, &ModuleOrder::PositionOverTerm(ring.order()))
    }

    /// Gröbner basis of the column space of `m`.
    pub fn of_columns(m: &RingMatrix, order: &ModuleOrder) -> Self {
        Self::compute(m.ring(), m.target().degrees(), &m.column_elements(), order)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }
    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
    pub fn len(&self) -> usize {
        self.elems.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub(crate) fn raw(&self) -> &[Vec<Term>] {
        &self.elems
    }

    pub fn elements(&self) -> Vec<ModuleElement> {
        self.elems.iter().map(|v| engine::to_element(&self.ring, v)).collect()
    }

    /// Basis elements of a rank-one basis as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elems
            .iter()
            .map(|v| {
                let terms = v.iter().map(|t| (t.1, t.2)).collect();
                Polynomial::from_terms(&self.ring, terms)
            })
            .collect()
    }

    /// Leading `(monomial, component)` of every element.
    pub fn leads(&self) -> Vec<(Monomial, u32)> {
        self.elems.iter().map(|v| (v[0].1, v[0].0)).collect()
    }

    /// Representations in terms of the input generators, if tracked.
    pub fn representations(&self) -> Option<&[ModuleElement]> {
        self.reprs.as_deref()
    }

    /// Degree of element `i` in the ambient grading.
    pub fn element_degree(&self, i: usize) -> i32 {
        let t = &self.elems[i][0];
        t.1.degree() as i32 + self.degrees[t.0 as usize]
    }

    /// The basis as a matrix into the ambient module; homogeneous input gives a graded map.
    pub fn matrix(&self) -> RingMatrix {
        let target = GradedFreeModule::new(&self.ring, self.degrees.clone());
        let source = GradedFreeModule::new(&self.ring, (0..self.len()).map(|i| self.element_degree(i)).collect());
        RingMatrix::from_elements(source, target, &self.elements()).expect("consistent shapes")
    }

    fn reducer(&self) -> Reducer<'_> {
        Reducer {
            ord: &self.order,
            k: *self.ring.field(),
            elems: &self.elems,
            by_comp: &self.by_comp,
        }
    }

    fn check(&self, v: &ModuleElement) -> Result<()> {
        self.ring.check_same(v.ring())?;
        if let Some(c) = v.max_component() {
            if c as usize >= self.rank() {
                return Err(Error::Dimension(format!(
                    "element has component {c} but the module has rank {}",
                    self.rank()
                )));
            }
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &ModuleElement) -> Result<ModuleElement> {
        self.check(v)?;
        let k = *self.ring.field();
        let t = engine::from_element(&self.order, &k, v);
        Ok(engine::to_element(&self.ring, &self.reducer().reduce(t, true, None, None)))
    }

    pub fn normal_form_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        let v = ModuleElement::from_column(&self.ring, std::slice::from_ref(f));
        let r = self.normal_form(&v)?;
        Ok(r.to_column(1).pop().unwrap())
    }

    pub fn contains(&self, v: &ModuleElement) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form_poly(f)?.is_zero())
    }

    /// Division `v = Σ q_i g_i + r` with the quotients indexed by basis element.
    pub fn divide(&self, v: &ModuleElement) -> Result<(Vec<Polynomial>, ModuleElement)> {
        self.check(v)?;
        let k = *self.ring.field();
        let t = engine::from_element(&self.order, &k, v);
        let (q, r) = self.divide_raw(t);
        Ok((q, engine::to_element(&self.ring, &r)))
    }

    pub(crate) fn divide_raw(&self, v: Vec<Term>) -> (Vec<Polynomial>, Vec<Term>) {
        let mut steps = Vec::new();
        let r = self.reducer().reduce(v, true, None, Some(&mut steps));
        let mut q: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); self.len()];
        for (idx, m, c) in steps {
            q[idx].push((m, c));
        }
        let q = q.into_iter().map(|t| Polynomial::from_terms(&self.ring, t)).collect();
        (q, r)
    }

    /// Leading monomials of a rank-one basis.
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|v| v[0].1).collect()
    }

    /// Two bases describe the same submodule iff their reduced forms coincide.
    pub fn same_module(&self, other: &GroebnerBasis) -> bool {
        self.order == other.order && self.degrees == other.degrees && self.elems == other.elems
    }
}
