use super::resolution::gb_syzygies;
use crate::error::Result;
use crate::groebner::GroebnerBasis;
use crate::modfree::{GradedFreeModule, ModuleElement, ModuleOrder, RingMatrix};
use crate::ring::Polynomial;

/// Generators of the syzygy module of the columns of `m`: a matrix `S` with `m ∘ S = 0`
/// whose columns generate every relation, pruned to a minimal set for graded input.
pub fn schreyer_syzygies(m: &RingMatrix) -> Result<RingMatrix> {
    let ring = m.ring().clone();
    let source = m.source().clone();
    let order = ModuleOrder::TermOverPosition(ring.order());
    let cols = m.column_elements();
    let gb = GroebnerBasis::compute_tracked(&ring, m.target().degrees(), &cols, &order);
    let reprs = gb.representations().unwrap_or(&[]).to_vec();

    let lift = |coeffs: &[Polynomial]| -> ModuleElement {
        let mut acc = ModuleElement::zero(&ring);
        for (c, r) in coeffs.iter().zip(&reprs) {
            if !c.is_zero() {
                acc = acc.add(&r.mul_poly(c));
            }
        }
        acc
    };

    let mut cands: Vec<ModuleElement> = Vec::new();
    for s in gb_syzygies(&gb)? {
        let coeffs = crate::groebner::engine::to_element(&ring, &s).to_column(gb.len());
        cands.push(lift(&coeffs));
    }
    for (k, col) in cols.iter().enumerate() {
        let (q, rem) = gb.divide(col)?;
        debug_assert!(rem.is_zero());
        let unit = ModuleElement::from_terms(&ring, vec![(k as u32, crate::ring::Monomial::one(ring.nvars()), 1)]);
        cands.push(unit.add(&lift(&q).scale(ring.field().neg(1))));
    }
    cands.retain(|c| !c.is_zero());

    let degree = |e: &ModuleElement| -> i32 {
        match e.homogeneous_degree(source.degrees()) {
            Some(Some(d)) => d,
            _ => e
                .terms()
                .iter()
                .map(|t| t.1.degree() as i32 + source.degree(t.0 as usize))
                .max()
                .unwrap_or(0),
        }
    };
    cands.sort_by_key(|e| degree(e));
    let pot = ModuleOrder::PositionOverTerm(ring.order());
    let mut kept: Vec<ModuleElement> = Vec::new();
    let mut span: Option<GroebnerBasis> = None;
    for c in cands {
        let inside = match &span {
            Some(gb) => gb.contains(&c)?,
            None => false,
        };
        if !inside {
            kept.push(c);
            span = Some(GroebnerBasis::compute(&ring, source.degrees(), &kept, &pot));
        }
    }
    let syz_source = GradedFreeModule::new(&ring, kept.iter().map(|e| degree(e)).collect());
    RingMatrix::from_elements(syz_source, source, &kept)
}
