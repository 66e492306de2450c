use serde::Serialize;

use super::{free_resolution, hilbert::independent_set_dimension, BettiTable, FreeResolution, HilbertSeries};
use crate::error::{Error, Result};
use crate::groebner::Ideal;

/// Numerical invariants of `R/I` and of the projective scheme it defines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeReport {
    /// Number of variables `n + 1`.
    pub nvars: usize,
    /// Dimension of the projective scheme.
    pub dim: i64,
    pub codim: i64,
    pub degree: i64,
    pub h_vector: Vec<i64>,
    /// Projective dimension of `R/I`.
    pub pd: usize,
    /// `nvars - pd`.
    pub depth: i64,
    pub is_acm: bool,
    pub regularity: i32,
    /// The input was not saturated; the report describes its saturation.
    pub saturated_input: bool,
    pub betti: BettiTable,
}

pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    ideal.check_homogeneous()?;
    Ok(HilbertSeries::of_ideal(ideal))
}

pub fn betti_table(ideal: &Ideal) -> Result<BettiTable> {
    Ok(BettiTable::from_resolution(&free_resolution(ideal)?))
}

pub fn scheme_report(ideal: &Ideal) -> Result<SchemeReport> {
    ideal.check_homogeneous()?;
    if ideal.is_zero() {
        return Err(Error::Argument("the zero ideal defines all of projective space".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Argument("the unit ideal defines the empty scheme".into()));
    }
    let n = ideal.ring().nvars();
    let res = free_resolution(ideal)?;
    let table = BettiTable::from_resolution(&res);
    // depth 0 is the only way the irrelevant ideal can be associated
    if table.pd() == n {
        let sat = ideal.saturate(&Ideal::maximal(ideal.ring()))?;
        if sat.is_unit() {
            return Err(Error::Argument("the ideal is irrelevant: its saturation is the unit ideal".into()));
        }
        let mut rep = report_from(&sat, &free_resolution(&sat)?)?;
        rep.saturated_input = true;
        return Ok(rep);
    }
    report_from(ideal, &res)
}

fn report_from(ideal: &Ideal, res: &FreeResolution) -> Result<SchemeReport> {
    let n = ideal.ring().nvars();
    let table = BettiTable::from_resolution(res);
    let hs = HilbertSeries::of_ideal(ideal);
    let krull = independent_set_dimension(&ideal.gb().lead_monomials(), n);
    if krull != hs.krull_dim() {
        return Err(Error::Internal(format!(
            "dimension mismatch: independent sets give {krull}, Hilbert series gives {}",
            hs.krull_dim()
        )));
    }
    let pd = table.pd();
    let codim = (n - krull) as i64;
    Ok(SchemeReport {
        nvars: n,
        dim: krull as i64 - 1,
        codim,
        degree: hs.degree(),
        h_vector: hs.h_vector(),
        pd,
        depth: (n - pd) as i64,
        is_acm: pd as i64 == codim,
        regularity: table.regularity(),
        saturated_input: false,
        betti: table,
    })
}
