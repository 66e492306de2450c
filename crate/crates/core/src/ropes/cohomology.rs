use serde::Serialize;

use super::spec::{rope_ideal, RopeSpec};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::modfree::{subsets, ModuleOrder, RingMatrix};
use crate::resolve::{schreyer_syzygies, HilbertSeries};
use crate::ring::{binomial, Polynomial};

/// `dim_K` of `R(-s)_d` for a polynomial ring in `nvars` variables.
fn free_dim(nvars: usize, d: i32) -> i64 {
    if d < 0 {
        0
    } else {
        binomial(d as i64 + nvars as i64 - 1, nvars as i64 - 1)
    }
}

/// Hilbert function of an ideal (not its quotient) in degree `d`.
fn ideal_hf(i: &Ideal, d: i32) -> i64 {
    free_dim(i.ring().nvars(), d) - HilbertSeries::of_ideal(i).function(d)
}

#[derive(Clone, Debug, Serialize)]
pub struct InductionReport {
    pub checked_up_to: i32,
    /// Degrees `d` where `HF(I_L)(d - β_k - 1) - HF(I_C̃)(d) - HF(F_k)(d) + HF(I_C)(d) != 0`.
    pub failures: Vec<i32>,
    pub degree: i64,
    pub reduced_degree: i64,
}

impl InductionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.reduced_degree == self.degree + 1
    }
}

/// The ideals of `C` and of the rope `C̃` obtained by dropping the last column of `B`,
/// with a degreewise check of `0 -> I_L(-β_k - 1) -> I_C̃ ⊕ (F_k) -> I_C -> 0`.
pub fn rope_induction_sequence(spec: &RopeSpec, up_to: i32) -> Result<(Ideal, Ideal, InductionReport)> {
    let k = spec.k();
    if k == 0 {
        return Err(Error::Precondition("the rope has no extra generator to drop".into()));
    }
    let smaller = spec.drop_last()?;
    let ic = rope_ideal(spec)?;
    let ict = rope_ideal(&smaller)?;
    let ring = ic.ring().clone();
    let fk = spec.extra_generators(&ring)?.pop().unwrap();
    let shift = spec.beta()[k - 1] as i32 + 1;
    let il = Ideal::of_variables(&ring, &(0..=spec.r()).collect::<Vec<_>>());
    let principal = Ideal::new(&ring, vec![fk])?;
    let failures = (0..=up_to)
        .filter(|&d| ideal_hf(&il, d - shift) - ideal_hf(&ict, d) - ideal_hf(&principal, d) + ideal_hf(&ic, d) != 0)
        .collect();
    let report = InductionReport {
        checked_up_to: up_to,
        failures,
        degree: HilbertSeries::of_ideal(&ic).degree(),
        reduced_degree: HilbertSeries::of_ideal(&ict).degree(),
    };
    Ok((ic, ict, report))
}

#[derive(Clone, Debug, Serialize)]
pub struct H1Presentation {
    /// `A` over `S`, with `A^t` the syzygy matrix of `B^t`.
    #[serde(skip)]
    pub a: RingMatrix,
    /// Degrees of the generators of the target of `A`.
    pub target_degrees: Vec<i32>,
    /// `(d, dim coker(A)_d)` for `d` in the window.
    pub coker_hf: Vec<(i32, i64)>,
    /// Degrees where the alternating sum over `0 -> Q -> S(-1)^{r+1} -> target -> coker -> 0` fails.
    pub failures: Vec<i32>,
    /// The maximal minors of `A` have finite colength.
    pub minors_codim_two: bool,
}

impl H1Presentation {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.minors_codim_two
    }

    pub fn length(&self) -> i64 {
        self.coker_hf.iter().map(|x| x.1).sum()
    }
}

/// The presentation `S(-1)^{r+1} --A--> ⊕ S(α_i - 1) -> H^1_*(I_C) -> 0` over `S`.
pub fn h1_presentation(spec: &RopeSpec, lo: i32, hi: i32) -> Result<H1Presentation> {
    let s = spec.line_ring().clone();
    let b = spec.matrix();
    let a = schreyer_syzygies(&b.transpose())?.transpose();
    if !a.compose(b)?.is_zero() {
        return Err(Error::Internal("A ∘ B is not zero".into()));
    }
    let target = a.target().clone();
    let gb = GroebnerBasis::of_columns(&a, &ModuleOrder::PositionOverTerm(s.order()));
    let coker = HilbertSeries::of_basis(&gb);
    let q_dims = |d: i32| -> i64 { b.source().degrees().iter().map(|&e| free_dim(2, d - e)).sum() };
    let p_dims = |d: i32| -> i64 { b.target().degrees().iter().map(|&e| free_dim(2, d - e)).sum() };
    let t_dims = |d: i32| -> i64 { target.degrees().iter().map(|&e| free_dim(2, d - e)).sum() };
    let coker_hf: Vec<(i32, i64)> = (lo..=hi).map(|d| (d, if target.rank() == 0 { 0 } else { coker.function(d) })).collect();
    let failures = coker_hf
        .iter()
        .filter(|&&(d, c)| q_dims(d) - p_dims(d) + t_dims(d) - c != 0)
        .map(|x| x.0)
        .collect();
    let size = a.nrows();
    let minors: Vec<Polynomial> = subsets(a.ncols(), size)
        .iter()
        .map(|cols| {
            let m: Vec<Vec<Polynomial>> =
                (0..size).map(|i| cols.iter().map(|&j| a.entry(i, j).clone()).collect()).collect();
            super::spec::determinant(&s, &m)
        })
        .collect();
    let mi = Ideal::new(&s, minors)?;
    let minors_codim_two = mi.is_unit() || HilbertSeries::of_ideal(&mi).krull_dim() == 0;
    Ok(H1Presentation {
        target_degrees: target.degrees().to_vec(),
        a,
        coker_hf,
        failures,
        minors_codim_two,
    })
}
