//! General hyperplane sections and the two reduction principles as executable checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::resolve::{betti_table, scheme_report, BettiTable, HilbertSeries};
use crate::ring::{binomial, MonomialOrder, Polynomial, Ring, Scalar};

/// Hyperplane `x_n = Σ c_i x_i` and the images of `I` in `K[x_0, ..., x_{n-1}]`.
#[derive(Clone, Debug)]
pub struct SectionResult {
    pub seed: u64,
    pub coefficients: Vec<Scalar>,
    /// Image of `I`, presenting `A / l A`.
    pub image: Ideal,
    /// Saturation of the image: the ideal of `X ∩ H`.
    pub section: Ideal,
    /// `dim (I_{X∩H} / image)_d` for `d = 0, 1, ...` within the window.
    pub quotient_hf: Vec<i64>,
}

fn hyperplane_image(ideal: &Ideal, seed: u64) -> Result<(Vec<Scalar>, Ideal)> {
    let r = ideal.ring();
    let n = r.nvars() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<Scalar> = (0..n).map(|_| rng.gen_range(1..r.characteristic()) as Scalar).collect();
    let names: Vec<String> = r.names()[..n].to_vec();
    let target = Ring::new(*r.field(), names, MonomialOrder::Grevlex)?;
    let mut images: Vec<Polynomial> = target.vars();
    let lin = coeffs
        .iter()
        .enumerate()
        .fold(target.zero(), |acc, (i, &c)| &acc + &target.var(i).scale(c));
    images.push(lin);
    Ok((coeffs, ideal.map(&target, &images)?))
}

/// `HF(R/I)(d) - HF(R/I)(d-1)` for `d` in the window matches `HF(R/(I + l))`: `l` is a
/// nonzerodivisor on `R/I` in those degrees.
fn is_regular_section(ideal: &Ideal, image: &Ideal, window: i32) -> bool {
    let a = HilbertSeries::of_ideal(ideal);
    let b = HilbertSeries::of_ideal(image);
    (0..=window).all(|d| b.function(d) == a.function(d) - a.function(d - 1))
}

fn window_for(ideal: &Ideal) -> Result<i32> {
    Ok(betti_table(ideal)?.regularity() + 3)
}

/// Image under a general hyperplane, redrawn (at most five seeds) until the linear form is
/// a nonzerodivisor on `R/I`.
fn regular_image(ideal: &Ideal, seed: u64, window: i32) -> Result<(u64, Vec<Scalar>, Ideal)> {
    for s in seed..seed + 5 {
        let (c, img) = hyperplane_image(ideal, s)?;
        if is_regular_section(ideal, &img, window) {
            return Ok((s, c, img));
        }
    }
    Err(Error::Precondition(format!(
        "no hyperplane from seeds {seed}..{} is regular on R/I; is the depth positive?",
        seed + 5
    )))
}

pub fn generic_section(ideal: &Ideal, seed: u64) -> Result<SectionResult> {
    ideal.check_homogeneous()?;
    if HilbertSeries::of_ideal(ideal).krull_dim() < 2 {
        return Err(Error::Argument("a hyperplane section needs a scheme of dimension >= 1".into()));
    }
    let window = window_for(ideal)?;
    let (seed, coefficients, image) = match regular_image(ideal, seed, window) {
        Ok(x) => x,
        Err(_) => {
            // depth 0 input: no regular element; use the first draw as is
            let (c, img) = hyperplane_image(ideal, seed)?;
            (seed, c, img)
        }
    };
    let section = image.saturate(&Ideal::maximal(image.ring()))?;
    let hi = HilbertSeries::of_ideal(&image);
    let hs = HilbertSeries::of_ideal(&section);
    let quotient_hf = (0..=window).map(|d| hi.function(d) - hs.function(d)).collect();
    Ok(SectionResult {
        seed,
        coefficients,
        image,
        section,
        quotient_hf,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FirstReductionReport {
    /// Seeds of the accepted hyperplanes.
    pub seeds: Vec<u64>,
    pub original: BettiTable,
    /// Betti table of `A / l A` over `K[x_0, ..., x_{n-1}]` for each seed.
    pub images: Vec<BettiTable>,
}

impl FirstReductionReport {
    pub fn equal(&self) -> bool {
        self.images.iter().all(|t| *t == self.original)
    }
    pub fn stable(&self) -> bool {
        self.images.windows(2).all(|w| w[0] == w[1])
    }
}

/// Compares the Betti numbers of `R/I` and of `A / l A` for three general `l`.
pub fn first_reduction_check(ideal: &Ideal, seed: u64) -> Result<FirstReductionReport> {
    ideal.check_homogeneous()?;
    let original = betti_table(ideal)?;
    if original.pd() == ideal.ring().nvars() {
        return Err(Error::Precondition("R/I has depth zero".into()));
    }
    let window = original.regularity() + 3;
    let mut seeds = Vec::new();
    let mut images = Vec::new();
    let mut next = seed;
    for _ in 0..3 {
        let (s, _, img) = regular_image(ideal, next, window)?;
        images.push(betti_table(&img)?);
        seeds.push(s);
        next = s + 1;
    }
    Ok(FirstReductionReport { seeds, original, images })
}

#[derive(Clone, Debug, Serialize)]
pub struct SecondReductionReport {
    pub seed: u64,
    pub quotient_hf: Vec<i64>,
    /// The quotient is one copy of `K` in degree 2.
    pub k_minus_two: bool,
    /// `m` when the quotient is a single copy of `K(-m)`.
    pub quotient_degree: Option<i32>,
    pub image: BettiTable,
    pub section: BettiTable,
    /// Entries with `β(A/lA) > β(section) + β(K(-m))`.
    pub horseshoe_violations: Vec<(usize, i32)>,
    /// `β_{1,2}(section) - β_{1,2}(X)`.
    pub quadric_gain: i64,
    /// `β_{1,2}(section) - β_{1,2}(image)` as computed from the two Betti tables.
    pub image_quadric_gain: i64,
}

impl SecondReductionReport {
    pub fn holds(&self) -> bool {
        self.k_minus_two && self.horseshoe_violations.is_empty() && self.quadric_gain == 1
    }
}

/// Betti numbers of `K(-m)` over a polynomial ring in `nvars` variables.
fn koszul_shifted(nvars: usize, m: i32) -> BettiTable {
    BettiTable::from_entries((0..=nvars).map(|i| ((i, i as i32 + m), binomial(nvars as i64, i as i64) as u64)))
}

/// For a depth-one `X`: the image `A / l A` differs from the section by `K(-m)`, and the
/// Horseshoe lemma bounds the Betti numbers of `X` by those of `X ∩ H` plus `K(-m)`.
pub fn second_reduction_check(ideal: &Ideal, seed: u64) -> Result<SecondReductionReport> {
    let rep = scheme_report(ideal)?;
    if rep.saturated_input {
        return Err(Error::Precondition("the ideal is not saturated".into()));
    }
    if rep.depth != 1 {
        return Err(Error::Precondition(format!("depth is {}, not 1", rep.depth)));
    }
    let sec = generic_section(ideal, seed)?;
    let k_minus_two = sec.quotient_hf.iter().enumerate().all(|(d, &v)| v == if d == 2 { 1 } else { 0 });
    let image = betti_table(&sec.image)?;
    let section = betti_table(&sec.section)?;
    let nonzero: Vec<(usize, i64)> = sec.quotient_hf.iter().copied().enumerate().filter(|x| x.1 != 0).collect();
    let quotient_degree = match nonzero[..] {
        [(d, 1)] => Some(d as i32),
        _ => None,
    };
    let kt = match quotient_degree {
        Some(m) => koszul_shifted(sec.image.ring().nvars(), m),
        None => BettiTable::new(),
    };
    let mut keys: Vec<(usize, i32)> = image.entries().keys().copied().collect();
    keys.sort();
    let horseshoe_violations = keys
        .into_iter()
        .filter(|&(i, j)| image.get(i, j) > section.get(i, j) + kt.get(i, j))
        .collect();
    Ok(SecondReductionReport {
        seed: sec.seed,
        quotient_hf: sec.quotient_hf,
        k_minus_two,
        quotient_degree,
        quadric_gain: section.get(1, 2) as i64 - rep.betti.get(1, 2) as i64,
        image_quadric_gain: section.get(1, 2) as i64 - image.get(1, 2) as i64,
        image,
        section,
        horseshoe_violations,
    })
}
