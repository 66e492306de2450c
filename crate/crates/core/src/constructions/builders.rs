use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{toric_curve_ideal, Ideal};
use crate::resolve::{rank_mod_p, HilbertSeries};
use crate::ring::{Monomial, Polynomial, Ring, Scalar};

/// The linear space cut out by the listed variables of `ℙ^n`.
pub fn linear_space(p: u32, vars: &[usize], n: usize) -> Result<Ideal> {
    let mut v = vars.to_vec();
    v.sort();
    v.dedup();
    if v.is_empty() || v.len() > n || v.iter().any(|&i| i > n) {
        return Err(Error::Argument(format!(
            "need a nonempty proper subset of 0..={n}, got {vars:?}"
        )));
    }
    let r = Ring::standard(p, n + 1)?;
    Ok(Ideal::of_variables(&r, &v))
}

/// The rational normal scroll `S(a_1, ..., a_k)`: 2×2 minors of the concatenated
/// catalecticant blocks, which use `a_i + 1` consecutive variables each.
pub fn scroll(p: u32, a: &[u32]) -> Result<Ideal> {
    let mut a = a.to_vec();
    a.sort();
    if a.is_empty() || a.iter().all(|&x| x == 0) {
        return Err(Error::Argument("a scroll needs some a_i > 0".into()));
    }
    let nvars: usize = a.iter().map(|&x| x as usize + 1).sum();
    let r = Ring::standard(p, nvars)?;
    let x = r.vars();
    let (mut top, mut bot) = (Vec::new(), Vec::new());
    let mut start = 0;
    for &ai in &a {
        for j in 0..ai as usize {
            top.push(x[start + j].clone());
            bot.push(x[start + j + 1].clone());
        }
        start += ai as usize + 1;
    }
    let mut minors = Vec::new();
    for i in 0..top.len() {
        for j in i + 1..top.len() {
            minors.push(&(&top[i] * &bot[j]) - &(&top[j] * &bot[i]));
        }
    }
    Ok(Ideal::new(&r, minors)?.reduced())
}

pub fn monomial_curve(p: u32, exponents: &[u32]) -> Result<Ideal> {
    toric_curve_ideal(p, exponents)
}

/// Union of `V(x_0..x_{q-1})` and `V(x_q..x_n)` in `ℙ^n`, `q = (n+1)/2`.
pub fn disjoint_linear_spaces(p: u32, n: usize) -> Result<Ideal> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Argument(format!("need odd n >= 3, got {n}")));
    }
    let q = (n + 1) / 2;
    let r = Ring::standard(p, n + 1)?;
    let a = Ideal::of_variables(&r, &(0..q).collect::<Vec<_>>());
    let b = Ideal::of_variables(&r, &(q..=n).collect::<Vec<_>>());
    let prod = a.product(&b)?;
    if !prod.equals(&a.intersect(&b)?) {
        return Err(Error::Internal("product and intersection of the linear spaces differ".into()));
    }
    Ok(prod.reduced())
}

fn random_scalar(rng: &mut ChaCha8Rng, p: u32) -> Scalar {
    rng.gen_range(1..p) as Scalar
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    if nvars == 1 {
        return vec![Monomial::from_exponents(&[d]).unwrap()];
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for m in monomials_of_degree(nvars - 1, d - e) {
            let mut ex = vec![e];
            ex.extend(m.exponents().iter().map(|&x| x as u32));
            out.push(Monomial::from_exponents(&ex).unwrap());
        }
    }
    out
}

fn random_form(r: &Ring, d: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let p = r.characteristic();
    let terms = monomials_of_degree(r.nvars(), d)
        .into_iter()
        .map(|m| (m, random_scalar(rng, p)))
        .collect();
    Polynomial::from_terms(r, terms)
}

/// Two pseudo-random quadrics in `ℙ^n`; seeds are advanced until they meet properly.
pub fn ci_two_quadrics(p: u32, n: usize, seed: u64) -> Result<Ideal> {
    if n < 3 {
        return Err(Error::Argument(format!("need n >= 3, got {n}")));
    }
    let r = Ring::standard(p, n + 1)?;
    for s in seed..seed + 5 {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let i = Ideal::new(&r, vec![random_form(&r, 2, &mut rng), random_form(&r, 2, &mut rng)])?;
        if HilbertSeries::of_ideal(&i).krull_dim() == n - 1 {
            return Ok(i.reduced());
        }
    }
    Err(Error::Precondition(format!("no complete intersection found from seed {seed}")))
}

/// Projection of the Veronese surface to `ℙ^4` by five pseudo-random combinations of the
/// quadrics in three parameters, computed by elimination.
pub fn veronese_projection(p: u32, seed: u64) -> Result<Ideal> {
    let quad = monomials_of_degree(3, 2);
    let k = crate::ring::PrimeField::new(p)?;
    for s in seed..seed + 5 {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let coeffs: Vec<Vec<Scalar>> =
            (0..5).map(|_| (0..6).map(|_| rng.gen_range(0..p) as Scalar).collect()).collect();
        if rank_mod_p(&mut coeffs.clone(), &k) < 5 {
            continue;
        }
        let names = ["a", "b", "c", "x0", "x1", "x2", "x3", "x4"];
        let big = Ring::named(p, &names)?;
        let gens: Vec<Polynomial> = coeffs
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let terms = quad
                    .iter()
                    .zip(row)
                    .map(|(m, &c)| {
                        let ex: Vec<u32> = m.exponents()[..3].iter().map(|&e| e as u32).chain([0; 5]).collect();
                        (Monomial::from_exponents(&ex).unwrap(), c)
                    })
                    .collect();
                &big.var(i + 3) - &Polynomial::from_terms(&big, terms)
            })
            .collect();
        let elim = Ideal::new(&big, gens)?.eliminate(3);
        return drop_leading(&elim, 3);
    }
    Err(Error::Precondition(format!("degenerate projection for seeds {seed}..{}", seed + 5)))
}

/// Rewrite an ideal free of the first `b` variables in the ring on the remaining ones.
fn drop_leading(i: &Ideal, b: usize) -> Result<Ideal> {
    let n = i.ring().nvars();
    let target = Ring::standard(i.ring().characteristic(), n - b)?;
    let keep: Vec<usize> = (b..n).collect();
    let gens = i
        .generators()
        .iter()
        .map(|g| {
            let terms = g.terms().iter().map(|(m, c)| (m.restrict(&keep), *c)).collect();
            Polynomial::from_terms(&target, terms)
        })
        .collect();
    Ok(Ideal::new(&target, gens)?.reduced())
}

/// `(x_0^2, x_1, ..., x_{c-1})` in `ℙ^n`.
pub fn manolache_double(p: u32, c: usize, n: usize) -> Result<Ideal> {
    if c < 2 || c + 1 > n {
        return Err(Error::Argument(format!("need 2 <= c <= n - 1, got c = {c}, n = {n}")));
    }
    let r = Ring::standard(p, n + 1)?;
    let mut gens = vec![r.var(0).pow(2)];
    gens.extend((1..c).map(|i| r.var(i)));
    Ideal::new(&r, gens)
}

/// `(x_0, x_1, x_2)^2 + (x_0x_4 - x_1x_3, x_0x_5 - x_2x_3, x_1x_5 - x_2x_4)` in `ℙ^5`.
pub fn buchsbaum_surface(p: u32) -> Result<Ideal> {
    let r = Ring::standard(p, 6)?;
    let x = r.vars();
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            gens.push(&x[i] * &x[j]);
        }
    }
    gens.push(&(&x[0] * &x[4]) - &(&x[1] * &x[3]));
    gens.push(&(&x[0] * &x[5]) - &(&x[2] * &x[3]));
    gens.push(&(&x[1] * &x[5]) - &(&x[2] * &x[4]));
    Ideal::new(&r, gens)
}

/// Elliptic quintic in `ℙ^4`: a quadric section of the cubic scroll `S(1,2)` through a
/// ruling line, minus that line.
pub fn scroll_quintic(p: u32, seed: u64) -> Result<Ideal> {
    let s = scroll(p, &[1, 2])?;
    let r = s.ring().clone();
    // a ruling line: x0 = x2 = x3 = 0
    let line = Ideal::of_variables(&r, &[0, 2, 3]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut q = r.zero();
    for g in line.generators() {
        q = &q + &(g * &random_form(&r, 1, &mut rng));
    }
    let total = s.sum(&Ideal::new(&r, vec![q])?)?;
    Ok(total.colon_ideal(&line)?.reduced())
}
