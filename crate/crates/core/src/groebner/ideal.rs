use std::fmt;
use std::sync::{Arc, OnceLock};

use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::modfree::{ModuleElement, ModuleOrder};
use crate::ring::{Monomial, MonomialOrder, Polynomial, Ring};

/// A homogeneous-capable ideal with a lazily computed reduced Gröbner basis.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ring.check_same(g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    /// `(x_0, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        Ideal::new(ring, ring.vars()).unwrap()
    }

    /// The ideal generated by the given variables.
    pub fn of_variables(ring: &Ring, vars: &[usize]) -> Ideal {
        Ideal::new(ring, vars.iter().map(|&i| ring.var(i)).collect()).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| Arc::new(GroebnerBasis::of_polynomials(&self.ring, &self.gens)))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Error naming the first inhomogeneous generator.
    pub fn check_homogeneous(&self) -> Result<()> {
        match self.gens.iter().position(|g| !g.is_homogeneous()) {
            None => Ok(()),
            Some(index) => Err(Error::Homogeneity {
                index,
                poly: self.gens[index].to_string(),
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().lead_monomials().iter().any(|m| m.is_one())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb().contains_poly(f).expect("same ring")
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.gb().same_module(other.gb())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb().normal_form_poly(f).expect("same ring")
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, e: u32) -> Ideal {
        let mut acc = Ideal::new(&self.ring, vec![self.ring.one()]).unwrap();
        for _ in 0..e {
            acc = acc.product(self).unwrap();
        }
        acc
    }

    /// Generators of `I ∩ K[x_b, ..., x_n]`, via an elimination order on the first `b` variables.
    pub fn eliminate(&self, b: usize) -> Ideal {
        if b == 0 {
            return self.clone();
        }
        let elim = self.ring.with_order(MonomialOrder::Elimination(b));
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.reorder(&elim)).collect();
        let gb = GroebnerBasis::of_polynomials(&elim, &gens);
        let kept = gb
            .polynomials()
            .into_iter()
            .filter(|p| p.terms().iter().all(|(m, _)| (0..b).all(|i| m.exponent(i) == 0)))
            .map(|p| p.reorder(&self.ring))
            .collect();
        Ideal::new(&self.ring, kept).unwrap()
    }

    /// Elements of `I ∩ J` via the submodule of `R^2` generated by `(g, g)` for `g ∈ J`
    /// and `(f, 0)` for `f ∈ I`, read off in the second component.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let r = &self.ring;
        let mut gens = Vec::new();
        for g in &other.gens {
            gens.push(ModuleElement::from_column(r, &[g.clone(), g.clone()]));
        }
        for f in &self.gens {
            gens.push(ModuleElement::from_column(r, &[f.clone(), r.zero()]));
        }
        let gb = GroebnerBasis::compute(r, &[0, 0], &gens, &ModuleOrder::PositionOverTerm(r.order()));
        let out = gb
            .elements()
            .into_iter()
            .filter(|e| e.terms().iter().all(|t| t.0 == 1))
            .map(|e| e.to_column(2).pop().unwrap())
            .collect();
        Ideal::new(r, out)
    }

    /// `I : f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Err(Error::Argument("colon by the zero polynomial".into()));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut out = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            match g.exact_div(f)? {
                Some(q) => out.push(q),
                None => return Err(Error::Internal("intersection element not divisible".into())),
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// `I : J = ∩_g (I : g)` over the generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::new(&self.ring, vec![self.ring.one()]).unwrap()))
    }

    /// `I : J^∞`.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        if other.is_zero() {
            return Err(Error::Argument("saturation by the zero ideal".into()));
        }
        let mut cur = self.clone();
        for _ in 0..50 {
            let next = cur.colon_ideal(other)?;
            if next.equals(&cur) {
                return Ok(cur.reduced());
            }
            cur = next;
        }
        Err(Error::Internal("saturation did not stabilize within 50 steps".into()))
    }

    /// Same ideal, generated by its reduced Gröbner basis.
    pub fn reduced(&self) -> Ideal {
        let gb = self.gb().clone();
        let out = Ideal {
            ring: self.ring.clone(),
            gens: gb.polynomials(),
            gb: OnceLock::new(),
        };
        let _ = out.gb.set(Arc::new(gb));
        out
    }

    /// A minimal homogeneous generating set, chosen greedily by degree from the
    /// generators and the reduced Gröbner basis.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        let mut cands: Vec<Polynomial> = self.gens.iter().map(|g| g.monic()).collect();
        cands.extend(self.gb().polynomials());
        cands.sort_by_key(|g| g.degree().unwrap_or(0));
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut cur: Option<GroebnerBasis> = None;
        for g in cands {
            let inside = match &cur {
                None => false,
                Some(gb) => gb.contains_poly(&g).unwrap(),
            };
            if !inside {
                kept.push(g);
                cur = Some(GroebnerBasis::of_polynomials(&self.ring, &kept));
            }
        }
        kept
    }

    /// The ideal generated by the images under `x_i ↦ images[i]`.
    pub fn map(&self, target: &Ring, images: &[Polynomial]) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map(target, images))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

/// The homogeneous ideal of the monomial curve `(s:t) ↦ (s^{a_i} t^{d - a_i})`.
pub fn toric_curve_ideal(p: u32, exponents: &[u32]) -> Result<Ideal> {
    let n = exponents.len();
    if n < 2 || exponents[n - 1] != 0 || exponents.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Argument(format!(
            "exponents must be strictly decreasing and end in 0, got {exponents:?}"
        )));
    }
    let d = exponents[0];
    let mut names = vec!["s".to_string(), "t".to_string()];
    names.extend((0..n).map(|i| format!("x{i}")));
    let big = Ring::named(p, &names)?;
    let gens = exponents
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let m = Monomial::from_exponents(&[&[a, d - a][..], &vec![0; n]].concat())?;
            Ok(&big.var(i + 2) - &big.monomial(m, 1))
        })
        .collect::<Result<Vec<_>>>()?;
    let elim = Ideal::new(&big, gens)?.eliminate(2);
    let target = Ring::standard(p, n)?;
    let keep: Vec<usize> = (2..n + 2).collect();
    let out = elim
        .gens
        .iter()
        .map(|g| {
            let terms = g.terms().iter().map(|(m, c)| (m.restrict(&keep), *c)).collect();
            Polynomial::from_terms(&target, terms)
        })
        .collect();
    Ideal::new(&target, out).map(|i| i.reduced())
}
