use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{PrimeField, Scalar};
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
}

/// `K[x_0, ..., x_n]` with a monomial order; cheap to clone.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Ring {}

impl Ring {
    pub fn new(field: PrimeField, names: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        if names.len() < 2 {
            return Err(Error::Argument("a ring needs at least two variables".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::Argument(format!(
                "{} variables exceeds the supported maximum {MAX_VARS}",
                names.len()
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Argument(format!("duplicate variable name {a}")));
            }
        }
        Ok(Ring(Arc::new(RingData { field, names, order })))
    }

    /// Ring with variables `x0 .. x{nvars-1}` over `F_p` under grevlex.
    pub fn standard(p: u32, nvars: usize) -> Result<Ring> {
        Self::named(p, &(0..nvars).map(|i| format!("x{i}")).collect::<Vec<_>>())
    }

    pub fn named<S: AsRef<str>>(p: u32, names: &[S]) -> Result<Ring> {
        Ring::new(
            PrimeField::new(p)?,
            names.iter().map(|s| s.as_ref().to_string()).collect(),
            MonomialOrder::Grevlex,
        )
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring(Arc::new(RingData {
            field: self.0.field,
            names: self.0.names.clone(),
            order,
        }))
    }

    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }
    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }
    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.0.names
    }
    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }
    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }
    pub fn constant(&self, c: Scalar) -> Polynomial {
        let c = c % self.characteristic();
        Polynomial::from_terms(self, vec![(Monomial::one(self.nvars()), c)])
    }
    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::from_terms(self, vec![(Monomial::var(i, self.nvars()), 1)])
    }
    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }
    pub fn monomial(&self, m: Monomial, c: Scalar) -> Polynomial {
        Polynomial::from_terms(self, vec![(m, c)])
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.names(),
                other.names()
            )));
        }
        Ok(())
    }
}

/// Sparse polynomial; terms sorted strictly decreasing under the ring's order, no zero
/// coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    /// Build from arbitrary terms; like monomials are combined and zeros dropped.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let k = *ring.field();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            let e = acc.entry(m).or_insert(0);
            *e = k.add(*e, c % k.characteristic());
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already sorted and reduced.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }
    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Top total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.combine(other, 1))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.product(other))
    }

    /// `self + c * other` by merging.
    fn combine(&self, other: &Polynomial, c: Scalar) -> Polynomial {
        let k = *self.ring.field();
        let ord = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            if j == other.terms.len() {
                out.push(self.terms[i]);
                i += 1;
                continue;
            }
            if i == self.terms.len() {
                let (m, b) = other.terms[j];
                let v = k.mul(b, c);
                if v != 0 {
                    out.push((m, v));
                }
                j += 1;
                continue;
            }
            match ord.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let (m, b) = other.terms[j];
                    let v = k.mul(b, c);
                    if v != 0 {
                        out.push((m, v));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let v = k.add(self.terms[i].1, k.mul(other.terms[j].1, c));
                    if v != 0 {
                        out.push((self.terms[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let k = *self.ring.field();
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = k.add(*e, k.mul(*ca, *cb));
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|t| t.1 != 0).collect();
        let ord = self.ring.order();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: Scalar) -> Polynomial {
        let k = *self.ring.field();
        let c = c % k.characteristic();
        if c == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, a)| (m, k.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: Scalar) -> Polynomial {
        let k = *self.ring.field();
        if c % k.characteristic() == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(t, a)| (t.mul(m), k.mul(a, c))).collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field().inv(c).expect("nonzero lead")),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let k = *self.ring.field();
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = k.mul(v, k.pow(x, e as u64));
                }
            }
            acc = k.add(acc, v);
        }
        acc
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, deg: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|t| t.0.degree() == deg).copied().collect(),
        }
    }

    /// Image under the ring map sending `x_i` to `images[i]` (all in `target`).
    pub fn map(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Dimension(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        for g in images {
            target.check_same(g.ring())?;
        }
        let k = *target.field();
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![target.one()]; images.len()];
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = target.constant(*c);
            for i in 0..images.len() {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().product(&images[i]);
                    powers[i].push(next);
                }
                term = term.product(&powers[i][e]);
            }
            for (tm, tc) in term.terms {
                let v = acc.entry(tm).or_insert(0);
                *v = k.add(*v, tc);
            }
        }
        Ok(Polynomial::from_terms(target, acc.into_iter().collect()))
    }

    /// Replace `x_var` by `g` in the same ring.
    pub fn substitute(&self, var: usize, g: &Polynomial) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if var >= n {
            return Err(Error::Argument(format!("variable index {var} out of range 0..{n}")));
        }
        if g.ring() == &self.ring {
            let mut images = self.ring.vars();
            images[var] = g.clone();
            return self.map(&self.ring, &images);
        }
        // substitution-and-descend: g lives in the ring without x_var
        let target = g.ring().clone();
        if target.nvars() + 1 != n {
            return Err(Error::RingMismatch(
                "substituted polynomial must live in the same ring or one with one fewer variable".into(),
            ));
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| match i.cmp(&var) {
                Ordering::Less => target.var(i),
                Ordering::Equal => g.clone(),
                Ordering::Greater => target.var(i - 1),
            })
            .collect();
        self.map(&target, &images)
    }

    /// Same polynomial viewed in a ring with identical variables but another order.
    pub fn reorder(&self, ring: &Ring) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars());
        Polynomial::from_terms(ring, self.terms.clone())
    }

    /// Exact quotient `self / d`, if `d` divides `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.ring.check_same(&d.ring)?;
        let (lm, lc) = match d.lead() {
            None => return Err(Error::Argument("division by zero polynomial".into())),
            Some(&t) => t,
        };
        let k = *self.ring.field();
        let inv = k.inv(lc)?;
        let mut rest = self.clone();
        let mut q = Vec::new();
        while let Some(&(m, c)) = rest.lead() {
            let Some(t) = lm.quotient_of(&m) else {
                return Ok(None);
            };
            let coef = k.mul(c, inv);
            q.push((t, coef));
            rest = rest.combine(&d.mul_monomial(&t, coef), k.neg(1));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, q)))
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let k = self.ring.field();
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let v = k.to_signed(*c);
            let (neg, abs) = (v < 0, v.unsigned_abs());
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { "-" } else { "+" });
            }
            let mut factors = Vec::new();
            if abs != 1 || m.is_one() {
                factors.push(abs.to_string());
            }
            for i in 0..m.nvars() {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    e => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(self.ring.names()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.ring.check_same(&rhs.ring).expect("ring mismatch in subtraction");
        self.combine(rhs, self.ring.field().neg(1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(n: usize) -> Ring {
        Ring::standard(32003, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(2);
        let (x0, x1) = (r.var(0), r.var(1));
        let lhs = &(&x0 + &x1) * &(&x0 - &x1);
        let rhs = &(&x0 * &x0) - &(&x1 * &x1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancellation_and_characteristic() {
        let r = ring(3);
        let f = &(&r.var(0) * &r.var(2)) + &r.var(1).scale(5);
        assert!((&f + &f.scale(r.field().neg(1))).is_zero());
        let r3 = Ring::standard(3, 2).unwrap();
        assert!(r3.var(0).scale(3).is_zero());
    }

    #[test]
    fn ring_mismatch_reported() {
        let a = ring(2);
        let b = ring(3);
        assert!(matches!(a.var(0).try_add(&b.var(0)), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn substitute_simple() {
        let r = ring(2);
        let (x0, x1) = (r.var(0), r.var(1));
        assert_eq!((&x0 * &x1).substitute(1, &x0).unwrap(), &x0 * &x0);
        let f = &(&x0 * &x1) + &(&x1 * &x1);
        let g = f.substitute(1, &r.zero()).unwrap();
        assert!(g.is_zero() || (g.is_homogeneous() && g.degree() == Some(2)));
    }

    #[test]
    fn substitute_random_point_oracle() {
        let r = ring(4);
        let x: Vec<_> = r.vars();
        let f = &(&x[3] * &x[3]) - &(&x[0] * &x[3]);
        let g = &(&x[0] + &x[1]) + &x[2];
        let h = f.substitute(3, &g).unwrap();
        let k = *r.field();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut pt: Vec<Scalar> = (0..4).map(|_| rng.gen_range(0..32003)).collect();
            pt[3] = g.eval(&pt);
            assert_eq!(h.eval(&pt), f.eval(&pt));
            let _ = k;
        }
    }

    #[test]
    fn substitute_and_descend() {
        let r = ring(3);
        let s = ring(2);
        let f = &(&r.var(0) * &r.var(2)) - &(&r.var(1) * &r.var(1));
        let l = &s.var(0) + &s.var(1);
        let h = f.substitute(2, &l).unwrap();
        assert_eq!(h.ring(), &s);
        let expected = &(&s.var(0) * &l) - &(&s.var(1) * &s.var(1));
        assert_eq!(h, expected);
    }

    #[test]
    fn exact_division() {
        let r = ring(3);
        let x: Vec<_> = r.vars();
        let f = &(&x[0] + &x[1]) * &(&x[2] - &x[1]);
        assert_eq!(f.exact_div(&(&x[0] + &x[1])).unwrap(), Some(&x[2] - &x[1]));
        assert_eq!(f.exact_div(&x[0]).unwrap(), None);
    }

    #[test]
    fn display_round_trip_shape() {
        let r = ring(3);
        let f = &(&r.var(0) * &r.var(2)) - &(&r.var(1) * &r.var(1));
        assert_eq!(f.to_string(), "-x1^2+x0*x2");
    }
}
