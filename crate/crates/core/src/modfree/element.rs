use std::cmp::Ordering;

use crate::ring::{Monomial, Polynomial, Ring, Scalar};

/// A vector in a free module, stored as `(component, monomial, coefficient)` terms sorted
/// by component and then decreasingly in the ring's monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement {
    ring: Ring,
    terms: Vec<(u32, Monomial, Scalar)>,
}

impl ModuleElement {
    pub fn zero(ring: &Ring) -> Self {
        ModuleElement {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn from_terms(ring: &Ring, mut terms: Vec<(u32, Monomial, Scalar)>) -> Self {
        let ord = ring.order();
        let k = *ring.field();
        terms.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| ord.cmp(&b.1, &a.1)));
        let mut out: Vec<(u32, Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (c, m, a) in terms {
            match out.last_mut() {
                Some(last) if last.0 == c && last.1 == m => last.2 = k.add(last.2, a),
                _ => out.push((c, m, a)),
            }
        }
        out.retain(|t| t.2 != 0);
        ModuleElement {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// `Σ entries[i] e_i`.
    pub fn from_column(ring: &Ring, entries: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in entries.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((i as u32, *m, *c));
            }
        }
        ModuleElement {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn to_column(&self, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for (c, m, a) in &self.terms {
            buckets[*c as usize].push((*m, *a));
        }
        buckets
            .into_iter()
            .map(|t| Polynomial::from_sorted(&self.ring, t))
            .collect()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn terms(&self) -> &[(u32, Monomial, Scalar)] {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0).max()
    }

    /// Homogeneous with respect to the generator degrees `degrees`; returns its degree.
    pub fn homogeneous_degree(&self, degrees: &[i32]) -> Option<Option<i32>> {
        let mut deg = None;
        for (c, m, _) in &self.terms {
            let d = m.degree() as i32 + degrees[*c as usize];
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        Some(deg)
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        let k = *self.ring.field();
        let ord = self.ring.order();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let o = a[i].0.cmp(&b[j].0).then_with(|| ord.cmp(&b[j].1, &a[i].1));
            match o {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = k.add(a[i].2, b[j].2);
                    if c != 0 {
                        out.push((a[i].0, a[i].1, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ModuleElement {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: Scalar) -> ModuleElement {
        let k = *self.ring.field();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        ModuleElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(i, m, a)| (i, m, k.mul(a, c))).collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial) -> ModuleElement {
        let k = *self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() * f.len());
        for (i, m, a) in &self.terms {
            for (n, b) in f.terms() {
                terms.push((*i, m.mul(n), k.mul(*a, *b)));
            }
        }
        Self::from_terms(&self.ring, terms)
    }
}

impl std::fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rank = self.max_component().map(|c| c as usize + 1).unwrap_or(0);
        let col = self.to_column(rank);
        let parts: Vec<String> = col
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("({p})e{i}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
