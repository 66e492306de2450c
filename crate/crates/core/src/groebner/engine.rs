use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::modfree::{ModuleElement, ModuleOrder};
use crate::ring::{Monomial, PrimeField, Ring, Scalar};

/// `(component, monomial, coefficient)`.
pub(crate) type Term = (u32, Monomial, Scalar);

#[inline]
pub(crate) fn cmp_term(ord: &ModuleOrder, a: &Term, b: &Term) -> Ordering {
    ord.cmp(&a.1, a.0, &b.1, b.0)
}

/// Sort decreasingly, merge equal terms, drop zeros.
pub(crate) fn normalize(ord: &ModuleOrder, k: &PrimeField, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| cmp_term(ord, b, a));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        if let Some(l) = out.last_mut() {
            if l.0 == t.0 && l.1 == t.1 {
                l.2 = k.add(l.2, t.2);
                continue;
            }
        }
        out.push(t);
    }
    out.retain(|t| t.2 != 0);
    out
}

pub(crate) fn from_element(ord: &ModuleOrder, k: &PrimeField, e: &ModuleElement) -> Vec<Term> {
    normalize(ord, k, e.terms().to_vec())
}

pub(crate) fn to_element(ring: &Ring, v: &[Term]) -> ModuleElement {
    ModuleElement::from_terms(ring, v.to_vec())
}

/// `a - c·m·b`, all sorted decreasingly.
pub(crate) fn sub_mul(
    ord: &ModuleOrder,
    k: &PrimeField,
    a: &[Term],
    c: Scalar,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let negc = k.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bt = b.first().map(|t| (t.0, t.1.mul(m), k.mul(negc, t.2)));
    while let Some(cur) = bt {
        if i == a.len() {
            break;
        }
        match cmp_term(ord, &a[i], &cur) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
                continue;
            }
            Ordering::Less => out.push(cur),
            Ordering::Equal => {
                let s = k.add(a[i].2, cur.2);
                if s != 0 {
                    out.push((cur.0, cur.1, s));
                }
                i += 1;
            }
        }
        j += 1;
        bt = b.get(j).map(|t| (t.0, t.1.mul(m), k.mul(negc, t.2)));
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j.min(b.len())..] {
        out.push((t.0, t.1.mul(m), k.mul(negc, t.2)));
    }
    out
}

pub(crate) fn mul_term(k: &PrimeField, v: &[Term], c: Scalar, m: &Monomial) -> Vec<Term> {
    v.iter().map(|t| (t.0, t.1.mul(m), k.mul(t.2, c))).collect()
}

pub(crate) fn make_monic(k: &PrimeField, v: &mut [Term]) -> Scalar {
    let Some(lc) = v.first().map(|t| t.2) else {
        return 1;
    };
    let inv = k.inv(lc).expect("nonzero lead coefficient");
    for t in v.iter_mut() {
        t.2 = k.mul(t.2, inv);
    }
    inv
}

/// One reduction step recorded as `coef · mono · basis[idx]`.
pub(crate) type Step = (usize, Monomial, Scalar);

pub(crate) struct Reducer<'a> {
    pub ord: &'a ModuleOrder,
    pub k: PrimeField,
    pub elems: &'a [Vec<Term>],
    pub by_comp: &'a [Vec<usize>],
}

impl Reducer<'_> {
    #[inline]
    fn find_divisor(&self, t: &Term, skip: Option<usize>) -> Option<(usize, Monomial)> {
        for &idx in self.by_comp.get(t.0 as usize)? {
            if Some(idx) == skip {
                continue;
            }
            if let Some(q) = self.elems[idx][0].1.quotient_of(&t.1) {
                return Some((idx, q));
            }
        }
        None
    }

    /// Reduce `v`; with `full` every term is reduced, otherwise only the leading term.
    pub fn reduce(
        &self,
        mut v: Vec<Term>,
        full: bool,
        skip: Option<usize>,
        mut steps: Option<&mut Vec<Step>>,
    ) -> Vec<Term> {
        let mut rem: Vec<Term> = Vec::new();
        let mut p = 0usize;
        while p < v.len() {
            let lt = v[p];
            match self.find_divisor(&lt, skip) {
                Some((idx, q)) => {
                    let g = &self.elems[idx];
                    let c = self.k.mul(lt.2, self.k.inv(g[0].2).expect("nonzero lead"));
                    if let Some(s) = steps.as_deref_mut() {
                        s.push((idx, q, c));
                    }
                    v = sub_mul(self.ord, &self.k, &v[p..], c, &q, g);
                    p = 0;
                }
                None => {
                    if !full {
                        break;
                    }
                    rem.push(lt);
                    p += 1;
                    if p == v.len() {
                        break;
                    }
                    // keep the unreduced tail compact
                    if p > 64 {
                        v.drain(..p);
                        p = 0;
                    }
                }
            }
        }
        if full {
            rem
        } else {
            v.drain(..p);
            v
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct QueueKey {
    degree: i32,
    sugar: i32,
    seq: u64,
}

#[derive(Clone, Debug)]
enum Task {
    Input(usize),
    Pair(usize, usize, Monomial),
}

/// Output of the engine: reduced, monic, sorted increasingly by leading term.
pub(crate) struct EngineOutput {
    pub elems: Vec<Vec<Term>>,
    /// `elems[i] = Σ reprs[i]_j · input_j` when tracking was requested.
    pub reprs: Option<Vec<ModuleElement>>,
}

struct Engine<'a> {
    ring: Ring,
    ord: &'a ModuleOrder,
    k: PrimeField,
    degrees: &'a [i32],
    single_component: bool,
    inputs: Vec<Vec<Term>>,
    elems: Vec<Vec<Term>>,
    sugar: Vec<i32>,
    active: Vec<bool>,
    by_comp: Vec<Vec<usize>>,
    reprs: Option<Vec<ModuleElement>>,
    queue: BTreeMap<QueueKey, Task>,
    seq: u64,
}

fn weighted_degree(degrees: &[i32], t: &Term) -> i32 {
    t.1.degree() as i32 + degrees[t.0 as usize]
}

fn sugar_of(degrees: &[i32], v: &[Term]) -> i32 {
    v.iter().map(|t| weighted_degree(degrees, t)).max().unwrap_or(0)
}

impl<'a> Engine<'a> {
    fn push(&mut self, degree: i32, sugar: i32, task: Task) {
        let key = QueueKey {
            degree,
            sugar,
            seq: self.seq,
        };
        self.seq += 1;
        self.queue.insert(key, task);
    }

    fn reducer(&self) -> Reducer<'_> {
        Reducer {
            ord: self.ord,
            k: self.k,
            elems: &self.elems,
            by_comp: &self.by_comp,
        }
    }

    fn reduce_tracked(&self, v: Vec<Term>, repr: Option<ModuleElement>) -> (Vec<Term>, Option<ModuleElement>) {
        match repr {
            None => (self.reducer().reduce(v, true, None, None), None),
            Some(mut r) => {
                let mut steps = Vec::new();
                let out = self.reducer().reduce(v, true, None, Some(&mut steps));
                let reprs = self.reprs.as_ref().unwrap();
                for (idx, q, c) in steps {
                    let f = self.ring.monomial(q, self.k.neg(c));
                    r = r.add(&reprs[idx].mul_poly(&f));
                }
                (out, Some(r))
            }
        }
    }

    fn insert(&mut self, mut h: Vec<Term>, sugar: i32, repr: Option<ModuleElement>) {
        let inv = make_monic(&self.k, &mut h);
        let repr = repr.map(|r| r.scale(inv));
        let hi = self.elems.len();
        let (hc, hm) = (h[0].0, h[0].1);

        // Gebauer–Möller: drop queued pairs made redundant by h
        let elems = &self.elems;
        self.queue.retain(|_, task| match task {
            Task::Input(_) => true,
            Task::Pair(i, j, l) => {
                let (li, lj) = (elems[*i][0], elems[*j][0]);
                if li.0 != hc {
                    return true;
                }
                !(hm.divides(l) && li.1.lcm(&hm) != *l && lj.1.lcm(&hm) != *l)
            }
        });

        let comp_idx = self.by_comp.get(hc as usize).cloned().unwrap_or_default();
        let cands: Vec<(usize, Monomial, bool)> = comp_idx
            .iter()
            .map(|&g| {
                let gm = self.elems[g][0].1;
                (g, gm.lcm(&hm), self.single_component && gm.gcd_is_one(&hm))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, c) in cands.iter().enumerate() {
            let redundant = cands[idx + 1..].iter().any(|o| o.1.divides(&c.1))
                || kept.iter().any(|o| o.1.divides(&c.1));
            if c.2 || !redundant {
                kept.push(*c);
            }
        }

        self.elems.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
        if let (Some(rs), Some(r)) = (self.reprs.as_mut(), repr) {
            rs.push(r);
        }

        for (g, l, coprime) in kept {
            if coprime {
                continue;
            }
            let gm = self.elems[g][0].1;
            let s = (self.sugar[g] + (l.degree() - gm.degree()) as i32)
                .max(sugar + (l.degree() - hm.degree()) as i32);
            let deg = l.degree() as i32 + self.degrees[hc as usize];
            self.push(deg, s, Task::Pair(g, hi, l));
        }

        while self.by_comp.len() <= hc as usize {
            self.by_comp.push(Vec::new());
        }
        let elems = &self.elems;
        let active = &mut self.active;
        self.by_comp[hc as usize].retain(|&g| {
            if hm.divides(&elems[g][0].1) {
                active[g] = false;
                false
            } else {
                true
            }
        });
        self.by_comp[hc as usize].push(hi);
    }

    fn run(&mut self) {
        while let Some((_, task)) = self.queue.pop_first() {
            let (v, sugar, repr) = match task {
                Task::Input(i) => {
                    let v = self.inputs[i].clone();
                    let s = sugar_of(self.degrees, &v);
                    let r = self.reprs.as_ref().map(|_| {
                        ModuleElement::from_terms(&self.ring, vec![(i as u32, Monomial::one(self.ring.nvars()), 1)])
                    });
                    (v, s, r)
                }
                Task::Pair(i, j, l) => {
                    let (gi, gj) = (&self.elems[i], &self.elems[j]);
                    let qi = gi[0].1.quotient_of(&l).unwrap();
                    let qj = gj[0].1.quotient_of(&l).unwrap();
                    let a = mul_term(&self.k, gi, 1, &qi);
                    let v = sub_mul(self.ord, &self.k, &a, 1, &qj, gj);
                    let s = (self.sugar[i] + qi.degree() as i32).max(self.sugar[j] + qj.degree() as i32);
                    let r = self.reprs.as_ref().map(|rs| {
                        let fi = self.ring.monomial(qi, 1);
                        let fj = self.ring.monomial(qj, self.k.neg(1));
                        rs[i].mul_poly(&fi).add(&rs[j].mul_poly(&fj))
                    });
                    (v, s, r)
                }
            };
            if v.is_empty() {
                continue;
            }
            let (h, r) = self.reduce_tracked(v, repr);
            if !h.is_empty() {
                self.insert(h, sugar, r);
            }
        }
    }

    fn finish(mut self) -> EngineOutput {
        let mut live: Vec<usize> = (0..self.elems.len()).filter(|&i| self.active[i]).collect();
        live.sort_by(|&a, &b| cmp_term(self.ord, &self.elems[a][0], &self.elems[b][0]));
        let mut out = Vec::with_capacity(live.len());
        let mut reprs = self.reprs.as_ref().map(|_| Vec::with_capacity(live.len()));
        for &i in &live {
            let g = self.elems[i].clone();
            let lead = g[0];
            let tail = g[1..].to_vec();
            let mut steps = Vec::new();
            let red = self.reducer().reduce(tail, true, Some(i), reprs.as_ref().map(|_| &mut steps));
            let mut v = Vec::with_capacity(red.len() + 1);
            v.push(lead);
            v.extend(red);
            if let (Some(rs), Some(all)) = (reprs.as_mut(), self.reprs.as_ref()) {
                let mut r = all[i].clone();
                for (idx, q, c) in steps {
                    r = r.add(&all[idx].mul_poly(&self.ring.monomial(q, self.k.neg(c))));
                }
                rs.push(r);
            }
            out.push(v);
        }
        // replace in place so later tails see the reduced versions; results identical
        for (slot, &i) in live.iter().enumerate() {
            self.elems[i] = out[slot].clone();
        }
        EngineOutput { elems: out, reprs }
    }
}

/// Buchberger's algorithm on vectors in a free module with generator degrees `degrees`.
pub(crate) fn buchberger(
    ring: &Ring,
    order: &ModuleOrder,
    degrees: &[i32],
    inputs: Vec<Vec<Term>>,
    track: bool,
) -> EngineOutput {
    let k = *ring.field();
    let mut eng = Engine {
        ring: ring.clone(),
        ord: order,
        k,
        degrees,
        single_component: degrees.len() == 1,
        inputs,
        elems: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        by_comp: vec![Vec::new(); degrees.len()],
        reprs: if track { Some(Vec::new()) } else { None },
        queue: BTreeMap::new(),
        seq: 0,
    };
    for i in 0..eng.inputs.len() {
        let v = &eng.inputs[i];
        if v.is_empty() {
            continue;
        }
        let d = weighted_degree(degrees, &v[0]);
        let s = sugar_of(degrees, v);
        eng.push(d, s, Task::Input(i));
    }
    eng.run();
    eng.finish()
}
