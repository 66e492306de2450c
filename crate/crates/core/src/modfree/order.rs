use std::cmp::Ordering;
use std::sync::Arc;

use crate::ring::{Monomial, MonomialOrder};

/// How the bottom free module of a Schreyer tower is ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BottomScheme {
    PositionOverTerm,
    TermOverPosition,
}

/// Image data of one generator in a Schreyer tower: the lead monomial pushed all the
/// way down to the bottom module, and the chain of component indices it passes through
/// (bottom component first, own index last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerKey {
    pub mono: Monomial,
    pub chain: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerFrame {
    pub base: MonomialOrder,
    pub bottom: BottomScheme,
    pub keys: Vec<SchreyerKey>,
}

/// Monomial orders on free modules. In every scheme, ties between components go to the
/// smaller index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    PositionOverTerm(MonomialOrder),
    TermOverPosition(MonomialOrder),
    /// `m e_i > n e_j` iff `m·lead(g_i) > n·lead(g_j)` in the parent order, ties broken
    /// by position.
    Schreyer(Arc<SchreyerFrame>),
}

impl ModuleOrder {
    pub fn base(&self) -> MonomialOrder {
        match self {
            ModuleOrder::PositionOverTerm(o) | ModuleOrder::TermOverPosition(o) => *o,
            ModuleOrder::Schreyer(f) => f.base,
        }
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        match self {
            ModuleOrder::PositionOverTerm(o) => bc.cmp(&ac).then_with(|| o.cmp(am, bm)),
            ModuleOrder::TermOverPosition(o) => o.cmp(am, bm).then_with(|| bc.cmp(&ac)),
            ModuleOrder::Schreyer(frame) => {
                let ka = &frame.keys[ac as usize];
                let kb = &frame.keys[bc as usize];
                let ta = am.mul(&ka.mono);
                let tb = bm.mul(&kb.mono);
                match frame.bottom {
                    BottomScheme::TermOverPosition => frame
                        .base
                        .cmp(&ta, &tb)
                        .then_with(|| kb.chain.cmp(&ka.chain)),
                    BottomScheme::PositionOverTerm => kb.chain[0]
                        .cmp(&ka.chain[0])
                        .then_with(|| frame.base.cmp(&ta, &tb))
                        .then_with(|| kb.chain[1..].cmp(&ka.chain[1..])),
                }
            }
        }
    }

    /// Schreyer order on a free module whose `j`-th generator maps to an element with
    /// lead term `leads[j]` (monomial, component) in a module ordered by `self`.
    pub fn induced(&self, leads: &[(Monomial, u32)]) -> ModuleOrder {
        let frame = match self {
            ModuleOrder::Schreyer(parent) => SchreyerFrame {
                base: parent.base,
                bottom: parent.bottom,
                keys: leads
                    .iter()
                    .enumerate()
                    .map(|(j, (m, c))| {
                        let pk = &parent.keys[*c as usize];
                        let mut chain = pk.chain.clone();
                        chain.push(j as u32);
                        SchreyerKey {
                            mono: m.mul(&pk.mono),
                            chain,
                        }
                    })
                    .collect(),
            },
            ModuleOrder::PositionOverTerm(o) | ModuleOrder::TermOverPosition(o) => SchreyerFrame {
                base: *o,
                bottom: if matches!(self, ModuleOrder::PositionOverTerm(_)) {
                    BottomScheme::PositionOverTerm
                } else {
                    BottomScheme::TermOverPosition
                },
                keys: leads
                    .iter()
                    .enumerate()
                    .map(|(j, (m, c))| SchreyerKey {
                        mono: *m,
                        chain: vec![*c, j as u32],
                    })
                    .collect(),
            },
        };
        ModuleOrder::Schreyer(Arc::new(frame))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn schreyer_compares_images_then_position() {
        let top = ModuleOrder::TermOverPosition(MonomialOrder::Grevlex);
        // e_0 -> x0^2, e_1 -> x0 x1
        let ord = top.induced(&[(m(&[2, 0]), 0), (m(&[1, 1]), 0)]);
        // x1 e_0 -> x0^2 x1 and x0 e_1 -> x0^2 x1: equal images, smaller index wins
        assert_eq!(ord.cmp(&m(&[0, 1]), 0, &m(&[1, 0]), 1), Ordering::Greater);
        // x0 e_0 -> x0^3 beats x1 e_1 -> x0 x1^2 (grevlex)
        assert_eq!(ord.cmp(&m(&[1, 0]), 0, &m(&[0, 1]), 1), Ordering::Greater);
        // second level tower
        let ord2 = ord.induced(&[(m(&[0, 1]), 0)]);
        assert_eq!(ord2.cmp(&m(&[1, 0]), 0, &m(&[1, 0]), 0), Ordering::Equal);
        assert_eq!(ord2.cmp(&m(&[1, 0]), 0, &m(&[0, 1]), 0), Ordering::Greater);
    }

    #[test]
    fn position_over_term_prefers_low_index() {
        let ord = ModuleOrder::PositionOverTerm(MonomialOrder::Grevlex);
        assert_eq!(ord.cmp(&m(&[0, 0]), 0, &m(&[5, 0]), 1), Ordering::Greater);
    }
}
