//! Elements of free modules B^r as sparse term lists (coefficient, monomial,
//! component), kept strictly decreasing under a module monomial order.
//!
//! Module orders compare weighted monomials under the ring order and break
//! ties by a fixed component priority. With unit weights this is a
//! term-over-position order; with the leading monomials of a generating set
//! as weights it is the order induced by Schreyer's construction.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::error::Result;
use crate::monomial::Monomial;
use crate::order::Order;
use crate::poly::Polynomial;
use crate::ring::RingRef;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModTerm {
    pub coeff: Coeff,
    pub mono: Monomial,
    pub comp: usize,
}

#[derive(Clone, Debug)]
pub struct ModOrder {
    ring_order: Order,
    weights: Vec<Monomial>,
    /// Unique priority per component; smaller priority compares greater.
    ties: Vec<usize>,
}

impl ModOrder {
    /// Term-over-position order with unit weights.
    pub fn top(ring: &RingRef, rank: usize) -> Self {
        ModOrder {
            ring_order: ring.order().clone(),
            weights: vec![Monomial::one(ring.nvars()); rank],
            ties: (0..rank).collect(),
        }
    }

    /// Order induced by Schreyer's construction: component c weighs as the
    /// leading monomial of the c-th generator of the presented module.
    pub fn schreyer(ring: &RingRef, lead_monomials: Vec<Monomial>) -> Self {
        ModOrder {
            ring_order: ring.order().clone(),
            ties: (0..lead_monomials.len()).collect(),
            weights: lead_monomials,
        }
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn cmp(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        self.cmp_parts(&a.mono, a.comp, &b.mono, b.comp)
    }

    pub fn cmp_parts(&self, ma: &Monomial, ca: usize, mb: &Monomial, cb: usize) -> Ordering {
        if ca == cb {
            return self.ring_order.cmp(ma, mb);
        }
        let wa = ma.mul(&self.weights[ca]).expect("weighted monomial");
        let wb = mb.mul(&self.weights[cb]).expect("weighted monomial");
        match self.ring_order.cmp(&wa, &wb) {
            Ordering::Equal => self.ties[cb].cmp(&self.ties[ca]),
            o => o,
        }
    }
}

/// A vector in a free module over `ring`, canonical under a fixed `ModOrder`.
#[derive(Clone, Debug)]
pub struct ModVec {
    ring: RingRef,
    terms: Vec<ModTerm>,
}

impl PartialEq for ModVec {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl ModVec {
    pub fn zero(ring: &RingRef) -> Self {
        ModVec {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn unit(ring: &RingRef, comp: usize) -> Self {
        ModVec {
            ring: Arc::clone(ring),
            terms: vec![ModTerm {
                coeff: Coeff::one(ring.charac()),
                mono: Monomial::one(ring.nvars()),
                comp,
            }],
        }
    }

    pub fn from_terms(ring: &RingRef, order: &ModOrder, mut terms: Vec<ModTerm>) -> Self {
        terms.sort_by(|a, b| order.cmp(b, a));
        let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if t.coeff.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.comp == t.comp => {
                    last.coeff = last.coeff.add(&t.coeff, ring.charac());
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        ModVec {
            ring: Arc::clone(ring),
            terms: out,
        }
    }

    /// Embeds a polynomial into component `comp`.
    pub fn from_poly(p: &Polynomial, comp: usize) -> Self {
        ModVec {
            ring: p.ring().clone(),
            terms: p
                .terms()
                .iter()
                .map(|(c, m)| ModTerm {
                    coeff: c.clone(),
                    mono: m.clone(),
                    comp,
                })
                .collect(),
        }
    }

    /// Builds from a column of polynomials (component i = row i).
    pub fn from_column(ring: &RingRef, order: &ModOrder, column: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in column.iter().enumerate() {
            for (c, m) in p.terms() {
                terms.push(ModTerm {
                    coeff: c.clone(),
                    mono: m.clone(),
                    comp: i,
                });
            }
        }
        ModVec::from_terms(ring, order, terms)
    }

    /// Splits back into a dense polynomial column of the given rank.
    pub fn to_column(&self, rank: usize) -> Vec<Polynomial> {
        let mut cols: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            cols[t.comp].push((t.coeff.clone(), t.mono.clone()));
        }
        cols.into_iter()
            .map(|ts| Polynomial::from_terms(&self.ring, ts))
            .collect()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    pub fn add(&self, other: &ModVec, order: &ModOrder) -> ModVec {
        let p = self.ring.charac();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match order.cmp(a, b) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.coeff.add(&b.coeff, p);
                    if !c.is_zero() {
                        out.push(ModTerm {
                            coeff: c,
                            mono: a.mono.clone(),
                            comp: a.comp,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        ModVec {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    pub fn neg(&self) -> ModVec {
        let p = self.ring.charac();
        ModVec {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    coeff: t.coeff.neg(p),
                    mono: t.mono.clone(),
                    comp: t.comp,
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModVec, order: &ModOrder) -> ModVec {
        self.add(&other.neg(), order)
    }

    /// Term multiple; order-preserving, so no re-sort is needed.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Result<ModVec> {
        if c.is_zero() {
            return Ok(ModVec::zero(&self.ring));
        }
        let p = self.ring.charac();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(ModTerm {
                coeff: t.coeff.mul(c, p),
                mono: t.mono.mul(m)?,
                comp: t.comp,
            });
        }
        Ok(ModVec {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn mul_poly(&self, f: &Polynomial, order: &ModOrder) -> Result<ModVec> {
        let mut acc = ModVec::zero(&self.ring);
        for (c, m) in f.terms() {
            acc = acc.add(&self.mul_term(c, m)?, order);
        }
        Ok(acc)
    }

    pub fn monic(&self) -> ModVec {
        match self.lead() {
            None => self.clone(),
            Some(l) if l.coeff.is_one() => self.clone(),
            Some(l) => {
                let inv = l.coeff.inv(self.ring.charac()).expect("nonzero lead");
                self.mul_term(&inv, &Monomial::one(self.ring.nvars()))
                    .expect("scalar multiple")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly_parse;
    use crate::ring::PolyRing;

    #[test]
    fn column_roundtrip_and_lead() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let order = ModOrder::top(&r, 2);
        let col = vec![
            poly_parse(&r, "x^2 - y").unwrap(),
            poly_parse(&r, "x*y").unwrap(),
        ];
        let v = ModVec::from_column(&r, &order, &col);
        // ties prefer the earlier component among equal weighted monomials
        let lead = v.lead().unwrap();
        assert_eq!(lead.comp, 0);
        assert_eq!(v.to_column(2), col);
    }

    #[test]
    fn schreyer_weights_change_the_lead() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        // component 0 weighted by y^3, component 1 by x
        let order = ModOrder::schreyer(
            &r,
            vec![
                Monomial::from_exps(&[0, 3]),
                Monomial::from_exps(&[1, 0]),
            ],
        );
        let col = vec![
            poly_parse(&r, "x").unwrap(),
            poly_parse(&r, "x^2").unwrap(),
        ];
        let v = ModVec::from_column(&r, &order, &col);
        // x * y^3 (comp 0) vs x^2 * x (comp 1): degree 4 vs 3
        assert_eq!(v.lead().unwrap().comp, 0);
    }
}
