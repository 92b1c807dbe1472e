//! Sparse multivariate polynomials in canonical form: terms strictly
//! decreasing in the ring's monomial order, no zero coefficients, the zero
//! polynomial is the empty term list.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{Bideg, RingRef};

pub type Term = (Coeff, Monomial);

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, Coeff::one(ring.charac()))
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(c, Monomial::one(ring.nvars()))],
        }
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(
                Coeff::one(ring.charac()),
                Monomial::var(index, ring.nvars()),
            )],
        }
    }

    pub fn term(ring: &RingRef, c: Coeff, m: Monomial) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        debug_assert_eq!(m.nvars(), ring.nvars());
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(c, m)],
        }
    }

    /// Builds a polynomial from arbitrary (coeff, monomial) pairs, sorting and
    /// combining into canonical form.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<Term>) -> Self {
        let order = ring.order().clone();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if c.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => {
                    *lc = lc.add(&c, ring.charac());
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((c, m)),
            }
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: out,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].1.is_one())
    }

    /// True when the polynomial is a nonzero constant, i.e. a unit.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn lead_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(c, _)| c)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn charac(&self) -> u64 {
        self.ring.charac()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let p = self.charac();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(cb, p);
                    if !c.is_zero() {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        let p = self.charac();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.neg(p), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let p = self.charac();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (a.mul(c, p), m.clone()))
                .collect(),
        }
    }

    /// Multiplies by the term `c * m`. Term multiplication preserves order,
    /// so the result stays canonical without re-sorting.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let p = self.charac();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, am) in &self.terms {
            terms.push((a.mul(c, p), am.mul(m)?));
        }
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &small.terms {
            acc = acc.add(&big.mul_term(c, m)?)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, n: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact division: returns q with q*g = self, or an error when g does not
    /// divide self.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check_ring(g)?;
        if g.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let p = self.charac();
        let (glc, glm) = g.lead_term().unwrap();
        let mut rem = self.clone();
        let mut quo: Vec<Term> = Vec::new();
        while let Some((rc, rm)) = rem.lead_term() {
            let qm = glm.div_into(rm).ok_or(Error::InexactDivision)?;
            let qc = rc.div(glc, p)?;
            rem = rem.sub(&g.mul_term(&qc, &qm)?)?;
            quo.push((qc, qm));
        }
        // quotient terms are produced in strictly decreasing order
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms: quo,
        })
    }

    /// Divides by the leading coefficient, making the polynomial monic.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inv(self.charac()).expect("nonzero lead coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Bidegree of a homogeneous polynomial; `None` for zero or inhomogeneous
    /// input.
    pub fn bidegree(&self) -> Option<Bideg> {
        let first = self.terms.first()?;
        let d = self.ring.mono_bidegree(&first.1);
        for (_, m) in &self.terms[1..] {
            if self.ring.mono_bidegree(m) != d {
                return None;
            }
        }
        Some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    /// Total x-degree of the largest term (0 for the zero polynomial).
    pub fn max_xdegree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(_, m)| self.ring.mono_bidegree(m).0)
            .max()
            .unwrap_or(0)
    }

    /// Maps this polynomial into a ring extending the variable list, with this
    /// ring's variables occupying positions `at..at+nvars`.
    pub fn into_extended(&self, target: &RingRef, at: usize) -> Polynomial {
        let before = at;
        let after = target.nvars() - self.ring.nvars() - at;
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let m2 = m.insert_vars(self.ring.nvars(), after).insert_vars(0, before);
                (c.clone(), m2)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Inverse of `into_extended`: drops the variables at `at..at+count`,
    /// which must not occur. Returns `None` when they do occur.
    pub fn from_extended(&self, target: &RingRef, at: usize, count: usize) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            terms.push((c.clone(), m.remove_vars(at, count)?));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Renders in the external polynomial grammar; parseable back by
    /// `parse::poly_parse`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_display_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let abs = if neg { c.neg(self.charac()) } else { c.clone() };
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.render());
            }
            for (v, &e) in self.ring.vars().iter().zip(m.exps()) {
                if e == 1 {
                    factors.push(v.clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", v, e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PolyRing;

    fn ring2() -> RingRef {
        PolyRing::standard(&["x", "y"], 0).unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.add(&y).unwrap();
        let g = x.sub(&y).unwrap();
        let fg = f.mul(&g).unwrap();
        let expected = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(fg, expected);
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // (x^2 y - x y^2) / (x - y) = x y
        let f = x
            .pow(2)
            .unwrap()
            .mul(&y)
            .unwrap()
            .sub(&x.mul(&y.pow(2).unwrap()).unwrap())
            .unwrap();
        let g = x.sub(&y).unwrap();
        assert_eq!(f.exact_div(&g).unwrap(), x.mul(&y).unwrap());
        // x^2 + y^2 is not divisible by x - y
        let h = x.pow(2).unwrap().add(&y.pow(2).unwrap()).unwrap();
        assert_eq!(h.exact_div(&g), Err(Error::InexactDivision));
    }

    #[test]
    fn homogeneity_and_bidegree() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.pow(2).unwrap().add(&x.mul(&y).unwrap()).unwrap();
        assert_eq!(f.bidegree(), Some(Bideg(2, 0)));
        let g = f.add(&x).unwrap();
        assert_eq!(g.bidegree(), None);
        assert!(!g.is_homogeneous());
        assert!(Polynomial::zero(&r).is_homogeneous());
    }

    #[test]
    fn render_canonical() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x
            .pow(2)
            .unwrap()
            .sub(&x.mul(&y).unwrap().scale(&Coeff::from_i64(2, 0)))
            .unwrap();
        assert_eq!(f.render(), "x^2 - 2*x*y");
        assert_eq!(Polynomial::zero(&r).render(), "0");
    }
}
