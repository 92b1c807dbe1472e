//! Ideals and reduced Groebner bases: Buchberger with normal-pair (sugar)
//! selection and Gebauer-Moeller pair elimination, plus the ideal-theoretic
//! toolkit built on top: normal forms, membership, colon, intersection,
//! elimination, dimension, grade, minimal generator counts, powers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::budget::Budget;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::Order;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingRef};

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.gens == other.gens
    }
}

impl Eq for Ideal {}

impl Ideal {
    /// Zero generators are dropped; the zero ideal has an empty list.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !g.ring().same_ring(ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: Arc::clone(ring),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner(&self, budget: &Budget) -> Result<Arc<GroebnerBasis>> {
        groebner(self, budget)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        for g in &other.gens {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// All s-fold products of generators (deduplicated), then minimalized.
    pub fn power(&self, s: u32, budget: &Budget) -> Result<Ideal> {
        if s == 0 {
            return Err(Error::InvalidParameter("power exponent must be >= 1".into()));
        }
        let mut products: Vec<Polynomial> = vec![Polynomial::one(&self.ring)];
        for _ in 0..s {
            budget.charge(products.len() as u64)?;
            let mut next: Vec<Polynomial> = Vec::new();
            for p in &products {
                for g in &self.gens {
                    let q = p.mul(g)?;
                    if !next.contains(&q) {
                        next.push(q);
                    }
                }
            }
            products = next;
        }
        let gens = minimal_generators_of(&self.ring, products, budget)?;
        Ideal::new(&self.ring, gens)
    }
}

/// Reduced Groebner basis: pairwise tail-reduced, monic, sorted with the
/// largest leading monomial first. Unique per (ideal, order).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn contains_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_unit())
    }

    pub fn as_ideal(&self) -> Ideal {
        Ideal {
            ring: Arc::clone(&self.ring),
            gens: self.elements.clone(),
        }
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.lead_monomial().unwrap().clone())
            .collect()
    }
}

static GB_CACHE: Lazy<Mutex<HashMap<String, Arc<GroebnerBasis>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn cache_key(ideal: &Ideal) -> String {
    let mut gens: Vec<String> = ideal.gens.iter().map(|g| g.render()).collect();
    gens.sort();
    format!("{}#{}", ideal.ring.descriptor(), gens.join(";"))
}

/// Unique reduced Groebner basis for the ring's order; memoized per
/// (ideal, order).
pub fn groebner(ideal: &Ideal, budget: &Budget) -> Result<Arc<GroebnerBasis>> {
    let key = cache_key(ideal);
    if let Some(gb) = GB_CACHE.lock().unwrap().get(&key) {
        return Ok(Arc::clone(gb));
    }
    let basis = buchberger(&ideal.ring, ideal.gens.clone(), budget)?;
    let reduced = reduce_basis(&ideal.ring, basis);
    let gb = Arc::new(GroebnerBasis {
        ring: Arc::clone(&ideal.ring),
        elements: reduced,
    });
    GB_CACHE.lock().unwrap().insert(key, Arc::clone(&gb));
    Ok(gb)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Buchberger's algorithm with sugar selection and the Gebauer-Moeller
/// criteria (product criterion on new pairs, chain criterion on old ones).
fn buchberger(ring: &RingRef, gens: Vec<Polynomial>, budget: &Budget) -> Result<Vec<Polynomial>> {
    let order = ring.order().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let s = g.lead_monomial().unwrap().degree() + tail_gap(&g);
        add_element(&mut basis, &mut sugars, &mut pairs, g, s);
    }

    while !pairs.is_empty() {
        budget.charge(1)?;
        let best = select_pair(&order, &pairs);
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm)?;
        let nf = normal_form(&s, &basis)?;
        if !nf.is_zero() {
            let sugar = pair.sugar.max(nf.lead_monomial().unwrap().degree());
            add_element(&mut basis, &mut sugars, &mut pairs, nf, sugar);
        }
    }
    Ok(basis)
}

/// Sugar for inhomogeneous inputs: extra degree carried by the tail.
fn tail_gap(g: &Polynomial) -> u32 {
    let lead = g.lead_monomial().unwrap().degree();
    let max = g.terms().iter().map(|(_, m)| m.degree()).max().unwrap();
    max - lead
}

fn select_pair(order: &Order, pairs: &[Pair]) -> usize {
    let mut best = 0;
    for k in 1..pairs.len() {
        let a = &pairs[k];
        let b = &pairs[best];
        let key = a
            .sugar
            .cmp(&b.sugar)
            .then_with(|| order.cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
        if key == std::cmp::Ordering::Less {
            best = k;
        }
    }
    best
}

fn add_element(
    basis: &mut Vec<Polynomial>,
    sugars: &mut Vec<u32>,
    pairs: &mut Vec<Pair>,
    g: Polynomial,
    sugar: u32,
) {
    let t = basis.len();
    let lt = g.lead_monomial().unwrap().clone();

    // chain criterion against queued pairs
    pairs.retain(|p| {
        let lcm_it = basis[p.i].lead_monomial().unwrap().lcm(&lt);
        let lcm_jt = basis[p.j].lead_monomial().unwrap().lcm(&lt);
        !(lt.divides(&p.lcm) && lcm_it != p.lcm && lcm_jt != p.lcm)
    });

    // candidate pairs with the new element
    let fresh: Vec<Pair> = (0..t)
        .map(|i| {
            let lm_i = basis[i].lead_monomial().unwrap();
            let lcm = lm_i.lcm(&lt);
            let sugar_pair = (sugars[i] + (lcm.degree() - lm_i.degree()))
                .max(sugar + (lcm.degree() - lt.degree()));
            Pair {
                i,
                j: t,
                lcm,
                sugar: sugar_pair,
            }
        })
        .collect();

    // drop pairs whose lcm is properly divided by another new pair's lcm,
    // keeping one representative among equal lcms
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..fresh.len() {
            if a == b || !keep[b] {
                continue;
            }
            if fresh[b].lcm.divides(&fresh[a].lcm)
                && (fresh[a].lcm != fresh[b].lcm || b < a)
            {
                keep[a] = false;
                break;
            }
        }
    }
    // product criterion: coprime leading monomials reduce to zero
    for (k, p) in fresh.iter().enumerate() {
        if keep[k] {
            let lm_i = basis[p.i].lead_monomial().unwrap();
            if lm_i.coprime(&lt) {
                keep[k] = false;
            }
        }
    }
    pairs.extend(
        fresh
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| if k { Some(p) } else { None }),
    );

    basis.push(g);
    sugars.push(sugar);
}

pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Result<Polynomial> {
    let p = f.ring().charac();
    let (fc, fm) = f.lead_term().unwrap();
    let (gc, gm) = g.lead_term().unwrap();
    let mf = fm.div_into(lcm).unwrap();
    let mg = gm.div_into(lcm).unwrap();
    let a = f.mul_term(&Coeff::one(p).div(fc, p)?, &mf)?;
    let b = g.mul_term(&Coeff::one(p).div(gc, p)?, &mg)?;
    a.sub(&b)
}

/// Full normal form: every term of the remainder is irreducible modulo the
/// basis leads.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let p = ring.charac();
    let mut work = f.clone();
    let mut remainder: Vec<(Coeff, Monomial)> = Vec::new();
    'outer: while let Some((wc, wm)) = work.lead_term() {
        for g in basis {
            let (gc, gm) = match g.lead_term() {
                Some(t) => t,
                None => continue,
            };
            if gm.divides(wm) {
                let qm = gm.div_into(wm).unwrap();
                let qc = wc.div(gc, p)?;
                work = work.sub(&g.mul_term(&qc, &qm)?)?;
                continue 'outer;
            }
        }
        remainder.push((wc.clone(), wm.clone()));
        let lead = Polynomial::term(&ring, wc.clone(), wm.clone());
        work = work.sub(&lead)?;
    }
    // remainder terms were collected in strictly decreasing order
    Ok(Polynomial::from_terms(&ring, remainder))
}

fn reduce_basis(ring: &RingRef, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = ring.order().clone();
    // keep only elements with minimal leading monomials
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| order.cmp(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    for g in sorted {
        let lm = g.lead_monomial().unwrap();
        if !kept.iter().any(|h| h.lead_monomial().unwrap().divides(lm)) {
            kept.push(g);
        }
    }
    // tail-reduce each against the others and normalize
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter_map(|(j, h)| if j != i { Some(h.clone()) } else { None })
            .collect();
        let nf = normal_form(&kept[i], &others).expect("tail reduction");
        if !nf.is_zero() {
            reduced.push(nf.monic());
        }
    }
    reduced.sort_by(|a, b| order.cmp(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
    reduced
}

/// Ideal membership: the normal form modulo a Groebner basis vanishes.
pub fn membership(f: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let gb = groebner(ideal, budget)?;
    Ok(normal_form(f, gb.elements())?.is_zero())
}

pub fn ideal_eq(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool> {
    let ga = groebner(a, budget)?;
    let gb = groebner(b, budget)?;
    Ok(ga.elements() == gb.elements())
}

/// I ∩ J by the t-trick: eliminate t from t·I + (1-t)·J.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !a.ring().same_ring(b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring().clone();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ideal::new(&ring, vec![]);
    }
    let ext = ring.with_elim_var("t_elim")?;
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in a.gens() {
        gens.push(t.mul(&g.into_extended(&ext, 1))?);
    }
    for h in b.gens() {
        gens.push(one_minus_t.mul(&h.into_extended(&ext, 1))?);
    }
    let helper = Ideal::new(&ext, gens)?;
    let gb = groebner(&helper, budget)?;
    let mut out: Vec<Polynomial> = Vec::new();
    for g in gb.elements() {
        if let Some(back) = g.from_extended(&ring, 0, 1) {
            out.push(back);
        }
    }
    Ideal::new(&ring, out)
}

/// (I : f), returned as a reduced Groebner basis.
pub fn colon_elem(ideal: &Ideal, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroDivision);
    }
    let ring = ideal.ring().clone();
    if ideal.is_zero_ideal() {
        return Ideal::new(&ring, vec![]);
    }
    let principal = Ideal::new(&ring, vec![f.clone()])?;
    let meet = intersect(ideal, &principal, budget)?;
    let mut gens = Vec::new();
    for g in meet.gens() {
        gens.push(g.exact_div(f)?);
    }
    let quotient = Ideal::new(&ring, gens)?;
    Ok(groebner(&quotient, budget)?.as_ideal())
}

/// (I : J) = ∩ over generators of J of (I : g).
pub fn colon_ideal(ideal: &Ideal, other: &Ideal, budget: &Budget) -> Result<Ideal> {
    if other.is_zero_ideal() {
        return Err(Error::InvalidParameter("colon by the zero ideal".into()));
    }
    let mut acc: Option<Ideal> = None;
    for g in other.gens() {
        let c = colon_elem(ideal, g, budget)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(&prev, &c, budget)?,
        });
    }
    let meet = acc.unwrap();
    Ok(groebner(&meet, budget)?.as_ideal())
}

/// I ∩ K[remaining variables]: Groebner basis under a block order with the
/// eliminated variables dominant, keeping the elements free of them.
pub fn eliminate(ideal: &Ideal, varset: &[usize], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    for &v in varset {
        if v >= ring.nvars() {
            return Err(Error::InvalidParameter(format!(
                "variable index {} out of range",
                v
            )));
        }
    }
    let rest: Vec<usize> = (0..ring.nvars()).filter(|i| !varset.contains(i)).collect();
    let elim_ring = PolyRing::new(
        ring.vars().to_vec(),
        ring.var_bidegs().to_vec(),
        Order::Block(vec![varset.to_vec(), rest]),
        ring.charac(),
    )?;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| Polynomial::from_terms(&elim_ring, g.terms().to_vec()))
        .collect();
    let helper = Ideal::new(&elim_ring, gens)?;
    let gb = groebner(&helper, budget)?;
    let mut out = Vec::new();
    for g in gb.elements() {
        let free = g
            .terms()
            .iter()
            .all(|(_, m)| varset.iter().all(|&v| m.exp(v) == 0));
        if free {
            out.push(Polynomial::from_terms(&ring, g.terms().to_vec()));
        }
    }
    Ideal::new(&ring, out)
}

/// Krull dimension of B/I via the combinatorial dimension of the initial
/// monomial ideal: the largest set of variables containing the support of no
/// leading monomial.
pub fn dimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    let gb = groebner(ideal, budget)?;
    if gb.contains_unit() {
        return Err(Error::UnitIdeal);
    }
    let nvars = ideal.ring().nvars();
    if nvars > 64 {
        return Err(Error::InvalidParameter("more than 64 variables".into()));
    }
    let supports: Vec<u64> = gb
        .lead_monomials()
        .iter()
        .map(|m| {
            let mut mask = 0u64;
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    let full: u64 = if nvars == 64 { !0 } else { (1u64 << nvars) - 1 };
    let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
    fn explore(s: u64, supports: &[u64], seen: &mut std::collections::HashSet<u64>) -> u32 {
        if !seen.insert(s) {
            return 0;
        }
        match supports.iter().find(|&&sup| sup & !s == 0) {
            None => s.count_ones(),
            Some(&sup) => {
                let mut best = 0;
                let mut bits = sup;
                while bits != 0 {
                    let v = bits & bits.wrapping_neg();
                    bits ^= v;
                    best = best.max(explore(s & !v, supports, seen));
                }
                best
            }
        }
    }
    Ok(explore(full, &supports, &mut seen) as usize)
}

/// grade(I) = height(I) = nvars - dim(B/I) over a polynomial ring.
pub fn grade(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    Ok(ideal.ring().nvars() - dimension(ideal, budget)?)
}

/// Minimal homogeneous generators chosen greedily in increasing degree;
/// rejects non-graded input.
pub fn minimal_generators(ideal: &Ideal, budget: &Budget) -> Result<Vec<Polynomial>> {
    minimal_generators_of(ideal.ring(), ideal.gens().to_vec(), budget)
}

fn minimal_generators_of(
    ring: &RingRef,
    gens: Vec<Polynomial>,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let mut graded: Vec<(i64, i64, Polynomial)> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let d = g
            .bidegree()
            .ok_or_else(|| Error::NotGraded("minimal generators need homogeneous input".into()))?;
        graded.push((d.0 + d.1, d.0, g));
    }
    graded.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    let mut kept: Vec<Polynomial> = Vec::new();
    for (_, _, g) in graded {
        if kept.is_empty() {
            kept.push(g);
            continue;
        }
        let current = Ideal::new(ring, kept.clone())?;
        if !membership(&g, &current, budget)? {
            kept.push(g);
        }
    }
    Ok(kept)
}

pub fn min_gens(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    Ok(minimal_generators(ideal, budget)?.len())
}

/// deviation(I) = μ(I) - grade(I).
pub fn deviation(ideal: &Ideal, budget: &Budget) -> Result<i64> {
    Ok(min_gens(ideal, budget)? as i64 - grade(ideal, budget)? as i64)
}

/// Multiplication by g is injective on B/I, i.e. (I : g) = I.
pub fn is_regular_on_quotient(g: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroDivision);
    }
    let colon = colon_elem(ideal, g, budget)?;
    ideal_eq(&colon, ideal, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly_parse;

    fn ideal_of(ring: &RingRef, texts: &[&str]) -> Ideal {
        let gens = texts.iter().map(|t| poly_parse(ring, t).unwrap()).collect();
        Ideal::new(ring, gens).unwrap()
    }

    fn gb_renders(i: &Ideal) -> Vec<String> {
        let b = Budget::unlimited();
        groebner(i, &b)
            .unwrap()
            .elements()
            .iter()
            .map(|g| g.render())
            .collect()
    }

    #[test]
    fn already_reduced_basis_is_returned_as_is() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let i = ideal_of(&r, &["x - y", "y^2"]);
        assert_eq!(gb_renders(&i), vec!["y^2".to_string(), "x - y".to_string()]);
    }

    #[test]
    fn monomial_ideal_basis() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let i = ideal_of(&r, &["x^2", "x*y"]);
        assert_eq!(gb_renders(&i), vec!["x^2".to_string(), "x*y".to_string()]);
    }

    #[test]
    fn path_edge_binomials_are_a_groebner_basis() {
        // frozen by hand S-pair reduction: the single S-pair reduces to zero
        let r = PolyRing::standard(&["x1", "x2", "x3", "y1", "y2", "y3"], 0).unwrap();
        let i = ideal_of(&r, &["x1*y2 - x2*y1", "x2*y3 - x3*y2"]);
        assert_eq!(
            gb_renders(&i),
            vec!["x2*y1 - x1*y2".to_string(), "x3*y2 - x2*y3".to_string()]
        );
    }

    #[test]
    fn normal_form_examples() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let i = ideal_of(&r, &["x - y"]);
        let gb = groebner(&i, &b).unwrap();
        let f = poly_parse(&r, "x^2").unwrap();
        assert_eq!(normal_form(&f, gb.elements()).unwrap().render(), "y^2");
        // membership(1, <x, 1-x>) = true
        let j = ideal_of(&r, &["x", "1 - x"]);
        let one = Polynomial::one(&r);
        assert!(membership(&one, &j, &b).unwrap());
    }

    #[test]
    fn colon_and_intersection_basics() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let xy = ideal_of(&r, &["x*y"]);
        let x = poly_parse(&r, "x").unwrap();
        let colon = colon_elem(&xy, &x, &b).unwrap();
        assert_eq!(ideal_eq(&colon, &ideal_of(&r, &["y"]), &b), Ok(true));

        let ix = ideal_of(&r, &["x"]);
        let iy = ideal_of(&r, &["y"]);
        let meet = intersect(&ix, &iy, &b).unwrap();
        assert_eq!(ideal_eq(&meet, &xy, &b), Ok(true));

        let ix2 = ideal_of(&r, &["x^2"]);
        let meet2 = intersect(&ix2, &ix, &b).unwrap();
        assert_eq!(ideal_eq(&meet2, &ix2, &b), Ok(true));
    }

    #[test]
    fn elimination_examples() {
        let r = PolyRing::standard(&["t", "x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let i = ideal_of(&r, &["t*x - y"]);
        let out = eliminate(&i, &[0], &b).unwrap();
        assert!(out.is_zero_ideal());
    }

    #[test]
    fn dimension_grade_basics() {
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        let b = Budget::unlimited();
        let i = ideal_of(&r, &["x", "y"]);
        assert_eq!(dimension(&i, &b).unwrap(), 1);
        assert_eq!(grade(&i, &b).unwrap(), 2);
        let unit = ideal_of(&r, &["x", "1 - x"]);
        assert_eq!(dimension(&unit, &b), Err(Error::UnitIdeal));
        let zero = Ideal::new(&r, vec![]).unwrap();
        assert_eq!(dimension(&zero, &b).unwrap(), 3);
    }

    #[test]
    fn powers_and_minimal_generators() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let m = ideal_of(&r, &["x", "y"]);
        let m2 = m.power(2, &b).unwrap();
        assert_eq!(
            ideal_eq(&m2, &ideal_of(&r, &["x^2", "x*y", "y^2"]), &b),
            Ok(true)
        );
        assert_eq!(min_gens(&m2, &b).unwrap(), 3);
        let px = ideal_of(&r, &["x"]);
        let px3 = px.power(3, &b).unwrap();
        assert_eq!(ideal_eq(&px3, &ideal_of(&r, &["x^3"]), &b), Ok(true));
        // redundant generator is dropped
        let red = ideal_of(&r, &["x", "x^2 + x*y", "y"]);
        assert_eq!(min_gens(&red, &b).unwrap(), 2);
    }

    #[test]
    fn regularity_of_elements_on_quotients() {
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        let b = Budget::unlimited();
        let i = ideal_of(&r, &["x", "y"]);
        let z = poly_parse(&r, "z").unwrap();
        assert!(is_regular_on_quotient(&z, &i, &b).unwrap());
        let xy = ideal_of(&r, &["x*y"]);
        let x = poly_parse(&r, "x").unwrap();
        assert!(!is_regular_on_quotient(&x, &xy, &b).unwrap());
    }

    #[test]
    fn budget_aborts_cleanly() {
        let r = PolyRing::standard(&["x", "y", "z", "w"], 0).unwrap();
        let tight = Budget::new(1);
        let i = ideal_of(
            &r,
            &["x*y - z*w", "x^2*w - y*z^2", "y^3 - x*z*w", "z^3 - x*y*w"],
        );
        assert_eq!(groebner(&i, &tight).err(), Some(Error::BudgetExceeded));
    }
}
