//! Bigraded Hilbert series, truncated to a total x-degree. Series of
//! quotients are computed from the initial monomial ideal by the standard
//! pivot-splitting recursion on the numerator; series of free modules come
//! from their shifts in closed form. Euler characteristics of complexes give
//! the exactness cross-checks used throughout.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::complex::{FreeComplex, FreeModule};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::ring::{Bideg, RingRef};

/// Truncated power series in (t, u): coefficient of t^a u^b at `c[a][b]`,
/// with every a <= trunc kept and b <= a + y_pad bounded by the grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    pub trunc: usize,
    pub coeffs: Vec<Vec<BigInt>>,
}

impl BiSeries {
    pub fn zero(trunc: usize) -> Self {
        BiSeries {
            trunc,
            coeffs: vec![vec![BigInt::zero(); trunc + 1]; trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = BiSeries::zero(trunc);
        s.coeffs[0][0] = BigInt::one();
        s
    }

    pub fn monomial(trunc: usize, d: Bideg) -> Self {
        let mut s = BiSeries::zero(trunc);
        if d.0 >= 0 && d.1 >= 0 && (d.0 as usize) <= trunc && (d.1 as usize) <= trunc {
            s.coeffs[d.0 as usize][d.1 as usize] = BigInt::one();
        }
        s
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.coeffs
            .get(a)
            .and_then(|row| row.get(b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let mut out = self.clone();
        for a in 0..=self.trunc {
            for b in 0..=self.trunc {
                out.coeffs[a][b] += &other.coeffs[a][b];
            }
        }
        out
    }

    pub fn sub(&self, other: &BiSeries) -> BiSeries {
        let mut out = self.clone();
        for a in 0..=self.trunc {
            for b in 0..=self.trunc {
                out.coeffs[a][b] -= &other.coeffs[a][b];
            }
        }
        out
    }

    pub fn neg(&self) -> BiSeries {
        BiSeries::zero(self.trunc).sub(self)
    }

    /// Multiply by t^a u^b (dropping overflowing terms).
    pub fn shift(&self, d: Bideg) -> BiSeries {
        let mut out = BiSeries::zero(self.trunc);
        if d.0 < 0 || d.1 < 0 {
            // negative twists do not occur for the series we build
            return out;
        }
        let (da, db) = (d.0 as usize, d.1 as usize);
        for a in 0..=self.trunc.saturating_sub(da) {
            for b in 0..=self.trunc.saturating_sub(db) {
                out.coeffs[a + da][b + db] = self.coeffs[a][b].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &BiSeries) -> BiSeries {
        let mut out = BiSeries::zero(self.trunc);
        for a1 in 0..=self.trunc {
            for b1 in 0..=self.trunc {
                if self.coeffs[a1][b1].is_zero() {
                    continue;
                }
                for a2 in 0..=(self.trunc - a1) {
                    for b2 in 0..=(self.trunc - b1) {
                        if other.coeffs[a2][b2].is_zero() {
                            continue;
                        }
                        let prod = &self.coeffs[a1][b1] * &other.coeffs[a2][b2];
                        out.coeffs[a1 + a2][b1 + b2] += prod;
                    }
                }
            }
        }
        out
    }

    /// Multiply by the geometric series 1/(1 - t^a u^b).
    pub fn divide_by_one_minus(&self, d: Bideg) -> BiSeries {
        let mut geo = BiSeries::zero(self.trunc);
        let (da, db) = (d.0 as usize, d.1 as usize);
        let mut a = 0usize;
        let mut b = 0usize;
        loop {
            if a > self.trunc || b > self.trunc {
                break;
            }
            geo.coeffs[a][b] = BigInt::one();
            if da == 0 && db == 0 {
                break;
            }
            a += da;
            b += db;
        }
        self.mul(&geo)
    }

    /// Restriction to the x-grading: coefficient of t^a summed over u.
    pub fn x_coefficients(&self) -> Vec<BigInt> {
        (0..=self.trunc)
            .map(|a| {
                let mut s = BigInt::zero();
                for b in 0..=self.trunc {
                    s += &self.coeffs[a][b];
                }
                s
            })
            .collect()
    }
}

/// Hilbert series of the full ring, truncated.
pub fn series_of_ring(ring: &RingRef, trunc: usize) -> BiSeries {
    let mut s = BiSeries::one(trunc);
    for d in ring.var_bidegs() {
        s = s.divide_by_one_minus(*d);
    }
    s
}

/// Hilbert series of a free module from its shifts; B(-a,-b) contributes
/// t^a u^b times the ring series.
pub fn series_of_free(module: &FreeModule, trunc: usize) -> BiSeries {
    let ring_series = series_of_ring(&module.ring, trunc);
    let mut out = BiSeries::zero(trunc);
    for s in &module.shifts {
        out = out.add(&ring_series.shift(*s));
    }
    out
}

/// Alternating sum of the free-module series of a complex.
pub fn euler_characteristic(complex: &FreeComplex, trunc: usize) -> BiSeries {
    let mut out = BiSeries::zero(trunc);
    for (i, m) in complex.modules.iter().enumerate() {
        let s = series_of_free(m, trunc);
        out = if i % 2 == 0 { out.add(&s) } else { out.sub(&s) };
    }
    out
}

/// Numerator polynomial of HS(B/I) for a monomial ideal, as a map
/// bidegree -> integer coefficient: HS(B/I) = N / prod(1 - t^{deg v}).
pub fn monomial_quotient_numerator(ring: &RingRef, gens: &[Monomial]) -> Vec<(Bideg, BigInt)> {
    let minimal = minimalize_monomials(gens.to_vec());
    let mut acc: std::collections::BTreeMap<Bideg, BigInt> = Default::default();
    numerator_rec(ring, minimal, Bideg::ZERO, BigInt::one(), &mut acc);
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn minimalize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator_rec(
    ring: &RingRef,
    gens: Vec<Monomial>,
    twist: Bideg,
    sign: BigInt,
    acc: &mut std::collections::BTreeMap<Bideg, BigInt>,
) {
    if gens.is_empty() {
        *acc.entry(twist).or_insert_with(BigInt::zero) += sign;
        return;
    }
    if gens.iter().any(|m| m.is_one()) {
        return; // unit ideal: zero quotient
    }
    // coprime generators factor the numerator
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, m)| gens[i + 1..].iter().all(|n| m.coprime(n)));
    if pairwise_coprime {
        // expand prod (1 - t^{deg m}) by inclusion-exclusion
        let mut terms: Vec<(Bideg, BigInt)> = vec![(Bideg::ZERO, BigInt::one())];
        for m in &gens {
            let d = ring.mono_bidegree(m);
            let mut next = Vec::with_capacity(terms.len() * 2);
            for (b, c) in &terms {
                next.push((*b, c.clone()));
                next.push((b.add(d), -c.clone()));
            }
            terms = next;
        }
        for (b, c) in terms {
            *acc.entry(twist.add(b)).or_insert_with(BigInt::zero) += sign.clone() * c;
        }
        return;
    }
    // pivot: a variable occurring in the most generators
    let nvars = ring.nvars();
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (v, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| counts[v]).unwrap();
    debug_assert!(counts[pivot] >= 1);
    let pivot_deg = ring.var_bidegs()[pivot];

    // I + <x_v>
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exp(pivot) == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(pivot, nvars));
    numerator_rec(ring, minimalize_monomials(plus), twist, sign.clone(), acc);

    // t^{deg x_v} * (I : x_v)
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exp(pivot) > 0 {
                Monomial::var(pivot, nvars).div_into(m).unwrap()
            } else {
                m.clone()
            }
        })
        .collect();
    numerator_rec(
        ring,
        minimalize_monomials(colon),
        twist.add(pivot_deg),
        sign,
        acc,
    );
}

/// Truncated Hilbert series of B/I from a Groebner basis (initial ideal).
pub fn series_of_quotient(ideal: &Ideal, trunc: usize, budget: &Budget) -> Result<BiSeries> {
    let ring = ideal.ring().clone();
    let gb = ideal.groebner(budget)?;
    let numerator = monomial_quotient_numerator(&ring, &gb.lead_monomials());
    let ring_series = series_of_ring(&ring, trunc);
    let mut out = BiSeries::zero(trunc);
    for (d, c) in numerator {
        if d.0 < 0 || d.1 < 0 || d.0 as usize > trunc {
            continue;
        }
        let shifted = ring_series.shift(d);
        for a in 0..=trunc {
            for b in 0..=trunc {
                out.coeffs[a][b] += &c * &shifted.coeffs[a][b];
            }
        }
    }
    Ok(out)
}

/// Hilbert function values of B/I in the x-grading, degrees 0..=trunc.
pub fn hilbert_function_x(ideal: &Ideal, trunc: usize, budget: &Budget) -> Result<Vec<BigInt>> {
    Ok(series_of_quotient(ideal, trunc, budget)?.x_coefficients())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly_parse;
    use crate::ring::PolyRing;

    fn nums(v: Vec<i64>) -> Vec<BigInt> {
        v.into_iter().map(BigInt::from).collect()
    }

    #[test]
    fn ring_series_one_variable() {
        let r = PolyRing::standard(&["x"], 0).unwrap();
        let s = series_of_ring(&r, 4);
        assert_eq!(s.x_coefficients(), nums(vec![1, 1, 1, 1, 1]));
    }

    #[test]
    fn quotient_by_maximal_ideal() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let gens = vec![
            poly_parse(&r, "x").unwrap(),
            poly_parse(&r, "y").unwrap(),
        ];
        let i = Ideal::new(&r, gens).unwrap();
        let hf = hilbert_function_x(&i, 5, &b).unwrap();
        assert_eq!(hf, nums(vec![1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn koszul_euler_characteristic_matches_quotient_series() {
        // complex on (x,y): ranks 1,2,1 with shifts 0;1,1;2
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let f0 = FreeModule::new(&r, vec![Bideg::ZERO]);
        let f1 = FreeModule::new(&r, vec![Bideg(1, 0), Bideg(1, 0)]);
        let f2 = FreeModule::new(&r, vec![Bideg(2, 0)]);
        let complex = FreeComplex {
            modules: vec![f0, f1, f2],
            maps: vec![],
        };
        let chi = euler_characteristic(&complex, 6);
        let b = Budget::unlimited();
        let i = Ideal::new(
            &r,
            vec![poly_parse(&r, "x").unwrap(), poly_parse(&r, "y").unwrap()],
        )
        .unwrap();
        let hs = series_of_quotient(&i, 6, &b).unwrap();
        assert_eq!(chi, hs);
    }

    #[test]
    fn bigraded_shifted_free_module_series()
    {
        // S = K[x; z] with deg z = (1,1): series of S(-1,-1) is
        // t*u/((1-t)(1-t*u))
        let r = PolyRing::new(
            vec!["x".into(), "z".into()],
            vec![Bideg(1, 0), Bideg(1, 1)],
            crate::order::Order::GrevLex,
            0,
        )
        .unwrap();
        let m = FreeModule::new(&r, vec![Bideg(1, 1)]);
        let s = series_of_free(&m, 3);
        // coefficient of t^2 u^1: monomials x*z -> 1
        assert_eq!(s.coeff(1, 1), BigInt::one());
        assert_eq!(s.coeff(2, 1), BigInt::one());
        assert_eq!(s.coeff(3, 2), BigInt::one());
        assert_eq!(s.coeff(0, 0), BigInt::zero());
    }

    #[test]
    fn numerator_of_non_coprime_pair() {
        // I = (x^2, x*y): HS(B/I) over K[x,y] counts 1, x, y, y^2, x*y? no:
        // standard monomials are 1, x, and all powers of y.
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let i = Ideal::new(
            &r,
            vec![
                poly_parse(&r, "x^2").unwrap(),
                poly_parse(&r, "x*y").unwrap(),
            ],
        )
        .unwrap();
        let hf = hilbert_function_x(&i, 5, &b).unwrap();
        assert_eq!(hf, nums(vec![1, 2, 1, 1, 1, 1]));
    }
}
