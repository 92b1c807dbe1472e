//! Exponent vectors with cached total degree. Exponents are fixed-width
//! machine integers; overflow is detected and reported rather than wrapped.

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exp = u16;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[Exp; 12]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut exps: SmallVec<[Exp; 12]> = smallvec::smallvec![0; nvars];
        exps[index] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn from_exps(exps: &[Exp]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg,
        }
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> Exp {
        self.exps[i]
    }

    /// Total exponent degree (unweighted).
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(*o).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps,
            deg: self.deg + other.deg,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self
                .exps
                .iter()
                .zip(other.exps.iter())
                .all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: SmallVec<[Exp; 12]> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[Exp; 12]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, n: u32) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        for e in exps.iter_mut() {
            let v = (*e as u64).checked_mul(n as u64).ok_or(Error::ExponentOverflow)?;
            *e = Exp::try_from(v).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps,
            deg: self.deg * n,
        })
    }

    /// Inserts `count` zero exponents at position `at` (ring extension).
    pub fn insert_vars(&self, at: usize, count: usize) -> Monomial {
        let mut exps: SmallVec<[Exp; 12]> = SmallVec::with_capacity(self.exps.len() + count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend(std::iter::repeat(0).take(count));
        exps.extend_from_slice(&self.exps[at..]);
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Removes the exponents at positions `at..at+count`, which must be zero.
    pub fn remove_vars(&self, at: usize, count: usize) -> Option<Monomial> {
        if self.exps[at..at + count].iter().any(|&e| e != 0) {
            return None;
        }
        let mut exps: SmallVec<[Exp; 12]> = SmallVec::with_capacity(self.exps.len() - count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend_from_slice(&self.exps[at + count..]);
        Monomial {
            exps,
            deg: self.deg,
        }
        .into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_div_roundtrip() {
        let a = Monomial::from_exps(&[1, 2, 0]);
        let b = Monomial::from_exps(&[0, 1, 3]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.exps(), &[1, 3, 3]);
        assert_eq!(a.div_into(&ab).unwrap(), b);
        assert!(ab.div_into(&a).is_none());
    }

    #[test]
    fn lcm_and_coprime() {
        let a = Monomial::from_exps(&[2, 0]);
        let b = Monomial::from_exps(&[0, 3]);
        assert!(a.coprime(&b));
        assert_eq!(a.lcm(&b).exps(), &[2, 3]);
    }

    #[test]
    fn overflow_detected() {
        let a = Monomial::from_exps(&[Exp::MAX]);
        assert_eq!(a.mul(&Monomial::from_exps(&[1])), Err(Error::ExponentOverflow));
    }
}
