//! Field coefficients: arbitrary-precision rationals, or residues modulo a
//! machine-word prime. The choice is made at ring level through the ring's
//! characteristic; every coefficient of a polynomial in a ring of
//! characteristic 0 is a `Q`, and in characteristic p an `Fp` reduced mod p.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coeff {
    /// Rational stored in lowest terms (maintained by `BigRational`).
    Q(BigRational),
    /// Residue in `[0, p)` for the ring's prime characteristic p.
    Fp(u64),
}

impl Coeff {
    pub fn zero(charac: u64) -> Self {
        if charac == 0 {
            Coeff::Q(BigRational::zero())
        } else {
            Coeff::Fp(0)
        }
    }

    pub fn one(charac: u64) -> Self {
        if charac == 0 {
            Coeff::Q(BigRational::one())
        } else {
            Coeff::Fp(1)
        }
    }

    pub fn from_i64(v: i64, charac: u64) -> Self {
        if charac == 0 {
            Coeff::Q(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = charac as i128;
            Coeff::Fp(((v as i128 % p + p) % p) as u64)
        }
    }

    pub fn from_ratio(num: i64, den: i64, charac: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDivision);
        }
        if charac == 0 {
            Ok(Coeff::Q(BigRational::new(BigInt::from(num), BigInt::from(den))))
        } else {
            let d = Coeff::from_i64(den, charac);
            if d.is_zero() {
                return Err(Error::ZeroDivision);
            }
            Ok(Coeff::from_i64(num, charac).mul(&d.inv(charac)?, charac))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_zero(),
            Coeff::Fp(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_one(),
            Coeff::Fp(v) => *v == 1,
        }
    }

    pub fn add(&self, other: &Coeff, charac: u64) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::Fp(a), Coeff::Fp(b)) => {
                Coeff::Fp(((*a as u128 + *b as u128) % charac as u128) as u64)
            }
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn sub(&self, other: &Coeff, charac: u64) -> Coeff {
        self.add(&other.neg(charac), charac)
    }

    pub fn neg(&self, charac: u64) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::Fp(a) => Coeff::Fp(if *a == 0 { 0 } else { charac - *a }),
        }
    }

    pub fn mul(&self, other: &Coeff, charac: u64) -> Coeff {
        match (self, other) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::Fp(a), Coeff::Fp(b)) => {
                Coeff::Fp(((*a as u128 * *b as u128) % charac as u128) as u64)
            }
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn inv(&self, charac: u64) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        Ok(match self {
            Coeff::Q(a) => Coeff::Q(a.recip()),
            Coeff::Fp(a) => Coeff::Fp(mod_inv(*a, charac)),
        })
    }

    pub fn div(&self, other: &Coeff, charac: u64) -> Result<Coeff> {
        Ok(self.mul(&other.inv(charac)?, charac))
    }

    /// Renders in the polynomial text grammar: `n` or `n/d`.
    pub fn render(&self) -> String {
        match self {
            Coeff::Q(r) => {
                if r.denom().is_one() {
                    format!("{}", r.numer())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Fp(v) => format!("{}", v),
        }
    }

    /// True when the rational value is negative (used only for display).
    pub fn is_display_negative(&self) -> bool {
        match self {
            Coeff::Q(r) => r.is_negative(),
            Coeff::Fp(_) => false,
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid over i128
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible mod p");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_stays_reduced() {
        let a = Coeff::from_ratio(2, 4, 0).unwrap();
        let b = Coeff::from_ratio(1, 2, 0).unwrap();
        assert_eq!(a, b);
        assert!(a.sub(&b, 0).is_zero());
        assert_eq!(a.add(&b, 0), Coeff::from_i64(1, 0));
    }

    #[test]
    fn prime_field_inverse() {
        let p = 32003;
        let a = Coeff::from_i64(17, p);
        let inv = a.inv(p).unwrap();
        assert!(a.mul(&inv, p).is_one());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }
}
