//! The skew-matrix families: for odd n >= 5, a generic skew-symmetric matrix
//! X of even order n-1 and a generic row Y produce the ideal generated by the
//! entries of Y·X together with the Pfaffian of X. These are Gorenstein
//! deviation-two ideals, and their generators form a d-sequence.

use devtwo_engine::error::{Error, Result};
use devtwo_engine::poly::Polynomial;
use devtwo_engine::ring::{numbered_vars, PolyRing, RingRef};

use crate::family::{ClassTag, DeviationFamily};
use crate::pfaffian::{pfaffian, SkewMatrixSpec};

/// Ring K[x_{ij}, y_i] with the (n-1)(n-2)/2 matrix variables first
/// (lexicographic by (i,j)), then y_1..y_{n-1}.
pub fn hu_ring(n: usize, charac: u64) -> Result<RingRef> {
    let m = n - 1;
    let mut vars: Vec<String> = Vec::new();
    for i in 1..=m {
        for j in (i + 1)..=m {
            vars.push(format!("x{}{}", i, j));
        }
    }
    vars.extend(numbered_vars("y", m));
    let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    PolyRing::standard(&names, charac)
}

/// The family for odd n >= 5: generators f_1..f_{n-1} are the entries of
/// Y·X in column order, f_n is the Pfaffian of X. Degrees are 2,...,2 and
/// (n-1)/2.
pub fn huneke_ulrich(n: usize, charac: u64) -> Result<DeviationFamily> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "order parameter must be odd and >= 5, got {}",
            n
        )));
    }
    let m = n - 1;
    let ring = hu_ring(n, charac)?;
    let x = SkewMatrixSpec::generic(&ring, m)?;
    let y: Vec<Polynomial> = (0..m)
        .map(|i| {
            let idx = ring.var_index(&format!("y{}", i + 1)).unwrap();
            Polynomial::var(&ring, idx)
        })
        .collect();
    let mut f: Vec<Polynomial> = Vec::with_capacity(n);
    for col in 0..m {
        let mut acc = Polynomial::zero(&ring);
        for row in 0..m {
            if x.entries[row][col].is_zero() {
                continue;
            }
            acc = acc.add(&y[row].mul(&x.entries[row][col])?)?;
        }
        f.push(acc);
    }
    f.push(pfaffian(&x)?);
    DeviationFamily::new(&ring, f, vec![], ClassTag::ClassI, format!("hu:{}", n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_or_small_orders() {
        assert!(huneke_ulrich(4, 0).is_err());
        assert!(huneke_ulrich(3, 0).is_err());
        assert!(huneke_ulrich(6, 0).is_err());
    }

    #[test]
    fn n5_shape() {
        let fam = huneke_ulrich(5, 0).unwrap();
        assert_eq!(fam.ring().nvars(), 10);
        assert_eq!(fam.n(), 5);
        let degs = fam.degrees();
        assert_eq!(degs, vec![2, 2, 2, 2, 2]);
        // the first generator is -(x12 y2 + x13 y3 + x14 y4)
        let f1 = &fam.f()[0];
        assert_eq!(f1.num_terms(), 3);
    }

    #[test]
    fn n7_pfaffian_degree() {
        let fam = huneke_ulrich(7, 0).unwrap();
        assert_eq!(fam.degrees(), vec![2, 2, 2, 2, 2, 2, 3]);
    }
}
