//! Dense polynomial matrices (row-major) with the few operations the
//! complex machinery needs, plus a symbolic determinant used as the oracle
//! for Pfaffian identities.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingRef;

pub type PolyMatrix = Vec<Vec<Polynomial>>;

pub fn zeros(ring: &RingRef, rows: usize, cols: usize) -> PolyMatrix {
    vec![vec![Polynomial::zero(ring); cols]; rows]
}

pub fn identity(ring: &RingRef, n: usize) -> PolyMatrix {
    let mut m = zeros(ring, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Polynomial::one(ring);
    }
    m
}

pub fn shape(m: &PolyMatrix) -> (usize, usize) {
    (m.len(), m.first().map_or(0, |r| r.len()))
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix, ring: &RingRef) -> Result<PolyMatrix> {
    let (ar, ac) = shape(a);
    let (br, bc) = shape(b);
    if ac != br {
        return Err(Error::InvalidParameter(format!(
            "matrix shapes {}x{} and {}x{} do not compose",
            ar, ac, br, bc
        )));
    }
    let mut out = zeros(ring, ar, bc);
    for i in 0..ar {
        for j in 0..bc {
            let mut acc = Polynomial::zero(ring);
            for k in 0..ac {
                if a[i][k].is_zero() || b[k][j].is_zero() {
                    continue;
                }
                acc = acc.add(&a[i][k].mul(&b[k][j])?)?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

pub fn is_zero_matrix(m: &PolyMatrix) -> bool {
    m.iter().flatten().all(|e| e.is_zero())
}

/// Symbolic determinant by Laplace expansion along the first remaining row,
/// memoizing on the column subset. Exponential, intended for small orders.
pub fn determinant(m: &PolyMatrix, ring: &RingRef) -> Result<Polynomial> {
    let (r, c) = shape(m);
    if r != c {
        return Err(Error::InvalidParameter("determinant of non-square matrix".into()));
    }
    if r == 0 {
        return Ok(Polynomial::one(ring));
    }
    if r > 16 {
        return Err(Error::InvalidParameter("determinant order above 16".into()));
    }
    let mut memo: std::collections::HashMap<u32, Polynomial> = std::collections::HashMap::new();
    fn go(
        m: &PolyMatrix,
        ring: &RingRef,
        row: usize,
        cols: u32,
        memo: &mut std::collections::HashMap<u32, Polynomial>,
    ) -> Result<Polynomial> {
        if cols == 0 {
            return Ok(Polynomial::one(ring));
        }
        if let Some(p) = memo.get(&cols) {
            return Ok(p.clone());
        }
        let mut acc = Polynomial::zero(ring);
        let mut sign_pos = true;
        let mut bits = cols;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if !m[row][j].is_zero() {
                let sub = go(m, ring, row + 1, cols & !(1 << j), memo)?;
                let term = m[row][j].mul(&sub)?;
                acc = if sign_pos {
                    acc.add(&term)?
                } else {
                    acc.sub(&term)?
                };
            }
            sign_pos = !sign_pos;
        }
        memo.insert(cols, acc.clone());
        Ok(acc)
    }
    go(m, ring, 0, (1u32 << r) - 1, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::poly_parse;
    use crate::ring::PolyRing;

    #[test]
    fn two_by_two_determinant() {
        let r = PolyRing::standard(&["a", "b", "c", "d"], 0).unwrap();
        let m = vec![
            vec![poly_parse(&r, "a").unwrap(), poly_parse(&r, "b").unwrap()],
            vec![poly_parse(&r, "c").unwrap(), poly_parse(&r, "d").unwrap()],
        ];
        let det = determinant(&m, &r).unwrap();
        assert_eq!(det, poly_parse(&r, "a*d - b*c").unwrap());
    }

    #[test]
    fn matrix_multiplication_shapes() {
        let r = PolyRing::standard(&["x"], 0).unwrap();
        let a = identity(&r, 2);
        let b = vec![
            vec![poly_parse(&r, "x").unwrap()],
            vec![poly_parse(&r, "x^2").unwrap()],
        ];
        let ab = mat_mul(&a, &b, &r).unwrap();
        assert_eq!(ab, b);
        assert!(mat_mul(&b, &a, &r).is_err());
    }
}
