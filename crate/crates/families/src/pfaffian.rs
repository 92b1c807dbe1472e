//! Pfaffians of symbolic skew-symmetric matrices by first-row expansion.

use std::collections::HashMap;

use devtwo_engine::error::{Error, Result};
use devtwo_engine::matrix::PolyMatrix;
use devtwo_engine::poly::Polynomial;
use devtwo_engine::ring::RingRef;

/// A generic skew-symmetric matrix: entries x_{ij} above the diagonal,
/// -x_{ij} below, zeros on it, over a ring that contains those variables.
#[derive(Clone, Debug)]
pub struct SkewMatrixSpec {
    pub order: usize,
    pub ring: RingRef,
    pub entries: PolyMatrix,
}

impl SkewMatrixSpec {
    /// Builds from the ring produced by `hu::hu_ring` (variables x_{ij} come
    /// first, ordered lexicographically by (i, j)).
    pub fn generic(ring: &RingRef, order: usize) -> Result<SkewMatrixSpec> {
        let mut entries = devtwo_engine::matrix::zeros(ring, order, order);
        for i in 0..order {
            for j in (i + 1)..order {
                let name = format!("x{}{}", i + 1, j + 1);
                let idx = ring
                    .var_index(&name)
                    .ok_or_else(|| Error::UnknownVariable(name))?;
                let v = Polynomial::var(ring, idx);
                entries[i][j] = v.clone();
                entries[j][i] = v.neg();
            }
        }
        Ok(SkewMatrixSpec {
            order,
            ring: ring.clone(),
            entries,
        })
    }
}

/// Pfaffian via recursive expansion along the first remaining row with
/// alternating signs; pf(X)^2 = det(X).
pub fn pfaffian(x: &SkewMatrixSpec) -> Result<Polynomial> {
    if x.order % 2 != 0 {
        return Err(Error::OddPfaffianOrder(x.order));
    }
    let all: Vec<usize> = (0..x.order).collect();
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    pf_rec(&x.entries, &x.ring, &all, &mut memo)
}

fn pf_rec(
    m: &PolyMatrix,
    ring: &RingRef,
    rows: &[usize],
    memo: &mut HashMap<u64, Polynomial>,
) -> Result<Polynomial> {
    if rows.is_empty() {
        return Ok(Polynomial::one(ring));
    }
    let key: u64 = rows.iter().fold(0u64, |acc, &r| acc | (1 << r));
    if let Some(p) = memo.get(&key) {
        return Ok(p.clone());
    }
    let first = rows[0];
    let mut acc = Polynomial::zero(ring);
    // expansion: pf = sum over position j >= 2 of (-1)^j x[first][rows[j-1]] pf(rest)
    for pos in 1..rows.len() {
        let other = rows[pos];
        if m[first][other].is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows
            .iter()
            .copied()
            .filter(|&r| r != first && r != other)
            .collect();
        let sub = pf_rec(m, ring, &rest, memo)?;
        let term = m[first][other].mul(&sub)?;
        // pos is 1-based position minus one; position j = pos+1 has sign (-1)^j
        acc = if (pos + 1) % 2 == 0 {
            acc.add(&term)?
        } else {
            acc.sub(&term)?
        };
    }
    memo.insert(key, acc.clone());
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use devtwo_engine::matrix::determinant;
    use devtwo_engine::parse::poly_parse;
    use devtwo_engine::ring::PolyRing;

    fn skew_ring(order: usize) -> RingRef {
        let mut vars = Vec::new();
        for i in 1..=order {
            for j in (i + 1)..=order {
                vars.push(format!("x{}{}", i, j));
            }
        }
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        PolyRing::standard(&names, 0).unwrap()
    }

    #[test]
    fn order_two() {
        let r = skew_ring(2);
        let x = SkewMatrixSpec::generic(&r, 2).unwrap();
        assert_eq!(pfaffian(&x).unwrap(), poly_parse(&r, "x12").unwrap());
    }

    #[test]
    fn order_four_closed_form() {
        let r = skew_ring(4);
        let x = SkewMatrixSpec::generic(&r, 4).unwrap();
        let pf = pfaffian(&x).unwrap();
        let expect = poly_parse(&r, "x12*x34 - x13*x24 + x14*x23").unwrap();
        assert_eq!(pf, expect);
        // independent oracle: pf^2 = det
        let det = determinant(&x.entries, &r).unwrap();
        assert_eq!(pf.mul(&pf).unwrap(), det);
    }

    #[test]
    fn order_six_against_determinant() {
        let r = skew_ring(6);
        let x = SkewMatrixSpec::generic(&r, 6).unwrap();
        let pf = pfaffian(&x).unwrap();
        assert_eq!(pf.num_terms(), 15);
        let det = determinant(&x.entries, &r).unwrap();
        assert_eq!(pf.mul(&pf).unwrap(), det);
    }

    #[test]
    fn odd_order_rejected() {
        let r = skew_ring(3);
        let x = SkewMatrixSpec::generic(&r, 3).unwrap();
        assert!(matches!(pfaffian(&x), Err(Error::OddPfaffianOrder(3))));
    }
}
