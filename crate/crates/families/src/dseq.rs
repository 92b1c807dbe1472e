//! Regular-sequence and d-sequence checkers. A sequence a_1..a_n is a
//! d-sequence when no a_i lies in the ideal of the others and the colon
//! identities (I_{i-1} : a_i a_k) = (I_{i-1} : a_k) hold for all i <= k <= n,
//! where I_{i-1} = <a_1..a_{i-1}>.

use devtwo_engine::budget::Budget;
use devtwo_engine::error::{Error, Result};
use devtwo_engine::ideal::{colon_elem, ideal_eq, membership, Ideal};
use devtwo_engine::par::{map_batch, Parallelism};
use devtwo_engine::poly::Polynomial;

pub fn is_regular_sequence(seq: &[Polynomial], budget: &Budget) -> Result<bool> {
    if seq.is_empty() {
        return Ok(true);
    }
    let ring = seq[0].ring().clone();
    for a in seq {
        if a.is_zero() {
            return Err(Error::ZeroDivision);
        }
    }
    // the ideal must stay proper
    let whole = Ideal::new(&ring, seq.to_vec())?;
    if membership(&Polynomial::one(&ring), &whole, budget)? {
        return Ok(false);
    }
    for i in 0..seq.len() {
        let prev = Ideal::new(&ring, seq[..i].to_vec())?;
        let colon = colon_elem(&prev, &seq[i], budget)?;
        if !ideal_eq(&colon, &prev, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both d-sequence conditions. The colon-identity grid is embarrassingly
/// parallel; cells run under the given mode.
pub fn is_d_sequence_with(
    seq: &[Polynomial],
    budget: &Budget,
    mode: Parallelism,
) -> Result<bool> {
    if seq.is_empty() {
        return Ok(true);
    }
    let ring = seq[0].ring().clone();
    let n = seq.len();
    // (a) minimality: a_i not in the ideal of the others
    for i in 0..n {
        let others: Vec<Polynomial> = seq
            .iter()
            .enumerate()
            .filter_map(|(j, a)| if j != i { Some(a.clone()) } else { None })
            .collect();
        let ideal = Ideal::new(&ring, others)?;
        if membership(&seq[i], &ideal, budget)? {
            return Ok(false);
        }
    }
    // (b) colon identities over the (i, k) grid
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 1..=n {
        for k in i..=n {
            cells.push((i, k));
        }
    }
    let seq_owned = seq.to_vec();
    let results = map_batch(mode, cells, move |(i, k)| -> Result<bool> {
        let prev = Ideal::new(&ring, seq_owned[..i - 1].to_vec())?;
        let ai_ak = seq_owned[i - 1].mul(&seq_owned[k - 1])?;
        let lhs = colon_elem(&prev, &ai_ak, budget)?;
        let rhs = colon_elem(&prev, &seq_owned[k - 1], budget)?;
        ideal_eq(&lhs, &rhs, budget)
    });
    for r in results {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_d_sequence(seq: &[Polynomial], budget: &Budget) -> Result<bool> {
    is_d_sequence_with(seq, budget, Parallelism::available())
}

#[cfg(test)]
mod tests {
    use super::*;
    use devtwo_engine::parse::poly_parse;
    use devtwo_engine::ring::PolyRing;

    #[test]
    fn variables_form_a_regular_sequence() {
        let r = PolyRing::standard(&["x", "y", "z"], 0).unwrap();
        let b = Budget::unlimited();
        let seq: Vec<Polynomial> = ["x", "y", "z"]
            .iter()
            .map(|t| poly_parse(&r, t).unwrap())
            .collect();
        assert!(is_regular_sequence(&seq, &b).unwrap());
        assert!(is_d_sequence(&seq, &b).unwrap());
    }

    #[test]
    fn x2_xy_is_a_d_sequence_but_not_regular() {
        // hand colon computations: (x^2 : xy·xy) = (x^2 : xy) = <x> and the
        // minimality condition holds, while (x^2):xy = <x> ≠ <x^2> breaks
        // regularity
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        let b = Budget::unlimited();
        let seq: Vec<Polynomial> = ["x^2", "x*y"]
            .iter()
            .map(|t| poly_parse(&r, t).unwrap())
            .collect();
        assert!(!is_regular_sequence(&seq, &b).unwrap());
        assert!(is_d_sequence(&seq, &b).unwrap());
    }

    #[test]
    fn improper_sequence_is_not_regular() {
        let r = PolyRing::standard(&["x"], 0).unwrap();
        let b = Budget::unlimited();
        let seq: Vec<Polynomial> = ["x", "1 - x"]
            .iter()
            .map(|t| poly_parse(&r, t).unwrap())
            .collect();
        assert!(!is_regular_sequence(&seq, &b).unwrap());
    }
}
