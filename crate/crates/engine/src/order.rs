//! Monomial orders: degree-reverse-lexicographic refined by variable index,
//! and block (product) orders built from degrevlex blocks. A block order with
//! the eliminated variables in the leading block is an elimination order.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Order {
    /// Total degree, ties broken reverse-lexicographically (the monomial with
    /// the negative last nonzero exponent difference is larger).
    GrevLex,
    /// Product order over a partition of the variable indices: earlier blocks
    /// dominate, degrevlex within each block.
    Block(Vec<Vec<usize>>),
}

impl Order {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            Order::GrevLex => grevlex_all(a, b),
            Order::Block(blocks) => {
                for block in blocks {
                    let o = grevlex_restricted(a, b, block);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn tag(&self) -> String {
        match self {
            Order::GrevLex => "degrevlex".to_string(),
            Order::Block(blocks) => {
                let parts: Vec<String> = blocks
                    .iter()
                    .map(|b| {
                        b.iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                format!("block[{}]", parts.join("|"))
            }
        }
    }

    /// Checks that `Block` variants partition `0..nvars`.
    pub fn valid_for(&self, nvars: usize) -> bool {
        match self {
            Order::GrevLex => true,
            Order::Block(blocks) => {
                let mut seen = vec![false; nvars];
                for &i in blocks.iter().flatten() {
                    if i >= nvars || seen[i] {
                        return false;
                    }
                    seen[i] = true;
                }
                seen.into_iter().all(|s| s)
            }
        }
    }
}

fn grevlex_all(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.nvars()).rev() {
        let (ea, eb) = (a.exp(i), b.exp(i));
        if ea != eb {
            // smaller exponent in the last differing variable wins
            return if ea < eb { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

fn grevlex_restricted(a: &Monomial, b: &Monomial, block: &[usize]) -> Ordering {
    let da: u32 = block.iter().map(|&i| a.exp(i) as u32).sum();
    let db: u32 = block.iter().map(|&i| b.exp(i) as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &i in block.iter().rev() {
        let (ea, eb) = (a.exp(i), b.exp(i));
        if ea != eb {
            return if ea < eb { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn grevlex_textbook_comparison() {
        // x1*x2^2 vs x1^2*x2 under degrevlex with x1 > x2
        let a = m(&[1, 2]);
        let b = m(&[2, 1]);
        assert_eq!(Order::GrevLex.cmp(&b, &a), Ordering::Greater);
    }

    #[test]
    fn grevlex_degree_dominates() {
        assert_eq!(Order::GrevLex.cmp(&m(&[3, 0]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        // variables [t, x, y]; block {t} dominates
        let order = Order::Block(vec![vec![0], vec![1, 2]]);
        // t > x^5
        assert_eq!(order.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])), Ordering::Greater);
        // within the second block, degrevlex
        assert_eq!(order.cmp(&m(&[0, 2, 1]), &m(&[0, 1, 2])), Ordering::Greater);
        assert!(order.valid_for(3));
        assert!(!order.valid_for(4));
    }

    #[test]
    fn orders_are_multiplicative_on_samples() {
        let order = Order::GrevLex;
        let ms = [m(&[0, 0]), m(&[1, 0]), m(&[0, 1]), m(&[2, 1]), m(&[1, 2])];
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    let ab = a.mul(c).unwrap();
                    let bb = b.mul(c).unwrap();
                    assert_eq!(order.cmp(a, b), order.cmp(&ab, &bb));
                }
            }
        }
    }
}
