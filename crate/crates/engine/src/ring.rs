//! Bigraded polynomial ring descriptors. Rings are immutable values shared
//! behind `Arc`; every polynomial holds a reference to its ring.
//!
//! Variables carry bidegrees: ordinary variables have bidegree (1,0), and
//! symmetric-algebra variables have bidegree (d,1) with d >= 1. The second
//! component counts the "fiber" grading; standard graded rings simply have
//! all second components zero.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::is_prime;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::Order;

/// A bidegree or bidegree shift. Shifts may be negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Bideg(pub i64, pub i64);

impl Bideg {
    pub const ZERO: Bideg = Bideg(0, 0);

    pub fn is_zero(&self) -> bool {
        self.0 == 0 && self.1 == 0
    }

    pub fn neg(&self) -> Bideg {
        Bideg(-self.0, -self.1)
    }

    pub fn add(&self, other: Bideg) -> Bideg {
        Bideg(self.0 + other.0, self.1 + other.1)
    }

    pub fn sub(&self, other: Bideg) -> Bideg {
        Bideg(self.0 - other.0, self.1 - other.1)
    }

    /// The x-degree, the component used for single-graded regularity.
    pub fn x(&self) -> i64 {
        self.0
    }
}

impl std::fmt::Display for Bideg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Debug)]
pub struct PolyRing {
    vars: Vec<String>,
    bidegs: Vec<Bideg>,
    order: Order,
    charac: u64,
    fingerprint: u64,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new(
        vars: Vec<String>,
        bidegs: Vec<Bideg>,
        order: Order,
        charac: u64,
    ) -> Result<RingRef> {
        if vars.len() != bidegs.len() {
            return Err(Error::InvalidParameter(
                "variable and bidegree lists differ in length".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidVariable(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        for b in &bidegs {
            let ok = (b.0 == 1 && b.1 == 0) || (b.0 >= 1 && b.1 == 1);
            if !ok {
                return Err(Error::BadBidegree((b.0, b.1)));
            }
        }
        if charac != 0 && !is_prime(charac) {
            return Err(Error::NonPrimeCharacteristic(charac));
        }
        if !order.valid_for(vars.len()) {
            return Err(Error::BadOrderBlocks);
        }
        let mut hasher = DefaultHasher::new();
        vars.hash(&mut hasher);
        bidegs.hash(&mut hasher);
        order.tag().hash(&mut hasher);
        charac.hash(&mut hasher);
        Ok(Arc::new(PolyRing {
            vars,
            bidegs,
            order,
            charac,
            fingerprint: hasher.finish(),
        }))
    }

    /// Standard graded ring: every variable of bidegree (1,0), degrevlex.
    pub fn standard(vars: &[&str], charac: u64) -> Result<RingRef> {
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            vec![Bideg(1, 0); vars.len()],
            Order::GrevLex,
            charac,
        )
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var_bidegs(&self) -> &[Bideg] {
        &self.bidegs
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn charac(&self) -> u64 {
        self.charac
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_ring(&self, other: &PolyRing) -> bool {
        self.fingerprint == other.fingerprint
    }

    pub fn mono_bidegree(&self, m: &Monomial) -> Bideg {
        let mut a = 0i64;
        let mut b = 0i64;
        for (i, &e) in m.exps().iter().enumerate() {
            a += e as i64 * self.bidegs[i].0;
            b += e as i64 * self.bidegs[i].1;
        }
        Bideg(a, b)
    }

    /// Deterministic textual record: names, bidegrees, order tag, characteristic.
    pub fn descriptor(&self) -> String {
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&self.bidegs)
            .map(|(v, b)| format!("{}:{}", v, b))
            .collect();
        format!(
            "ring{{char={}; order={}; vars=[{}]}}",
            self.charac,
            self.order.tag(),
            vars.join(", ")
        )
    }

    /// New ring with fresh variables appended (used for symmetric-algebra
    /// extensions). The appended variables are placed in a trailing degrevlex
    /// block so that eliminating them is possible with the base block intact.
    pub fn extended(
        self: &Arc<Self>,
        new_vars: Vec<String>,
        new_bidegs: Vec<Bideg>,
        order: Order,
    ) -> Result<RingRef> {
        let mut vars = self.vars.clone();
        vars.extend(new_vars);
        let mut bidegs = self.bidegs.clone();
        bidegs.extend(new_bidegs);
        PolyRing::new(vars, bidegs, order, self.charac)
    }

    /// New ring with one elimination variable prepended in its own dominant
    /// block; used by the colon/intersection t-trick.
    pub fn with_elim_var(self: &Arc<Self>, name: &str) -> Result<RingRef> {
        let mut vars = vec![name.to_string()];
        vars.extend(self.vars.clone());
        let mut bidegs = vec![Bideg(1, 0)];
        bidegs.extend(self.bidegs.clone());
        let order = Order::Block(vec![vec![0], (1..vars.len()).collect()]);
        PolyRing::new(vars, bidegs, order, self.charac)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Generates `n` numbered variable names with the given prefix.
pub fn numbered_vars(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{}{}", prefix, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_bidegrees() {
        assert!(matches!(
            PolyRing::standard(&["x", "x"], 0),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            PolyRing::new(
                vec!["x".into()],
                vec![Bideg(0, 0)],
                Order::GrevLex,
                0
            ),
            Err(Error::BadBidegree(_))
        ));
        assert!(matches!(
            PolyRing::standard(&["x"], 6),
            Err(Error::NonPrimeCharacteristic(6))
        ));
    }

    #[test]
    fn descriptor_is_deterministic() {
        let r = PolyRing::standard(&["x", "y"], 0).unwrap();
        assert_eq!(
            r.descriptor(),
            "ring{char=0; order=degrevlex; vars=[x:(1,0), y:(1,0)]}"
        );
    }

    #[test]
    fn bigraded_ring_accepts_fiber_variables() {
        let r = PolyRing::new(
            vec!["x".into(), "z1".into()],
            vec![Bideg(1, 0), Bideg(2, 1)],
            Order::GrevLex,
            0,
        )
        .unwrap();
        let m = Monomial::from_exps(&[1, 2]);
        assert_eq!(r.mono_bidegree(&m), Bideg(5, 2));
    }
}
