//! Work budgets. Long-running kernels charge one unit per S-pair reduction;
//! exceeding the limit aborts with `Error::BudgetExceeded`, never a wrong
//! answer. The counter is atomic so parallel tasks can share one budget.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_PAIR_LIMIT: u64 = 200_000;

#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
    steps: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
            steps: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn charge(&self, units: u64) -> Result<()> {
        let prev = self.used.fetch_add(units, Ordering::Relaxed);
        if prev.saturating_add(units) > self.limit {
            Err(Error::BudgetExceeded)
        } else {
            Ok(())
        }
    }

    /// Single term-reduction steps count 1/64 of a pair unit.
    pub fn charge_step(&self) -> Result<()> {
        if self.steps.fetch_add(1, Ordering::Relaxed) % 64 == 63 {
            self.charge(1)
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_PAIR_LIMIT)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceeding_limit_errors() {
        let b = Budget::new(2);
        assert!(b.charge(1).is_ok());
        assert!(b.charge(1).is_ok());
        assert_eq!(b.charge(1), Err(Error::BudgetExceeded));
        assert_eq!(b.used(), 3);
    }
}
