//! Size caps shared by every enumerating routine.

use crate::error::{Error, Result};

/// Upper bounds on the instance sizes the enumerating routines accept.
///
/// Every routine whose running time is exponential in the input checks the
/// relevant cap up front and returns [`Error::CapExceeded`] instead of
/// running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all `n!` listings or permutations are enumerated.
    pub factorial_n: usize,
    /// Largest number of digraphs a single enumeration may produce.
    pub enumeration: u64,
    /// Largest `n` for the subset/last-vertex Hamiltonian path DP.
    pub hamp_dp_n: usize,
    /// Largest `n` for backtracking Hamiltonian path counting.
    pub hamp_backtrack_n: usize,
    /// Largest `n` for simple-cycle enumeration.
    pub cycle_n: usize,
    /// Largest ground set for signed subset enumeration.
    pub subset_bits: usize,
    /// Largest number of monomial terms a single expansion routine may visit.
    pub expansion_terms: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            factorial_n: 9,
            enumeration: 1 << 24,
            hamp_dp_n: 22,
            hamp_backtrack_n: 13,
            cycle_n: 12,
            subset_bits: 24,
            expansion_terms: 1 << 26,
        }
    }
}

impl Limits {
    pub(crate) fn check_factorial(&self, what: &'static str, n: usize) -> Result<()> {
        check(what, n as u128, self.factorial_n as u128)
    }
}

pub(crate) fn check(what: &'static str, size: u128, cap: u128) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
