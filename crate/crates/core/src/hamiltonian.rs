//! Hamiltonian path ("hamp") counting, simple-cycle counting, and the
//! Redei, mod-4 and Berge congruences.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::registry::{Named, Registry};

/// Which counter produced a [`HampCount`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Dp,
    Backtracking,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Dp => "dp",
            CountMethod::Backtracking => "backtracking",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HampCount {
    pub value: BigUint,
    pub method: CountMethod,
}

/// Counts the Hamiltonian paths of a digraph. Loops never matter, and the
/// empty digraph has exactly one hamp (the empty list).
pub trait HampCounter: Named + Send + Sync {
    fn method(&self) -> CountMethod;

    fn count(&self, d: &Digraph, limits: &Limits) -> Result<HampCount>;
}

/// Bitmask DP over (visited set, last vertex) states.
pub struct DpCounter;

impl Named for DpCounter {
    fn name(&self) -> &'static str {
        "dp"
    }

    fn summary(&self) -> &'static str {
        "subset/last-vertex dynamic program, O(2^n n^2)"
    }
}

impl HampCounter for DpCounter {
    fn method(&self) -> CountMethod {
        CountMethod::Dp
    }

    fn count(&self, d: &Digraph, limits: &Limits) -> Result<HampCount> {
        let n = d.n();
        limits::check("hamp DP", n as u128, limits.hamp_dp_n as u128)?;
        let value = if n == 0 {
            1u128
        } else {
            let full = (1usize << n) - 1;
            // ways[mask * n + v]: paths visiting exactly `mask`, ending at `v`
            let mut ways = vec![0u128; (full + 1) * n];
            for v in 0..n {
                ways[(1 << v) * n + v] = 1;
            }
            for mask in 1..=full {
                for v in 0..n {
                    let here = ways[mask * n + v];
                    if here == 0 {
                        continue;
                    }
                    let mut next = d.out_mask(v) as usize & !mask & full;
                    while next != 0 {
                        let w = next.trailing_zeros() as usize;
                        next &= next - 1;
                        ways[(mask | 1 << w) * n + w] += here;
                    }
                }
            }
            ways[full * n..].iter().sum()
        };
        Ok(HampCount {
            value: BigUint::from(value),
            method: CountMethod::Dp,
        })
    }
}

/// Depth-first extension of partial paths.
pub struct BacktrackCounter;

impl Named for BacktrackCounter {
    fn name(&self) -> &'static str {
        "backtracking"
    }

    fn summary(&self) -> &'static str {
        "depth-first search over partial paths"
    }
}

impl HampCounter for BacktrackCounter {
    fn method(&self) -> CountMethod {
        CountMethod::Backtracking
    }

    fn count(&self, d: &Digraph, limits: &Limits) -> Result<HampCount> {
        let n = d.n();
        limits::check("hamp backtracking", n as u128, limits.hamp_backtrack_n as u128)?;
        fn extend(d: &Digraph, last: usize, visited: u64, depth: usize) -> u128 {
            if depth == d.n() {
                return 1;
            }
            (0..d.n())
                .filter(|&w| visited >> w & 1 == 0 && d.has_arc(last, w))
                .map(|w| extend(d, w, visited | 1 << w, depth + 1))
                .sum()
        }
        let value = if n == 0 {
            1
        } else {
            (0..n).map(|v| extend(d, v, 1 << v, 1)).sum()
        };
        Ok(HampCount {
            value: BigUint::from(value),
            method: CountMethod::Backtracking,
        })
    }
}

pub type CounterRegistry = Registry<dyn HampCounter>;

impl Default for CounterRegistry {
    fn default() -> Self {
        let mut r: CounterRegistry = Registry::new("hamp counter");
        r.register(Arc::new(DpCounter)).unwrap();
        r.register(Arc::new(BacktrackCounter)).unwrap();
        r
    }
}

/// Hamp count by the DP.
pub fn count_hamps(d: &Digraph, limits: &Limits) -> Result<BigUint> {
    DpCounter.count(d, limits).map(|c| c.value)
}

/// `counts[k]` is the number of `D`-cycles (rotation classes) of length `k`.
///
/// Each class is counted once, from its minimal vertex: for every start `s`
/// a DP over subsets of the vertices above `s` counts the paths out of `s`,
/// and a path closes into a cycle when its last vertex has an arc back to `s`.
pub fn count_cycles_by_length(d: &Digraph, limits: &Limits) -> Result<Vec<u128>> {
    let n = d.n();
    limits::check("cycle enumeration", n as u128, limits.cycle_n as u128)?;
    let mut counts = vec![0u128; n + 1];
    for s in 0..n {
        let above = n - s - 1;
        // vertex s + 1 + i is bit i; mask 0 means the path is just (s)
        let states = 1usize << above;
        let mut ways = vec![0u128; states * (above + 1)];
        // slot 0 = path currently ends at s, slot i+1 = ends at s+1+i
        ways[0] = 1;
        for mask in 0..states {
            for slot in 0..=above {
                let here = ways[mask * (above + 1) + slot];
                if here == 0 {
                    continue;
                }
                let last = if slot == 0 { s } else { s + slot };
                if d.has_arc(last, s) {
                    counts[mask.count_ones() as usize + 1] += here;
                }
                for i in 0..above {
                    if mask >> i & 1 == 0 && d.has_arc(last, s + 1 + i) {
                        ways[(mask | 1 << i) * (above + 1) + i + 1] += here;
                    }
                }
            }
        }
    }
    Ok(counts)
}

/// `D`-cycles of odd length greater than 1.
pub fn count_nontrivial_odd_cycles(d: &Digraph, limits: &Limits) -> Result<u128> {
    let counts = count_cycles_by_length(d, limits)?;
    Ok(counts
        .iter()
        .enumerate()
        .filter(|&(k, _)| k > 1 && k % 2 == 1)
        .map(|(_, c)| c)
        .sum())
}

fn mod_small(x: &BigUint, m: u32) -> u32 {
    (x % m).to_u32().expect("small remainder")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RedeiReport {
    pub theorem: &'static str,
    pub n: usize,
    pub hamps: String,
    pub parity: u32,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mod4Report {
    pub theorem: &'static str,
    pub n: usize,
    pub hamps: String,
    pub odd_cycles: u128,
    pub lhs_mod4: u32,
    pub rhs_mod4: u32,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BergeReport {
    pub theorem: &'static str,
    pub n: usize,
    pub hamps: String,
    pub hamps_complement: String,
    pub lhs_mod2: u32,
    pub rhs_mod2: u32,
    pub pass: bool,
}

/// A tournament has an odd number of hamps.
pub fn verify_redei(d: &Digraph, limits: &Limits) -> Result<RedeiReport> {
    if !d.is_tournament() {
        return Err(Error::NotATournament);
    }
    let hamps = count_hamps(d, limits)?;
    let parity = mod_small(&hamps, 2);
    Ok(RedeiReport {
        theorem: "redei",
        n: d.n(),
        hamps: hamps.to_string(),
        parity,
        pass: parity == 1,
    })
}

/// Hamps of a tournament are `1 + 2 * (nontrivial odd cycles)` mod 4.
pub fn verify_mod4(d: &Digraph, limits: &Limits) -> Result<Mod4Report> {
    if !d.is_tournament() {
        return Err(Error::NotATournament);
    }
    let hamps = count_hamps(d, limits)?;
    let odd_cycles = count_nontrivial_odd_cycles(d, limits)?;
    let lhs = mod_small(&hamps, 4);
    let rhs = ((1 + 2 * (odd_cycles % 4)) % 4) as u32;
    Ok(Mod4Report {
        theorem: "mod4",
        n: d.n(),
        hamps: hamps.to_string(),
        odd_cycles,
        lhs_mod4: lhs,
        rhs_mod4: rhs,
        pass: lhs == rhs,
    })
}

/// A digraph and its complement have hamp counts of equal parity.
pub fn verify_berge(d: &Digraph, limits: &Limits) -> Result<BergeReport> {
    let hamps = count_hamps(d, limits)?;
    let hamps_bar = count_hamps(&d.complement(), limits)?;
    let (lhs, rhs) = (mod_small(&hamps_bar, 2), mod_small(&hamps, 2));
    Ok(BergeReport {
        theorem: "berge",
        n: d.n(),
        hamps: hamps.to_string(),
        hamps_complement: hamps_bar.to_string(),
        lhs_mod2: lhs,
        rhs_mod2: rhs,
        pass: lhs == rhs,
    })
}
