//! Digraphs on `0..n` with loops allowed, plus instance generators.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::CycleClass;
use crate::error::{Error, Result};
use crate::limits::{self, Limits};

/// A digraph `(V, A)` with `V = {0, ..., n-1}` and `A ⊆ V × V`.
///
/// Row `u` of the arc matrix is stored as a bitmask of out-neighbours.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub const MAX_VERTICES: usize = 64;

    /// The arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= Self::MAX_VERTICES, "at most 64 vertices");
        Digraph { n, out: vec![0; n] }
    }

    /// Every pair, loops included.
    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    /// Every pair of distinct vertices.
    pub fn complete_loopless(n: usize) -> Self {
        let mut d = Self::complete(n);
        for v in 0..n {
            d.remove_arc(v, v);
        }
        d
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > Self::MAX_VERTICES {
            return Err(Error::Invalid(format!(
                "at most {} vertices supported, got {n}",
                Self::MAX_VERTICES
            )));
        }
        let mut d = Self::empty(n);
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            d.add_arc(u, v);
        }
        Ok(d)
    }

    /// Relabels 1-based arcs on `{1, ..., n}` to `0..n`.
    pub fn from_one_based(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let shifted = arcs.iter().map(|&(u, v)| {
            (
                u.checked_sub(1).unwrap_or(usize::MAX),
                v.checked_sub(1).unwrap_or(usize::MAX),
            )
        });
        Self::from_arcs(n, shifted)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u] &= !(1 << v);
    }

    /// Bitmask of the out-neighbours of `u`.
    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).filter(move |&v| self.has_arc(u, v)).map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    fn full_row(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// `(V, (V × V) \ A)`, loops included.
    pub fn complement(&self) -> Digraph {
        let full = self.full_row();
        Digraph {
            n: self.n,
            out: self.out.iter().map(|r| !r & full).collect(),
        }
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.has_arc(v, v))
    }

    pub fn is_tournament(&self) -> bool {
        !self.has_loops() && (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_arc(u, v) != self.has_arc(v, u)))
    }

    pub fn is_two_cycle_free(&self) -> bool {
        self.two_cycle().is_none()
    }

    /// Some pair `u < v` with both `(u,v)` and `(v,u)` arcs.
    pub fn two_cycle(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| self.has_arc(u, v) && self.has_arc(v, u))
    }

    /// A nonempty tuple of distinct vertices whose consecutive pairs are arcs.
    pub fn is_d_path(&self, path: &[usize]) -> bool {
        if path.is_empty() || path.iter().any(|&v| v >= self.n) {
            return false;
        }
        let mut seen = 0u64;
        for &v in path {
            if seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        path.windows(2).all(|w| self.has_arc(w[0], w[1]))
    }

    /// Every cyclic arc of the class is an arc; a singleton needs its loop.
    pub fn is_d_cycle(&self, gamma: &CycleClass) -> bool {
        gamma
            .cyclic_arcs()
            .all(|(u, v)| u < self.n && v < self.n && self.has_arc(u, v))
    }

    /// The subdigraph induced on `vertices` (listed in increasing order),
    /// relabelled to `0..vertices.len()` in that order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut d = Digraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_arc(u, v) {
                    d.add_arc(i, j);
                }
            }
        }
        d
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.n)?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::edgelist::format_digraph(self))
    }
}

/// Which digraphs an [`Enumeration`] ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Digraphs { loops: bool },
    Tournaments,
}

/// Exhaustive, duplicate-free enumeration of a family on `n` vertices.
///
/// Instance `k` reads `k` as a binary numeral over the free cells of the arc
/// matrix in row-major order, most significant bit first. For tournaments
/// the free cells are the pairs `u < v`, and a set bit means `u -> v`.
#[derive(Debug, Clone)]
pub struct Enumeration {
    n: usize,
    family: Family,
    cells: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Enumeration {
    pub fn new(n: usize, family: Family, limits: &Limits) -> Result<Self> {
        let cells: Vec<(usize, usize)> = match family {
            Family::Digraphs { loops } => (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| loops || u != v)
                .collect(),
            Family::Tournaments => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        };
        let bits = cells.len() as u32;
        let total = if bits >= 127 { u128::MAX } else { 1u128 << bits };
        limits::check("digraph enumeration", total, limits.enumeration as u128)?;
        Ok(Enumeration {
            n,
            family,
            cells,
            next: 0,
            total: total as u64,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of instances in the whole enumeration.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Instance number `index`, independent of iteration state.
    pub fn instance(&self, index: u64) -> Digraph {
        debug_assert!(index < self.total);
        let bits = self.cells.len();
        let mut d = Digraph::empty(self.n);
        for (i, &(u, v)) in self.cells.iter().enumerate() {
            let set = index >> (bits - 1 - i) & 1 == 1;
            match (self.family, set) {
                (Family::Digraphs { .. }, true) => d.add_arc(u, v),
                (Family::Digraphs { .. }, false) => {}
                (Family::Tournaments, true) => d.add_arc(u, v),
                (Family::Tournaments, false) => d.add_arc(v, u),
            }
        }
        d
    }
}

impl Iterator for Enumeration {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= self.total {
            return None;
        }
        let d = self.instance(self.next);
        self.next += 1;
        Some(d)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_digraphs(n: usize, loops: bool, limits: &Limits) -> Result<Enumeration> {
    Enumeration::new(n, Family::Digraphs { loops }, limits)
}

pub fn enumerate_tournaments(n: usize, limits: &Limits) -> Result<Enumeration> {
    Enumeration::new(n, Family::Tournaments, limits)
}

/// Each of the `n²` pairs (loops included) is an arc independently with
/// probability `arc_probability`.
pub fn random_digraph(n: usize, arc_probability: f64, seed: u64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&arc_probability) {
        return Err(Error::Invalid(format!(
            "arc probability {arc_probability} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_digraph_with(&mut rng, n, arc_probability, true))
}

pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    random_tournament_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

pub fn random_digraph_with<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64, loops: bool) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if (loops || u != v) && rng.gen_bool(p) {
                d.add_arc(u, v);
            }
        }
    }
    d
}

pub fn random_tournament_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                d.add_arc(u, v);
            } else {
                d.add_arc(v, u);
            }
        }
    }
    d
}

/// Random digraph without 2-cycles: each pair `u < v` is unjoined, `u -> v`
/// or `v -> u` with equal probability; each loop is present with
/// probability 1/2.
pub fn random_two_cycle_free_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Digraph {
    let mut d = Digraph::empty(n);
    for u in 0..n {
        if rng.gen_bool(0.5) {
            d.add_arc(u, u);
        }
        for v in u + 1..n {
            match rng.gen_range(0..3) {
                0 => {}
                1 => d.add_arc(u, v),
                _ => d.add_arc(v, u),
            }
        }
    }
    d
}
