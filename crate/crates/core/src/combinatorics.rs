//! Compositions, partitions, cut-point subsets, permutations and the
//! rotation classes that index everything else in the crate.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// An ordered list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::BadComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

/// A weakly decreasing list of positive integers. The empty partition is
/// the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::BadPartition(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union of the parts (the index of `p_self * p_other`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// All partitions of `n`, largest first in reverse-lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for part in (1..=max.min(rest)).rev() {
                cur.push(part);
                rec(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// A subset of `{1, ..., n-1}`, the cut points of a composition of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrefixSubset {
    n: usize,
    /// Bit `i` set iff `i` is a member.
    mask: u64,
}

impl PrefixSubset {
    pub const MAX_N: usize = 63;

    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n > Self::MAX_N {
            return Err(Error::Invalid(format!(
                "prefix subsets support n <= {}, got {n}",
                Self::MAX_N
            )));
        }
        let mut mask = 0u64;
        for m in members {
            if m == 0 || m >= n.max(1) {
                return Err(Error::BadSubsetMember {
                    member: m,
                    max: n.saturating_sub(1),
                });
            }
            mask |= 1 << m;
        }
        Ok(PrefixSubset { n, mask })
    }

    pub fn empty(n: usize) -> Self {
        PrefixSubset { n, mask: 0 }
    }

    /// The whole of `{1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mask = if n <= 1 { 0 } else { ((1u64 << n) - 1) & !1 };
        PrefixSubset { n, mask }
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert_eq!(mask & !Self::full(n).mask, 0);
        PrefixSubset { n, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.mask >> i & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |&i| self.contains(i))
    }

    /// Every subset of `{1, ..., n-1}`, in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = PrefixSubset> {
        let full = PrefixSubset::full(n).mask;
        (0..=full >> 1).map(move |m| PrefixSubset { n, mask: m << 1 })
    }
}

impl fmt::Display for PrefixSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members().join(","))
    }
}

/// Consecutive differences of `{0} ∪ I ∪ {n}`.
pub fn comp_of_subset(subset: &PrefixSubset) -> Composition {
    if subset.n == 0 {
        return Composition(Vec::new());
    }
    let mut parts = Vec::with_capacity(subset.len() + 1);
    let mut last = 0;
    for cut in subset.members().chain(std::iter::once(subset.n)) {
        parts.push(cut - last);
        last = cut;
    }
    Composition(parts)
}

/// Partial sums of `alpha`, excluding the total.
pub fn subset_of_comp(alpha: &Composition) -> PrefixSubset {
    let n = alpha.size();
    let mut mask = 0u64;
    let mut acc = 0;
    for &part in alpha.parts().iter().take(alpha.parts().len().saturating_sub(1)) {
        acc += part;
        mask |= 1 << acc;
    }
    PrefixSubset::from_mask(n, mask)
}

/// A rotation-equivalence class of tuples of distinct vertices, stored by
/// its representative rotated so the minimal vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleClass(Vec<usize>);

impl CycleClass {
    /// Canonicalizes any rotation of the class. The tuple must be nonempty
    /// with distinct entries.
    pub fn new(mut tuple: Vec<usize>) -> Result<Self> {
        if tuple.is_empty() || !tuple.iter().all_unique() {
            return Err(Error::Invalid(format!(
                "cycle tuple must be nonempty with distinct entries: {tuple:?}"
            )));
        }
        let pos = tuple.iter().position_min().expect("nonempty");
        tuple.rotate_left(pos);
        Ok(CycleClass(tuple))
    }

    pub(crate) fn from_canonical(tuple: Vec<usize>) -> Self {
        debug_assert!(tuple.iter().position_min() == Some(0));
        CycleClass(tuple)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// The length `ℓ(γ)` of the class.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn reversed(&self) -> CycleClass {
        let mut rev = self.0.clone();
        rev.reverse();
        // min stays first after reversing everything past it
        rev.rotate_right(1);
        CycleClass(rev)
    }

    /// The cyclic arcs `(γ_1,γ_2), ..., (γ_k,γ_1)`.
    pub fn cyclic_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})~", self.0.iter().join(","))
    }
}

pub fn reverse_class(gamma: &CycleClass) -> CycleClass {
    gamma.reversed()
}

/// A permutation of `0..n` together with its cycle decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationView {
    images: Vec<usize>,
    cycles: Vec<CycleClass>,
}

impl PermutationView {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(images));
            }
        }
        Ok(Self::from_valid(images))
    }

    pub(crate) fn from_valid(images: Vec<usize>) -> Self {
        let cycles = decompose(&images);
        PermutationView { images, cycles }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_valid((0..n).collect())
    }

    /// Builds the permutation on `0..n` with the given disjoint cycles;
    /// unmentioned vertices are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Invalid(format!("vertex {v} in two cycles")));
                }
                images[v] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self::from_valid(images))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn inverse(&self) -> PermutationView {
        let mut inv = vec![0; self.images.len()];
        for (v, &w) in self.images.iter().enumerate() {
            inv[w] = v;
        }
        Self::from_valid(inv)
    }

    /// Cycles ordered by their minimal vertex.
    pub fn cycles(&self) -> &[CycleClass] {
        &self.cycles
    }

    pub fn cycle_type(&self) -> Partition {
        let lengths = self.cycles.iter().map(CycleClass::len).collect();
        Partition::new(lengths).expect("cycle lengths are positive")
    }

    /// Number of cycles of length greater than 1.
    pub fn nontrivial_cycle_count(&self) -> usize {
        self.cycles.iter().filter(|c| !c.is_trivial()).count()
    }
}

fn decompose(images: &[usize]) -> Vec<CycleClass> {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut tuple = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            tuple.push(v);
            v = images[v];
        }
        // `start` is the least unvisited vertex, so it is the minimum of its orbit.
        cycles.push(CycleClass::from_canonical(tuple));
    }
    cycles
}

pub fn cycles_of(sigma: &PermutationView) -> Vec<CycleClass> {
    sigma.cycles().to_vec()
}

pub fn cycle_type(sigma: &PermutationView) -> Partition {
    sigma.cycle_type()
}

/// All `n!` permutations of `0..n` (as image vectors) in lexicographic order.
pub fn permutations(n: usize) -> Box<dyn Iterator<Item = Vec<usize>> + Send> {
    if n == 0 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new((0..n).permutations(n))
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
