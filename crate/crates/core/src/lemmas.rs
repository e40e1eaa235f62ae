//! Linear arc sets, path covers and the signed sums that connect them to
//! hamp counts and power sums. Each routine evaluates its identity by
//! direct enumeration so it can serve as an oracle for the fast routes.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{factorial, permutations, PermutationView};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hamiltonian::count_hamps;
use crate::limits::{self, Limits};
use crate::poly::{MonomialPolynomial, Rational};
use crate::redei::{in_sv_d_dbar, phi};

/// A set of ordered pairs of vertices in `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcSet {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl ArcSet {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some(&(u, v)) = pairs.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        Ok(ArcSet { n, pairs })
    }

    pub fn of_digraph(d: &Digraph) -> Self {
        ArcSet {
            n: d.n(),
            pairs: d.arcs().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.contains(&(u, v))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        ArcSet {
            n: self.n,
            pairs: self.pairs.intersection(&other.pairs).copied().collect(),
        }
    }

    /// The subset picked out by the bits of `mask` (bit `i` = `i`-th pair
    /// in sorted order).
    pub fn subset(&self, mask: u64) -> ArcSet {
        ArcSet {
            n: self.n,
            pairs: self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect(),
        }
    }
}

/// A set of vertex-disjoint paths covering every vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCover {
    paths: Vec<Vec<usize>>,
}

impl PathCover {
    pub fn new(n: usize, mut paths: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for path in &paths {
            if path.is_empty() {
                return Err(Error::Invalid("path cover contains an empty path".into()));
            }
            for &v in path {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Invalid(format!("vertex {v} covered twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Invalid(format!("vertex {v} not covered")));
        }
        paths.sort();
        Ok(PathCover { paths })
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    /// Number of paths `|C|`.
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Union of the arc sets of the paths.
    pub fn arcs(&self, n: usize) -> ArcSet {
        ArcSet {
            n,
            pairs: self
                .paths
                .iter()
                .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
                .collect(),
        }
    }
}

/// In- and out-degree at most 1 everywhere and no directed cycle (a loop
/// counts as a cycle).
pub fn is_linear(f: &ArcSet) -> bool {
    let mut next = vec![None; f.n];
    let mut has_pred = vec![false; f.n];
    for (u, v) in f.pairs() {
        if next[u].is_some() || has_pred[v] {
            return false;
        }
        next[u] = Some(v);
        has_pred[v] = true;
    }
    // with all degrees <= 1, a cycle is exactly a component without a source
    let mut on_path = vec![false; f.n];
    for start in (0..f.n).filter(|&v| !has_pred[v]) {
        let mut v = Some(start);
        while let Some(w) = v {
            on_path[w] = true;
            v = next[w];
        }
    }
    on_path.iter().all(|&b| b)
}

/// The path cover whose arc set is `f`, read off the degree structure.
pub fn path_cover_of(f: &ArcSet) -> Option<PathCover> {
    if !is_linear(f) {
        return None;
    }
    let mut next = vec![None; f.n];
    let mut has_pred = vec![false; f.n];
    for (u, v) in f.pairs() {
        next[u] = Some(v);
        has_pred[v] = true;
    }
    let paths = (0..f.n)
        .filter(|&v| !has_pred[v])
        .map(|start| {
            let mut path = vec![start];
            while let Some(w) = next[*path.last().unwrap()] {
                path.push(w);
            }
            path
        })
        .collect();
    PathCover::new(f.n, paths).ok()
}

/// Searches every listing for one whose cuts at the non-`f` steps yield a
/// path cover with arc set exactly `f`.
pub fn find_path_cover_by_search(f: &ArcSet, limits: &Limits) -> Result<Option<PathCover>> {
    limits.check_factorial("path cover search", f.n)?;
    for w in permutations(f.n) {
        let mut paths: Vec<Vec<usize>> = Vec::new();
        for (i, &v) in w.iter().enumerate() {
            if i > 0 && f.contains(w[i - 1], v) {
                paths.last_mut().unwrap().push(v);
            } else {
                paths.push(vec![v]);
            }
        }
        let cover = PathCover::new(f.n, paths)?;
        if cover.arcs(f.n) == *f {
            return Ok(Some(cover));
        }
    }
    Ok(None)
}

/// `{(v, σ(v)) | v ∈ V}`.
pub fn a_sigma(sigma: &PermutationView) -> ArcSet {
    ArcSet {
        n: sigma.n(),
        pairs: sigma.images().iter().enumerate().map(|(v, &w)| (v, w)).collect(),
    }
}

/// Listings `w` with `f ⊆ Arcs w`, counted by enumeration.
pub fn count_listings_containing(f: &ArcSet, limits: &Limits) -> Result<BigUint> {
    limits.check_factorial("listing enumeration", f.n)?;
    let count = permutations(f.n)
        .filter(|w| f.pairs().all(|(u, v)| w.windows(2).any(|p| p[0] == u && p[1] == v)))
        .count();
    Ok(BigUint::from(count))
}

/// Permutations `σ` with `f ⊆ A_σ`: the bijections extending `f` viewed
/// as a partial map, `(n - |f|)!` of them when `f` is a partial injection
/// and none otherwise.
pub fn count_perms_containing(f: &ArcSet) -> BigUint {
    let mut has_image = vec![false; f.n];
    let mut has_preimage = vec![false; f.n];
    for (u, v) in f.pairs() {
        if std::mem::replace(&mut has_image[u], true) || std::mem::replace(&mut has_preimage[v], true) {
            return BigUint::zero();
        }
    }
    (1..=(f.n - f.len()) as u64).map(BigUint::from).product()
}

/// `∑_{F ⊆ A linear} (-1)^{|F|} · #{σ : F ⊆ A_σ}`.
///
/// Linear subsets are grown arc by arc with incremental degree and cycle
/// checks; a branch is abandoned as soon as it turns nonlinear, since every
/// superset of a nonlinear set is nonlinear.
pub fn signed_linear_sum(d: &Digraph, limits: &Limits) -> Result<BigInt> {
    let arcs: Vec<(usize, usize)> = d.arcs().filter(|&(u, v)| u != v).collect();
    limits::check(
        "linear subset enumeration",
        arcs.len() as u128,
        limits.subset_bits as u128,
    )?;
    let n = d.n();
    let extensions: Vec<BigInt> = (0..=n).map(|k| BigInt::from(factorial(n - k))).collect();

    struct Walk<'a> {
        arcs: &'a [(usize, usize)],
        next: Vec<Option<usize>>,
        has_pred: Vec<bool>,
        extensions: &'a [BigInt],
        total: BigInt,
    }

    impl Walk<'_> {
        fn closes_cycle(&self, u: usize, v: usize) -> bool {
            let mut w = Some(v);
            while let Some(x) = w {
                if x == u {
                    return true;
                }
                w = self.next[x];
            }
            false
        }

        fn go(&mut self, i: usize, size: usize) {
            if i == self.arcs.len() {
                if size.is_multiple_of(2) {
                    self.total += &self.extensions[size];
                } else {
                    self.total -= &self.extensions[size];
                }
                return;
            }
            self.go(i + 1, size);
            let (u, v) = self.arcs[i];
            if self.next[u].is_none() && !self.has_pred[v] && !self.closes_cycle(u, v) {
                self.next[u] = Some(v);
                self.has_pred[v] = true;
                self.go(i + 1, size + 1);
                self.next[u] = None;
                self.has_pred[v] = false;
            }
        }
    }

    let mut walk = Walk {
        arcs: &arcs,
        next: vec![None; n],
        has_pred: vec![false; n],
        extensions: &extensions,
        total: BigInt::zero(),
    };
    walk.go(0, 0);
    Ok(walk.total)
}

/// `∑_{F ⊆ A_σ ∩ A linear} (-1)^{|F|}`, by enumerating every subset.
pub fn signed_sum_per_perm(d: &Digraph, sigma: &PermutationView, limits: &Limits) -> Result<i64> {
    let ground = a_sigma(sigma).intersection(&ArcSet::of_digraph(d));
    signed_subsets(&ground, limits)
}

fn signed_subsets(ground: &ArcSet, limits: &Limits) -> Result<i64> {
    limits::check("subset enumeration", ground.len() as u128, limits.subset_bits as u128)?;
    let mut total = 0i64;
    for mask in 0u64..1 << ground.len() {
        if is_linear(&ground.subset(mask)) {
            total += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok(total)
}

/// `∑_{σ ∈ S_V(D,D̄)} (-1)^{φ(σ)}`, which counts the hamps of `D̄`.
pub fn signed_permutation_count(d: &Digraph, limits: &Limits) -> Result<BigInt> {
    limits.check_factorial("permutation enumeration", d.n())?;
    let mut total = BigInt::zero();
    for images in permutations(d.n()) {
        let sigma = PermutationView::from_valid(images);
        if in_sv_d_dbar(d, &sigma) {
            if phi(d, &sigma).is_multiple_of(2) {
                total += 1;
            } else {
                total -= 1;
            }
        }
    }
    Ok(total)
}

fn check_levels(d: &Digraph, levels: &[usize]) -> Result<()> {
    if levels.len() != d.n() {
        return Err(Error::VertexMismatch {
            left: d.n(),
            right: levels.len(),
        });
    }
    if levels.contains(&0) {
        return Err(Error::Invalid("levels must be positive integers".into()));
    }
    Ok(())
}

/// Listings with weakly increasing levels that strictly increase across
/// every step which is an arc of `D`.
pub fn count_friendly_listings(d: &Digraph, levels: &[usize], limits: &Limits) -> Result<BigUint> {
    check_levels(d, levels)?;
    limits.check_factorial("listing enumeration", d.n())?;
    let count = permutations(d.n())
        .filter(|w| {
            w.windows(2).all(|p| {
                let (a, b) = (levels[p[0]], levels[p[1]]);
                a < b || (a == b && !d.has_arc(p[0], p[1]))
            })
        })
        .count();
    Ok(BigUint::from(count))
}

/// `∏_{j ∈ f(V)}` (hamps of the complement of the level-`j` subdigraph).
pub fn friendly_product_formula(d: &Digraph, levels: &[usize], limits: &Limits) -> Result<BigUint> {
    check_levels(d, levels)?;
    let distinct: BTreeSet<usize> = levels.iter().copied().collect();
    let mut product = BigUint::one();
    for j in distinct {
        let members: Vec<usize> = (0..d.n()).filter(|&v| levels[v] == j).collect();
        product *= count_hamps(&d.induced(&members).complement(), limits)?;
    }
    Ok(product)
}

/// `∑_{σ : f∘σ = f} ∑_{F ⊆ A_σ ∩ A linear} (-1)^{|F|}`.
pub fn level_signed_sum(d: &Digraph, levels: &[usize], limits: &Limits) -> Result<BigInt> {
    check_levels(d, levels)?;
    limits.check_factorial("permutation enumeration", d.n())?;
    let mut total = BigInt::zero();
    for images in permutations(d.n()) {
        if images.iter().enumerate().all(|(v, &w)| levels[v] == levels[w]) {
            let sigma = PermutationView::from_valid(images);
            total += signed_sum_per_perm(d, &sigma, limits)?;
        }
    }
    Ok(total)
}

/// `∑ ∏_v x_{f(v)}` over maps `f: V → [vars]` constant on the cycles of `σ`.
pub fn polya_sum(sigma: &PermutationView, vars: usize, limits: &Limits) -> Result<MonomialPolynomial> {
    let cycles = sigma.cycles();
    let maps = (vars as u128).checked_pow(cycles.len() as u32).unwrap_or(u128::MAX);
    limits::check("cycle-constant maps", maps, limits.expansion_terms as u128)?;
    let mut out = MonomialPolynomial::zero(vars)?;
    let mut choice = vec![0usize; cycles.len()];
    loop {
        let mut exps = vec![0u16; vars];
        for (gamma, &i) in cycles.iter().zip(&choice) {
            exps[i] += gamma.len() as u16;
        }
        out.add_term(exps, Rational::one());
        // odometer over [vars]^cycles
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < vars {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// `∑_{F ⊆ B} (-1)^{|F|}` for a ground set `B` of the given size.
pub fn signed_subset_sum(size: usize, limits: &Limits) -> Result<i64> {
    limits::check("subset enumeration", size as u128, limits.subset_bits as u128)?;
    Ok((0u64..1 << size)
        .map(|m| if m.count_ones() % 2 == 0 { 1 } else { -1 })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{enumerate_digraphs, random_digraph};
    use crate::poly::PPolynomial;
    use crate::redei::u_p_thm1;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn one_based(n: usize, pairs: &[(usize, usize)]) -> ArcSet {
        ArcSet::new(n, pairs.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    #[test]
    fn linear_examples() {
        let f = one_based(8, &[(1, 4), (4, 3), (2, 8), (7, 6)]);
        assert!(is_linear(&f));
        assert_eq!(path_cover_of(&f).unwrap().len(), 4);
        assert!(!is_linear(&one_based(3, &[(1, 2), (2, 3), (3, 1)])));
        assert!(is_linear(&ArcSet::new(4, []).unwrap()));
        assert!(!is_linear(&ArcSet::new(2, [(0, 0)]).unwrap()));
        assert!(!is_linear(&ArcSet::new(3, [(0, 1), (0, 2)]).unwrap()));
        assert!(!is_linear(&ArcSet::new(3, [(0, 2), (1, 2)]).unwrap()));
        assert!(ArcSet::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn linear_criteria_agree_on_random_sets() {
        let limits = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..500 {
            let n = rng.gen_range(1..=6);
            let size = rng.gen_range(0..=8.min(n * n));
            let f = ArcSet::new(n, (0..size).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))).unwrap();
            let searched = find_path_cover_by_search(&f, &limits).unwrap();
            assert_eq!(is_linear(&f), searched.is_some(), "{f:?}");
            if let Some(cover) = searched {
                assert_eq!(Some(cover), path_cover_of(&f));
            }
        }
    }

    #[test]
    fn subsets_of_linear_sets_are_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 200 {
            let n = rng.gen_range(1..=7);
            let f = ArcSet::new(n, (0..n).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))).unwrap();
            if !is_linear(&f) {
                continue;
            }
            checked += 1;
            for mask in 0..1u64 << f.len() {
                assert!(is_linear(&f.subset(mask)));
            }
        }
    }

    #[test]
    fn a_sigma_examples() {
        let sigma = PermutationView::new(vec![1, 2, 0, 4, 3, 5]).unwrap();
        let expected = ArcSet::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 3), (5, 5)]).unwrap();
        assert_eq!(a_sigma(&sigma), expected);
        let id = a_sigma(&PermutationView::identity(3));
        assert_eq!(id, ArcSet::new(3, [(0, 0), (1, 1), (2, 2)]).unwrap());
        let swap = a_sigma(&PermutationView::new(vec![1, 0]).unwrap());
        assert_eq!(swap, ArcSet::new(2, [(0, 1), (1, 0)]).unwrap());
    }

    #[test]
    fn containing_counts() {
        let limits = Limits::default();
        for n in 0..=5 {
            let empty = ArcSet::new(n, []).unwrap();
            assert_eq!(
                count_listings_containing(&empty, &limits).unwrap(),
                BigUint::from(factorial(n))
            );
            assert_eq!(count_perms_containing(&empty), BigUint::from(factorial(n)));
        }
        let ham = ArcSet::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(count_listings_containing(&ham, &limits).unwrap(), BigUint::from(1u8));
        assert_eq!(count_perms_containing(&ham), BigUint::from(1u8));
        let cyc = ArcSet::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(count_listings_containing(&cyc, &limits).unwrap(), BigUint::zero());
        assert_eq!(count_perms_containing(&cyc), BigUint::from(1u8));
        let branching = ArcSet::new(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(count_perms_containing(&branching), BigUint::zero());
    }

    #[test]
    fn perms_containing_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let size = rng.gen_range(0..=n);
            let f = ArcSet::new(n, (0..size).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))).unwrap();
            let brute = permutations(n)
                .filter(|images| f.pairs().all(|(u, v)| images[u] == v))
                .count();
            assert_eq!(count_perms_containing(&f), BigUint::from(brute));
        }
    }

    #[test]
    fn signed_linear_sum_examples() {
        let limits = Limits::default();
        for n in 0..=5 {
            assert_eq!(
                signed_linear_sum(&Digraph::empty(n), &limits).unwrap(),
                BigInt::from(factorial(n))
            );
        }
        let d = Digraph::from_one_based(3, &[(1, 2), (2, 2), (3, 3)]).unwrap();
        assert_eq!(signed_linear_sum(&d, &limits).unwrap(), BigInt::from(4));
        for seed in 0..30 {
            let d = random_digraph(4, 0.5, seed).unwrap();
            let hamps = count_hamps(&d.complement(), &limits).unwrap();
            assert_eq!(signed_linear_sum(&d, &limits).unwrap(), BigInt::from(hamps));
        }
        let big = Limits {
            subset_bits: 3,
            ..Limits::default()
        };
        assert!(signed_linear_sum(&Digraph::complete(3), &big).is_err());
    }

    /// Reference for `signed_linear_sum`: every subset of `A`, tested
    /// against the path-cover criterion, weighted by brute-force counts.
    fn brute_signed_linear_sum(d: &Digraph, limits: &Limits) -> BigInt {
        let a = ArcSet::of_digraph(d);
        let mut total = BigInt::zero();
        for mask in 0..1u64 << a.len() {
            let f = a.subset(mask);
            if find_path_cover_by_search(&f, limits).unwrap().is_some() {
                let count = permutations(d.n())
                    .filter(|images| f.pairs().all(|(u, v)| images[u] == v))
                    .count() as i64;
                total += if f.len().is_multiple_of(2) { count } else { -count };
            }
        }
        total
    }

    #[test]
    fn signed_linear_sum_matches_brute_force() {
        let limits = Limits::default();
        for d in enumerate_digraphs(3, true, &limits).unwrap().step_by(5) {
            assert_eq!(
                signed_linear_sum(&d, &limits).unwrap(),
                brute_signed_linear_sum(&d, &limits)
            );
        }
    }

    #[test]
    fn per_perm_cases() {
        let limits = Limits::default();
        let loopless = Digraph::complete_loopless(4);
        assert_eq!(
            signed_sum_per_perm(&loopless, &PermutationView::identity(4), &limits).unwrap(),
            1
        );
        for k in 2..=5 {
            let d = Digraph::from_arcs(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap();
            let sigma = PermutationView::new((0..k).map(|i| (i + 1) % k).collect()).unwrap();
            let expected = if (k - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(signed_sum_per_perm(&d, &sigma, &limits).unwrap(), expected);
        }
        // (0,1,2) with only the arc (0,1): neither a D- nor a D-bar-cycle
        let d = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let sigma = PermutationView::new(vec![1, 2, 0]).unwrap();
        assert_eq!(signed_sum_per_perm(&d, &sigma, &limits).unwrap(), 0);
    }

    #[test]
    fn per_perm_reconstructs_theorem_one() {
        let limits = Limits::default();
        for d in enumerate_digraphs(3, true, &limits).unwrap() {
            let mut f = PPolynomial::zero();
            for images in permutations(3) {
                let sigma = PermutationView::from_valid(images);
                let c = signed_sum_per_perm(&d, &sigma, &limits).unwrap();
                f.add_term(sigma.cycle_type(), Rational::from_integer(c.into()));
            }
            assert_eq!(f, u_p_thm1(&d, &limits).unwrap());
        }
    }

    #[test]
    fn friendly_listings() {
        let limits = Limits::default();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let d = random_digraph(5, 0.5, rng.gen()).unwrap();
            let levels: Vec<usize> = (0..5).map(|_| rng.gen_range(1..=2)).collect();
            let count = count_friendly_listings(&d, &levels, &limits).unwrap();
            assert_eq!(count, friendly_product_formula(&d, &levels, &limits).unwrap());
            assert_eq!(BigInt::from(count), level_signed_sum(&d, &levels, &limits).unwrap());
        }
        let d = random_digraph(4, 0.5, 5).unwrap();
        assert_eq!(
            count_friendly_listings(&d, &[3, 3, 3, 3], &limits).unwrap(),
            count_hamps(&d.complement(), &limits).unwrap()
        );
        assert_eq!(
            count_friendly_listings(&d, &[4, 1, 3, 2], &limits).unwrap(),
            BigUint::one()
        );
        assert!(count_friendly_listings(&d, &[1, 2], &limits).is_err());
        assert!(count_friendly_listings(&d, &[0, 1, 1, 1], &limits).is_err());
    }

    #[test]
    fn polya_examples() {
        let limits = Limits::default();
        let id = PermutationView::identity(3);
        assert_eq!(
            polya_sum(&id, 3, &limits).unwrap(),
            PPolynomial::p_of(&[1, 1, 1]).expand(3).unwrap()
        );
        let cyc = PermutationView::new(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(
            polya_sum(&cyc, 2, &limits).unwrap(),
            PPolynomial::p_of(&[4]).expand(2).unwrap()
        );
        let sigma = PermutationView::new(vec![1, 2, 0, 4, 3, 5]).unwrap();
        let polya = polya_sum(&sigma, 3, &limits).unwrap();
        // 27 maps, summed directly
        let mut direct = MonomialPolynomial::zero(3).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let mut e = vec![0u16; 3];
                    e[a] += 3;
                    e[b] += 2;
                    e[c] += 1;
                    direct.add_term(e, Rational::one());
                }
            }
        }
        assert_eq!(polya, direct);
        assert_eq!(polya, PPolynomial::p_of(&[3, 2, 1]).expand(3).unwrap());
    }

    #[test]
    fn cancellation() {
        let limits = Limits::default();
        assert_eq!(signed_subset_sum(0, &limits).unwrap(), 1);
        assert_eq!(signed_subset_sum(1, &limits).unwrap(), 0);
        assert_eq!(signed_subset_sum(5, &limits).unwrap(), 0);
        assert!(signed_subset_sum(25, &limits).is_err());
    }

    #[test]
    fn path_cover_validation() {
        assert!(PathCover::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(PathCover::new(3, vec![vec![0, 1]]).is_err());
        assert!(PathCover::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(PathCover::new(2, vec![vec![0, 1], vec![]]).is_err());
    }
}
