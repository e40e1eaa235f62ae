//! The Redei–Berge symmetric function `U_D`: the defining sum over
//! listings and the three power-sum expansions.

mod routes;

pub use routes::{DefinitionRoute, OddCycleRoute, RiskFreeRoute, RouteRegistry, SignedCycleRoute, UdRoute, UdValue};

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{permutations, CycleClass, PermutationView, PrefixSubset};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{FundamentalQSym, MonomialPolynomial, PPolynomial, Rational};

fn check_listing(d: &Digraph, w: &[usize]) -> Result<()> {
    let n = d.n();
    let mut seen = vec![false; n];
    let valid = w.len() == n && w.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true));
    if valid {
        Ok(())
    } else {
        Err(Error::InvalidListing { n, listing: w.to_vec() })
    }
}

fn des_mask(d: &Digraph, w: &[usize]) -> u64 {
    let mut mask = 0;
    for i in 1..w.len() {
        if d.has_arc(w[i - 1], w[i]) {
            mask |= 1 << i;
        }
    }
    mask
}

/// Positions `i ∈ [n-1]` (1-based) with `(w_i, w_{i+1}) ∈ A`.
pub fn des_set(d: &Digraph, w: &[usize]) -> Result<PrefixSubset> {
    check_listing(d, w)?;
    Ok(PrefixSubset::from_mask(d.n(), des_mask(d, w)))
}

/// Sum of the `D`-descents of `w`.
pub fn maj_d(d: &Digraph, w: &[usize]) -> Result<usize> {
    Ok(des_set(d, w)?.members().sum())
}

/// `∑_w L_{Des(w,D), n}` over all `n!` listings, kept in the fundamental basis.
pub fn u_fundamental(d: &Digraph, limits: &Limits) -> Result<FundamentalQSym> {
    let n = d.n();
    limits.check_factorial("listing enumeration", n)?;
    let mut counts = vec![0u64; 1 << n.saturating_sub(1)];
    for w in permutations(n) {
        counts[(des_mask(d, &w) >> 1) as usize] += 1;
    }
    let mut g = FundamentalQSym::zero(n);
    for (half, &c) in counts.iter().enumerate() {
        if c > 0 {
            g.add_term(
                PrefixSubset::from_mask(n, (half as u64) << 1),
                Rational::from_integer(c.into()),
            )?;
        }
    }
    Ok(g)
}

/// `U_D` expanded in `vars` variables straight from the defining sum.
pub fn u_via_definition(d: &Digraph, vars: usize, limits: &Limits) -> Result<MonomialPolynomial> {
    u_fundamental(d, limits)?.expand(vars)
}

/// A class whose cyclic arcs all avoid `A`.
pub fn is_dbar_cycle(d: &Digraph, gamma: &CycleClass) -> bool {
    gamma.cyclic_arcs().all(|(u, v)| !d.has_arc(u, v))
}

/// Every cycle of `sigma` is a `D`-cycle or a `D̄`-cycle.
pub fn in_sv_d_dbar(d: &Digraph, sigma: &PermutationView) -> bool {
    sigma.cycles().iter().all(|g| d.is_d_cycle(g) || is_dbar_cycle(d, g))
}

/// Every nontrivial cycle of `sigma` is a `D`-cycle.
pub fn in_sv_d(d: &Digraph, sigma: &PermutationView) -> bool {
    sigma.cycles().iter().all(|g| g.is_trivial() || d.is_d_cycle(g))
}

fn all_perms(d: &Digraph, limits: &Limits) -> Result<impl Iterator<Item = PermutationView>> {
    limits.check_factorial("permutation enumeration", d.n())?;
    Ok(permutations(d.n()).map(PermutationView::from_valid))
}

/// `S_V(D)`, filtered out of all `n!` permutations in lexicographic order.
pub fn enumerate_sv_d(d: &Digraph, limits: &Limits) -> Result<Vec<PermutationView>> {
    Ok(all_perms(d, limits)?.filter(|s| in_sv_d(d, s)).collect())
}

/// `S_V(D, D̄)`, filtered out of all `n!` permutations in lexicographic order.
pub fn enumerate_sv_d_dbar(d: &Digraph, limits: &Limits) -> Result<Vec<PermutationView>> {
    Ok(all_perms(d, limits)?.filter(|s| in_sv_d_dbar(d, s)).collect())
}

/// `∑ (ℓ(γ) - 1)` over the cycles `γ` of `sigma` that are `D`-cycles.
pub fn phi(d: &Digraph, sigma: &PermutationView) -> usize {
    sigma
        .cycles()
        .iter()
        .filter(|g| d.is_d_cycle(g))
        .map(|g| g.len() - 1)
        .sum()
}

/// Number of cycles of length greater than 1.
pub fn psi(sigma: &PermutationView) -> usize {
    sigma.nontrivial_cycle_count()
}

/// Even length, and the class or its reversal is a `D`-cycle.
pub fn is_risky(d: &Digraph, gamma: &CycleClass) -> bool {
    gamma.len().is_multiple_of(2) && (d.is_d_cycle(gamma) || d.is_d_cycle(&gamma.reversed()))
}

fn sign(exponent: usize) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `∑_{σ ∈ S_V(D,D̄)} (-1)^{φ(σ)} p_{type σ}`.
pub fn u_p_thm1(d: &Digraph, limits: &Limits) -> Result<PPolynomial> {
    let mut f = PPolynomial::zero();
    for sigma in all_perms(d, limits)? {
        if in_sv_d_dbar(d, &sigma) {
            f.add_term(sigma.cycle_type(), sign(phi(d, &sigma)));
        }
    }
    Ok(f)
}

/// `∑ 2^{ψ(σ)} p_{type σ}` over `σ ∈ S_V(D)` with only odd cycles.
/// Tournaments only.
pub fn u_p_thm2(d: &Digraph, limits: &Limits) -> Result<PPolynomial> {
    if !d.is_tournament() {
        return Err(Error::NotATournament);
    }
    let mut f = PPolynomial::zero();
    for sigma in all_perms(d, limits)? {
        if sigma.cycles().iter().all(|g| g.len() % 2 == 1) && in_sv_d(d, &sigma) {
            f.add_term(sigma.cycle_type(), Rational::from_integer(BigInt::one() << psi(&sigma)));
        }
    }
    Ok(f)
}

/// `∑ p_{type σ}` over `σ ∈ S_V(D,D̄)` with no risky cycle. Requires a
/// digraph without 2-cycles.
pub fn u_p_thm3(d: &Digraph, limits: &Limits) -> Result<PPolynomial> {
    if let Some((u, v)) = d.two_cycle() {
        return Err(Error::HasTwoCycle(u, v));
    }
    let mut f = PPolynomial::zero();
    for sigma in all_perms(d, limits)? {
        if in_sv_d_dbar(d, &sigma) && !sigma.cycles().iter().any(|g| is_risky(d, g)) {
            f.add_term(sigma.cycle_type(), Rational::one());
        }
    }
    Ok(f)
}
