use std::sync::Arc;

use super::{u_fundamental, u_p_thm1, u_p_thm2, u_p_thm3};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{FundamentalQSym, MonomialPolynomial, PPolynomial, Rational};
use crate::registry::{Named, Registry};

/// `U_D` as produced by some route: either already in the power-sum basis
/// or as the raw fundamental-basis sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UdValue {
    PowerSum(PPolynomial),
    Fundamental(FundamentalQSym),
}

impl UdValue {
    pub fn expand(&self, vars: usize) -> Result<MonomialPolynomial> {
        match self {
            UdValue::PowerSum(f) => f.expand(vars),
            UdValue::Fundamental(g) => g.expand(vars),
        }
    }

    pub fn power_sum(&self) -> Option<&PPolynomial> {
        match self {
            UdValue::PowerSum(f) => Some(f),
            UdValue::Fundamental(_) => None,
        }
    }

    pub fn zeta(&self) -> Rational {
        match self {
            UdValue::PowerSum(f) => f.zeta(),
            UdValue::Fundamental(g) => g.zeta(),
        }
    }
}

/// One way of computing `U_D`.
pub trait UdRoute: Named + Send + Sync {
    /// Rejects digraphs outside the route's hypothesis.
    fn accepts(&self, _d: &Digraph) -> Result<()> {
        Ok(())
    }

    fn compute(&self, d: &Digraph, limits: &Limits) -> Result<UdValue>;
}

/// The defining sum of `L_{Des(w,D),n}` over all listings.
pub struct DefinitionRoute;

impl Named for DefinitionRoute {
    fn name(&self) -> &'static str {
        "definition"
    }

    fn summary(&self) -> &'static str {
        "sum of fundamental quasisymmetric functions over all vertex listings"
    }
}

impl UdRoute for DefinitionRoute {
    fn compute(&self, d: &Digraph, limits: &Limits) -> Result<UdValue> {
        u_fundamental(d, limits).map(UdValue::Fundamental)
    }
}

/// Signed sum over permutations whose cycles are `D`- or `D̄`-cycles.
pub struct SignedCycleRoute;

impl Named for SignedCycleRoute {
    fn name(&self) -> &'static str {
        "thm1"
    }

    fn summary(&self) -> &'static str {
        "signed power-sum expansion over S_V(D, D-bar); any digraph"
    }
}

impl UdRoute for SignedCycleRoute {
    fn compute(&self, d: &Digraph, limits: &Limits) -> Result<UdValue> {
        u_p_thm1(d, limits).map(UdValue::PowerSum)
    }
}

/// Positive sum over odd-cycle permutations in `S_V(D)`.
pub struct OddCycleRoute;

impl Named for OddCycleRoute {
    fn name(&self) -> &'static str {
        "thm2"
    }

    fn summary(&self) -> &'static str {
        "2^psi-weighted expansion over odd-cycle permutations; tournaments only"
    }
}

impl UdRoute for OddCycleRoute {
    fn accepts(&self, d: &Digraph) -> Result<()> {
        if d.is_tournament() {
            Ok(())
        } else {
            Err(Error::NotATournament)
        }
    }

    fn compute(&self, d: &Digraph, limits: &Limits) -> Result<UdValue> {
        u_p_thm2(d, limits).map(UdValue::PowerSum)
    }
}

/// Positive sum over permutations without risky cycles.
pub struct RiskFreeRoute;

impl Named for RiskFreeRoute {
    fn name(&self) -> &'static str {
        "thm3"
    }

    fn summary(&self) -> &'static str {
        "expansion over S_V(D, D-bar) without risky cycles; digraphs without 2-cycles"
    }
}

impl UdRoute for RiskFreeRoute {
    fn accepts(&self, d: &Digraph) -> Result<()> {
        match d.two_cycle() {
            Some((u, v)) => Err(Error::HasTwoCycle(u, v)),
            None => Ok(()),
        }
    }

    fn compute(&self, d: &Digraph, limits: &Limits) -> Result<UdValue> {
        u_p_thm3(d, limits).map(UdValue::PowerSum)
    }
}

pub type RouteRegistry = Registry<dyn UdRoute>;

impl Default for RouteRegistry {
    fn default() -> Self {
        let mut r: RouteRegistry = Registry::new("route");
        r.register(Arc::new(SignedCycleRoute)).unwrap();
        r.register(Arc::new(OddCycleRoute)).unwrap();
        r.register(Arc::new(RiskFreeRoute)).unwrap();
        r.register(Arc::new(DefinitionRoute)).unwrap();
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_route_agrees_on_a_tournament() {
        let t = Digraph::from_one_based(
            5,
            &[
                (1, 2),
                (1, 4),
                (1, 5),
                (2, 5),
                (3, 1),
                (3, 2),
                (4, 2),
                (4, 3),
                (4, 5),
                (5, 3),
            ],
        )
        .unwrap();
        let limits = Limits::default();
        let registry = RouteRegistry::default();
        let reference = DefinitionRoute.compute(&t, &limits).unwrap().expand(5).unwrap();
        for route in registry.iter() {
            route.accepts(&t).unwrap();
            let value = route.compute(&t, &limits).unwrap();
            assert_eq!(value.expand(5).unwrap(), reference, "route {}", route.name());
        }
        assert_eq!(registry.names(), vec!["thm1", "thm2", "thm3", "definition"]);
    }

    #[test]
    fn hypotheses_are_checked() {
        let two_cycle = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let registry = RouteRegistry::default();
        assert!(registry.get("thm2").unwrap().accepts(&two_cycle).is_err());
        assert!(registry.get("thm3").unwrap().accepts(&two_cycle).is_err());
        assert!(registry.get("thm1").unwrap().accepts(&two_cycle).is_ok());
        assert!(registry.get("thm9").is_err());
    }
}
