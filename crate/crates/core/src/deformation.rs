//! The deformation `Ũ_t` of `U_D`, driven by a rational weight `t_a` on
//! every ordered vertex pair, with `s_a = t_a + 1`.
//!
//! Setting `t_a = -1` on arcs and `0` elsewhere recovers `U_D`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{permutations, PermutationView, PrefixSubset};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{expand_monomial_quasi, MonomialPolynomial, PPolynomial, Rational};

/// Weights `t_{(u,v)}` for all `n²` ordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TMatrix {
    n: usize,
    t: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct TMatrixJson {
    n: usize,
    #[serde(default)]
    t: BTreeMap<String, String>,
}

impl TMatrix {
    pub fn zero(n: usize) -> Self {
        TMatrix {
            n,
            t: vec![Rational::zero(); n * n],
        }
    }

    /// `t_a = -1` for `a ∈ A`, `0` otherwise.
    pub fn from_digraph(d: &Digraph) -> Self {
        let mut t = Self::zero(d.n());
        for (u, v) in d.arcs() {
            t.set(u, v, -Rational::one());
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self, u: usize, v: usize) -> &Rational {
        &self.t[u * self.n + v]
    }

    pub fn s(&self, u: usize, v: usize) -> Rational {
        self.t(u, v) + Rational::one()
    }

    pub fn set(&mut self, u: usize, v: usize, value: Rational) {
        self.t[u * self.n + v] = value;
    }

    /// Parses `{"n":2,"t":{"0,1":"-1","1,0":"1/2"}}`; omitted pairs are 0.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: TMatrixJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        if raw.n > Digraph::MAX_VERTICES {
            return Err(Error::Json(format!("n = {} is too large", raw.n)));
        }
        let mut t = Self::zero(raw.n);
        for (key, value) in raw.t {
            let pair: Vec<&str> = key.split(',').map(str::trim).collect();
            let (u, v) = match pair.as_slice() {
                [u, v] => match (u.parse::<usize>(), v.parse::<usize>()) {
                    (Ok(u), Ok(v)) => (u, v),
                    _ => return Err(Error::Json(format!("bad pair key `{key}`"))),
                },
                _ => return Err(Error::Json(format!("bad pair key `{key}`"))),
            };
            if u >= raw.n || v >= raw.n {
                return Err(Error::Json(format!("pair `{key}` out of range for n = {}", raw.n)));
            }
            let value: Rational = value
                .trim()
                .parse()
                .map_err(|_| Error::Json(format!("bad rational `{value}` for pair `{key}`")))?;
            t.set(u, v, value);
        }
        Ok(t)
    }

    /// Nonzero entries only.
    pub fn to_json(&self) -> String {
        let t = (0..self.n)
            .flat_map(|u| (0..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.t(u, v).is_zero())
            .map(|(u, v)| (format!("{u},{v}"), self.t(u, v).to_string()))
            .collect();
        serde_json::to_string(&TMatrixJson { n: self.n, t }).expect("serializable")
    }
}

/// `Ũ_t` expanded in `vars` variables from its defining sum over listings
/// `w` and weakly increasing index sequences, each equality
/// `i_k = i_{k+1}` weighted by `s_{(w_k, w_{k+1})}`.
pub fn deformed_u_definition(t: &TMatrix, vars: usize, limits: &Limits) -> Result<MonomialPolynomial> {
    let n = t.n();
    limits.check_factorial("listing enumeration", n)?;
    let positions = n.saturating_sub(1);
    // weight[E] accumulates, over listings, the product of s over the
    // equality positions E (bit k-1 for position k)
    let mut weight = vec![Rational::zero(); 1 << positions];
    let mut products = vec![Rational::one(); 1 << positions];
    for w in permutations(n) {
        for e in 1..products.len() {
            let low = e.trailing_zeros() as usize;
            let rest = e & (e - 1);
            products[e] = &products[rest] * t.s(w[low], w[low + 1]);
        }
        for (acc, p) in weight.iter_mut().zip(&products) {
            *acc += p;
        }
    }
    let mut out = MonomialPolynomial::zero(vars)?;
    let all = (1u64 << positions) - 1;
    for (e, c) in weight.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let rises = PrefixSubset::from_mask(n, (all & !(e as u64)) << 1);
        out = out.checked_add(&expand_monomial_quasi(&rises, vars)?.scale(c))?;
    }
    Ok(out)
}

/// `∑_σ ∏_γ (∏_{a ∈ CArcs γ} s_a - ∏_{a ∈ CArcs γ} t_a) p_{type σ}` over
/// every permutation `σ`.
pub fn deformed_u_thm(t: &TMatrix, limits: &Limits) -> Result<PPolynomial> {
    limits.check_factorial("permutation enumeration", t.n())?;
    let mut f = PPolynomial::zero();
    for images in permutations(t.n()) {
        let sigma = PermutationView::from_valid(images);
        let mut coef = Rational::one();
        for gamma in sigma.cycles() {
            let (mut s_prod, mut t_prod) = (Rational::one(), Rational::one());
            for (u, v) in gamma.cyclic_arcs() {
                s_prod *= t.s(u, v);
                t_prod *= t.t(u, v);
            }
            coef *= s_prod - t_prod;
            if coef.is_zero() {
                break;
            }
        }
        f.add_term(sigma.cycle_type(), coef);
    }
    Ok(f)
}
