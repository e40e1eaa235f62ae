use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_traits::{One, Signed, Zero};

use super::{MonomialPolynomial, Rational};
use crate::combinatorics::PrefixSubset;
use crate::error::{Error, Result};

/// How consecutive indices `i_k` and `i_{k+1}` must compare.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Rise,
    Stay,
    RiseOrStay,
}

/// Adds `coef * x_{i_1} ... x_{i_n}` for every `1 <= i_1 <= ... <= i_n <= m`
/// whose steps obey `step(k)` for `k` in `1..n`.
fn sum_sequences(n: usize, out: &mut MonomialPolynomial, coef: &Rational, step: impl Fn(usize) -> Step) {
    fn rec(
        k: usize,
        n: usize,
        prev: usize,
        exps: &mut Vec<u16>,
        out: &mut MonomialPolynomial,
        coef: &Rational,
        step: &dyn Fn(usize) -> Step,
    ) {
        if k == n {
            out.add_term(exps.clone(), coef.clone());
            return;
        }
        let m = exps.len();
        let range = if k == 0 {
            0..m
        } else {
            match step(k) {
                Step::Rise => prev + 1..m,
                Step::Stay => prev..prev + 1,
                Step::RiseOrStay => prev..m,
            }
        };
        for i in range {
            exps[i] += 1;
            rec(k + 1, n, i, exps, out, coef, step);
            exps[i] -= 1;
        }
    }
    let mut exps = vec![0u16; out.vars()];
    rec(0, n, 0, &mut exps, out, coef, &step);
}

/// `L_{I,n}` in `vars` variables: the sum of `x_{i_1} ... x_{i_n}` over
/// weakly increasing index sequences that strictly rise at every `p ∈ I`.
pub fn expand_fundamental(subset: &PrefixSubset, vars: usize) -> Result<MonomialPolynomial> {
    let mut out = MonomialPolynomial::zero(vars)?;
    sum_sequences(subset.n(), &mut out, &Rational::one(), |k| {
        if subset.contains(k) {
            Step::Rise
        } else {
            Step::RiseOrStay
        }
    });
    Ok(out)
}

/// The monomial quasisymmetric function with strict rises exactly at the
/// members of `rises` and equal indices at every other position.
pub fn expand_monomial_quasi(rises: &PrefixSubset, vars: usize) -> Result<MonomialPolynomial> {
    let mut out = MonomialPolynomial::zero(vars)?;
    sum_sequences(rises.n(), &mut out, &Rational::one(), |k| {
        if rises.contains(k) {
            Step::Rise
        } else {
            Step::Stay
        }
    });
    Ok(out)
}

/// A homogeneous degree-`n` quasisymmetric function written in the
/// fundamental basis `L_{I,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalQSym {
    n: usize,
    terms: BTreeMap<PrefixSubset, Rational>,
}

impl FundamentalQSym {
    pub fn zero(n: usize) -> Self {
        FundamentalQSym {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(subset: PrefixSubset) -> Self {
        let mut g = Self::zero(subset.n());
        g.terms.insert(subset, Rational::one());
        g
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PrefixSubset, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, subset: &PrefixSubset) -> Rational {
        self.terms.get(subset).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, subset: PrefixSubset, coef: Rational) -> Result<()> {
        if subset.n() != self.n {
            return Err(Error::Invalid(format!(
                "L_{{I,{}}} added to a degree-{} quasisymmetric function",
                subset.n(),
                self.n
            )));
        }
        if coef.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(subset).or_insert_with(Rational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&subset);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        if !factor.is_zero() {
            out.terms = self.terms.iter().map(|(s, c)| (*s, c * factor)).collect();
        }
        out
    }

    /// The linear extension of [`expand_fundamental`].
    pub fn expand(&self, vars: usize) -> Result<MonomialPolynomial> {
        let mut out = MonomialPolynomial::zero(vars)?;
        for (subset, coef) in &self.terms {
            sum_sequences(self.n, &mut out, coef, |k| {
                if subset.contains(k) {
                    Step::Rise
                } else {
                    Step::RiseOrStay
                }
            });
        }
        Ok(out)
    }

    /// `ζ(L_{I,n}) = [I = ∅]`.
    pub fn zeta(&self) -> Rational {
        self.coefficient(&PrefixSubset::empty(self.n))
    }
}

impl Add for &FundamentalQSym {
    type Output = FundamentalQSym;

    /// Panics on differing degrees; use [`FundamentalQSym::checked_add`]
    /// when that can happen.
    fn add(self, rhs: &FundamentalQSym) -> FundamentalQSym {
        self.checked_add(rhs).expect("degrees match")
    }
}

impl fmt::Display for FundamentalQSym {
    /// `2*L{} + L{1,2}`, subsets in increasing mask order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (subset, coef)) in self.terms().enumerate() {
            let magnitude = coef.abs();
            match (i, coef.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if magnitude.is_one() {
                write!(f, "L{subset}")?;
            } else {
                write!(f, "{magnitude}*L{subset}")?;
            }
        }
        Ok(())
    }
}
