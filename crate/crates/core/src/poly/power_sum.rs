use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MonomialPolynomial, Rational};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A symmetric function `∑ c_λ p_λ` in the power-sum basis.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PPolynomial {
    terms: BTreeMap<Partition, Rational>,
}

impl PPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `p_∅ = 1`.
    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    /// The single basis element `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        let mut f = Self::zero();
        f.terms.insert(lambda, Rational::one());
        f
    }

    /// `p_λ` from unsorted parts. Panics on zero parts.
    pub fn p_of(parts: &[usize]) -> Self {
        Self::p(Partition::new(parts.to_vec()).expect("positive parts"))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = Self::zero();
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        PPolynomial {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * factor)).collect(),
        }
    }

    fn map_signs(&self, negate: impl Fn(&Partition) -> bool) -> Self {
        PPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), if negate(l) { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `ω(p_n) = (-1)^{n-1} p_n`, extended multiplicatively.
    pub fn omega(&self) -> Self {
        self.map_signs(|l| (l.size() - l.len()) % 2 == 1)
    }

    /// `S(p_n) = -p_n`, extended multiplicatively.
    pub fn antipode(&self) -> Self {
        self.map_signs(|l| l.len() % 2 == 1)
    }

    /// Principal specialization `x_1 = 1`, `x_i = 0` otherwise, under which
    /// every `p_λ` becomes 1.
    pub fn zeta(&self) -> Rational {
        self.terms.values().sum()
    }

    /// Degree of every term, or `None` for zero and inhomogeneous inputs.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|d| d == first).then_some(first)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// All coefficients nonnegative integers.
    pub fn is_p_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Membership in `N[p_1, 2p_3, 2p_5, ...]`: only odd parts occur, and the
    /// coefficient of `p_λ` is a nonnegative integer multiple of `2^k` where
    /// `k` counts the parts of `λ` greater than 1.
    pub fn in_odd_power_sum_semiring(&self) -> bool {
        self.terms.iter().all(|(lambda, c)| {
            let nontrivial = lambda.parts().iter().filter(|&&k| k > 1).count();
            lambda.parts().iter().all(|k| k % 2 == 1)
                && c.is_integer()
                && !c.is_negative()
                && c.to_integer().is_multiple_of(&(BigInt::one() << nontrivial))
        })
    }

    /// Expansion in `x_1, ..., x_vars`, each `p_k` becoming
    /// `x_1^k + ... + x_vars^k`.
    pub fn expand(&self, vars: usize) -> Result<MonomialPolynomial> {
        let mut out = MonomialPolynomial::zero(vars)?;
        let one = MonomialPolynomial::one(vars)?;
        // products of a common prefix are shared across partitions
        let mut cache: HashMap<Vec<usize>, MonomialPolynomial> = HashMap::new();
        for (lambda, coef) in &self.terms {
            let mut prefix_len = lambda.len();
            while prefix_len > 0 && !cache.contains_key(&lambda.parts()[..prefix_len]) {
                prefix_len -= 1;
            }
            let mut acc = if prefix_len == 0 {
                one.clone()
            } else {
                cache[&lambda.parts()[..prefix_len]].clone()
            };
            for i in prefix_len..lambda.len() {
                acc = acc.mul_power_sum(lambda.parts()[i] as u16);
                cache.insert(lambda.parts()[..=i].to_vec(), acc.clone());
            }
            out = out.checked_add(&acc.scale(coef))?;
        }
        Ok(out)
    }

    /// Terms in display order: larger degree first, then reverse
    /// lexicographic on the parts.
    pub fn display_order(&self) -> Vec<(&Partition, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.size().cmp(&a.size()).then_with(|| b.parts().cmp(a.parts())));
        v
    }

    /// JSON object from comma-joined parts to coefficient strings, in
    /// display order.
    pub fn to_json(&self) -> String {
        let body = self
            .display_order()
            .into_iter()
            .map(|(l, c)| format!("\"{}\":\"{}\"", l.parts().iter().join(","), c))
            .join(",");
        format!("{{{body}}}")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let map: BTreeMap<String, String> = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut f = Self::zero();
        for (key, value) in map {
            let parts = if key.is_empty() {
                Vec::new()
            } else {
                key.split(',')
                    .map(|s| s.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::Json(format!("bad partition key `{key}`")))?
            };
            let lambda = Partition::new(parts).map_err(|e| Error::Json(e.to_string()))?;
            let coef: Rational = value
                .trim()
                .parse()
                .map_err(|_| Error::Json(format!("bad rational `{value}`")))?;
            f.add_term(lambda, coef);
        }
        Ok(f)
    }
}

impl fmt::Display for PPolynomial {
    /// `p[3] + 2*p[2,1] - 1/2*p[1,1,1]`; the empty partition prints as its
    /// bare coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, coef)) in self.display_order().into_iter().enumerate() {
            let magnitude = coef.abs();
            match (i, coef.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if lambda.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "p{lambda}")?;
            } else {
                write!(f, "{magnitude}*p{lambda}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PPolynomial({self})")
    }
}

impl Add for &PPolynomial {
    type Output = PPolynomial;

    fn add(self, rhs: &PPolynomial) -> PPolynomial {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Add for PPolynomial {
    type Output = PPolynomial;

    fn add(self, rhs: PPolynomial) -> PPolynomial {
        &self + &rhs
    }
}

impl Neg for &PPolynomial {
    type Output = PPolynomial;

    fn neg(self) -> PPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Sub for &PPolynomial {
    type Output = PPolynomial;

    fn sub(self, rhs: &PPolynomial) -> PPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &PPolynomial {
    type Output = PPolynomial;

    fn mul(self, rhs: &PPolynomial) -> PPolynomial {
        let mut out = PPolynomial::zero();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &rhs.terms {
                out.add_term(l1.union(l2), c1 * c2);
            }
        }
        out
    }
}

impl std::iter::Sum for PPolynomial {
    fn sum<I: Iterator<Item = PPolynomial>>(iter: I) -> Self {
        iter.fold(PPolynomial::zero(), |acc, f| &acc + &f)
    }
}
