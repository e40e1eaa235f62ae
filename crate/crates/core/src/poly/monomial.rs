use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{Rational, MAX_VARIABLES};
use crate::error::{Error, Result};

/// Dense exponent vector, one entry per variable.
pub type Exponents = Vec<u16>;

/// A polynomial in `x_1, ..., x_m` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialPolynomial {
    vars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl MonomialPolynomial {
    pub fn zero(vars: usize) -> Result<Self> {
        if vars == 0 || vars > MAX_VARIABLES {
            return Err(Error::BadVariableCount(vars));
        }
        Ok(MonomialPolynomial {
            vars,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(vars: usize) -> Result<Self> {
        let mut p = Self::zero(vars)?;
        p.add_term(vec![0; vars], Rational::one());
        Ok(p)
    }

    /// The single variable `x_{index+1}`.
    pub fn variable(vars: usize, index: usize) -> Result<Self> {
        let mut p = Self::zero(vars)?;
        if index >= vars {
            return Err(Error::Invalid(format!("variable {index} out of {vars}")));
        }
        let mut e = vec![0; vars];
        e[index] = 1;
        p.add_term(e, Rational::one());
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u16]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `coef * x^exponents`, dropping the term if it cancels.
    pub fn add_term(&mut self, exponents: Exponents, coef: Rational) {
        assert_eq!(exponents.len(), self.vars, "exponent vector length");
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
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

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-Rational::one()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = Self::zero(self.vars)?;
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Coefficient-wise equality; fails on differing variable counts.
    pub fn checked_eq(&self, other: &Self) -> Result<bool> {
        self.same_vars(other)?;
        Ok(self.terms == other.terms)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return MonomialPolynomial {
                vars: self.vars,
                terms: BTreeMap::new(),
            };
        }
        MonomialPolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    /// Multiplies by `x_1^k + ... + x_m^k`.
    pub fn mul_power_sum(&self, k: u16) -> Self {
        let mut out = MonomialPolynomial {
            vars: self.vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            for i in 0..self.vars {
                let mut e = e.clone();
                e[i] += k;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars {
            return Err(Error::VariableMismatch {
                left: self.vars,
                right: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                term *= num_traits::pow(x.clone(), k as usize);
            }
            total += term;
        }
        Ok(total)
    }

    /// `Some(d)` if every term has total degree `d`; the zero polynomial
    /// reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|e| e.iter().map(|&k| k as usize).sum::<usize>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl fmt::Debug for MonomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialPolynomial({} vars; ", self.vars)?;
        f.debug_map()
            .entries(self.terms.iter().map(|(e, c)| (e, c.to_string())))
            .finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    #[test]
    fn arithmetic() {
        let x = MonomialPolynomial::variable(2, 0).unwrap();
        let y = MonomialPolynomial::variable(2, 1).unwrap();
        let s = x.checked_add(&y).unwrap();
        let sq = s.checked_mul(&s).unwrap();
        assert_eq!(sq.coefficient(&[1, 1]), rational(2));
        assert_eq!(sq.coefficient(&[2, 0]), rational(1));
        assert!(sq.checked_sub(&sq).unwrap().is_zero());
        assert!(sq.scale(&rational(0)).is_zero());
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert_eq!(sq.evaluate(&[rational(1), rational(2)]).unwrap(), rational(9));
    }

    #[test]
    fn mismatched_variables_rejected() {
        let a = MonomialPolynomial::one(2).unwrap();
        let b = MonomialPolynomial::one(3).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::VariableMismatch { .. })));
        assert!(a.checked_mul(&b).is_err());
        assert!(a.checked_eq(&b).is_err());
        assert!(a.evaluate(&[rational(1)]).is_err());
        assert!(MonomialPolynomial::zero(0).is_err());
        assert!(MonomialPolynomial::zero(17).is_err());
    }

    #[test]
    fn power_sum_multiplication() {
        let one = MonomialPolynomial::one(3).unwrap();
        let p2 = one.mul_power_sum(2);
        assert_eq!(p2.term_count(), 3);
        assert_eq!(p2.coefficient(&[0, 2, 0]), rational(1));
    }
}
