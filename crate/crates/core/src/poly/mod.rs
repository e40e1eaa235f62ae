//! Exact sparse polynomials: truncated monomial expansions, symmetric
//! functions in the power-sum basis and quasisymmetric functions in the
//! fundamental basis.
//!
//! Equality of two homogeneous degree-`n` (quasi)symmetric functions is
//! decided by comparing their expansions in `n` variables: every monomial
//! of degree `n` involves at most `n` distinct variables, so nothing is lost
//! by the truncation.

mod fundamental;
mod monomial;
mod power_sum;

pub use fundamental::{expand_fundamental, expand_monomial_quasi, FundamentalQSym};
pub use monomial::{Exponents, MonomialPolynomial};
pub use power_sum::PPolynomial;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;

/// Exact rational coefficients.
pub type Rational = BigRational;

/// Truncations never use more variables than this.
pub const MAX_VARIABLES: usize = 16;

pub fn rational(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn expand_p(f: &PPolynomial, vars: usize) -> Result<MonomialPolynomial> {
    f.expand(vars)
}

pub fn expand_qsym(g: &FundamentalQSym, vars: usize) -> Result<MonomialPolynomial> {
    g.expand(vars)
}

pub fn omega_p(f: &PPolynomial) -> PPolynomial {
    f.omega()
}

pub fn antipode_p(f: &PPolynomial) -> PPolynomial {
    f.antipode()
}

pub fn zeta_p(f: &PPolynomial) -> Rational {
    f.zeta()
}

pub fn zeta_fundamental(g: &FundamentalQSym) -> Rational {
    g.zeta()
}
