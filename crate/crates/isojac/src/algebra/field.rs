use std::fmt::{Debug, Display};

use crate::error::{AResult, AlgebraError};

/// Field element whose context (modulus, base ring) travels with the value.
///
/// Constructors like `zero_like` take an exemplar so that elements of
/// runtime-parametrized fields (prime fields, quotient rings) can be built
/// without a separate ring handle.
pub trait Field: Clone + PartialEq + Debug + Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn ref_add(&self, other: &Self) -> Self;
    fn ref_sub(&self, other: &Self) -> Self;
    fn ref_mul(&self, other: &Self) -> Self;
    fn ref_neg(&self) -> Self;
    /// Multiplicative inverse; zero divisors report the offending factor.
    fn inv(&self) -> AResult<Self>;
    fn ref_div(&self, other: &Self) -> AResult<Self> {
        Ok(self.ref_mul(&other.inv()?))
    }
    /// 0 for characteristic-zero fields and their extensions.
    fn characteristic(&self) -> u64;
    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
    /// Exact division that must succeed; errors bubble as inexact division.
    fn div_exact(&self, other: &Self) -> AResult<Self> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        self.ref_div(other)
    }
}

/// Fields where polynomial factorization and square roots are effective
/// (the rationals and prime fields).
pub trait FactorableField: Field {
    /// Monic irreducible factors with multiplicity; cap on degree applies.
    fn factor_monic(f: &crate::algebra::poly::Poly<Self>) -> AResult<Vec<(crate::algebra::poly::Poly<Self>, usize)>>;
    /// Square root in the field, if one exists.
    fn sqrt_elem(&self) -> Option<Self>;
}
