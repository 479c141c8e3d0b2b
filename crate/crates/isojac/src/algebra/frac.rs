//! Fraction field of K[x]: reduced num/den pairs with monic denominator.
//! Nesting gives multivariate rational function fields, e.g. Q(s)(u).

use std::fmt;

use crate::error::{AResult, AlgebraError};

use super::field::Field;
use super::poly::Poly;
use super::rational::Rat;

#[derive(Clone, PartialEq)]
pub struct Fr<K: Field> {
    num: Poly<K>,
    den: Poly<K>, // monic, nonzero, coprime to num
}

/// Rational functions of one variable over Q.
pub type RatFn = Fr<Rat>;

impl<K: Field> fmt::Debug for Fr<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fr({}/{})", self.num, self.den)
    }
}

impl<K: Field> fmt::Display for Fr<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl<K: Field> Fr<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> AResult<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.degree().map_or(false, |d| d > 0) {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        } else {
            (num, den)
        };
        let li = den.lc().unwrap().inv()?;
        Ok(Fr { num: num.mul_scalar(&li), den: den.mul_scalar(&li) })
    }

    pub fn from_poly(p: Poly<K>, ex: &K) -> Self {
        Fr { num: p, den: Poly::constant(ex.one_like()) }
    }

    pub fn from_scalar(v: K) -> Self {
        let one = v.one_like();
        Fr { num: Poly::constant(v), den: Poly::constant(one) }
    }

    /// The variable x as a field element.
    pub fn var(ex: &K) -> Self {
        Fr { num: Poly::x_like(ex), den: Poly::constant(ex.one_like()) }
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    /// A base-field exemplar living inside this element.
    fn ex(&self) -> &K {
        self.den.lc().expect("denominator is nonzero")
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn as_poly(&self) -> AResult<Poly<K>> {
        if !self.is_poly() {
            return Err(AlgebraError::Other(format!("{self} is not polynomial")));
        }
        Ok(self.num.clone())
    }

    /// Specialize the variable to a base value; errors when the denominator
    /// vanishes there.
    pub fn eval_at(&self, x: &K) -> AResult<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        self.num.eval(x).ref_div(&d)
    }
}

impl<K: Field> Field for Fr<K> {
    fn zero_like(&self) -> Self {
        let ex = self.ex();
        Fr { num: Poly::zero(), den: Poly::constant(ex.one_like()) }
    }
    fn one_like(&self) -> Self {
        let ex = self.ex();
        Fr { num: Poly::constant(ex.one_like()), den: Poly::constant(ex.one_like()) }
    }
    fn int_like(&self, n: i64) -> Self {
        let ex = self.ex();
        Fr { num: Poly::constant(ex.int_like(n)), den: Poly::constant(ex.one_like()) }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn ref_add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Fr::new(num, den).expect("nonzero denominators")
    }
    fn ref_sub(&self, other: &Self) -> Self {
        self.ref_add(&other.ref_neg())
    }
    fn ref_mul(&self, other: &Self) -> Self {
        Fr::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }
    fn ref_neg(&self) -> Self {
        Fr { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> AResult<Self> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Fr::new(self.den.clone(), self.num.clone())
    }
    fn characteristic(&self) -> u64 {
        self.ex().characteristic()
    }
}

/// Convenience constructors for Q(x).
pub fn ratfn_from_ints(num: &[i64], den: &[i64]) -> RatFn {
    use crate::algebra::rational::rat_int;
    let ex = rat_int(0);
    Fr::new(Poly::from_ints(&ex, num), Poly::from_ints(&ex, den)).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    #[test]
    fn field_ops() {
        let x = RatFn::var(&rat_int(0));
        let one = x.one_like();
        // 1/(x-1) + 1/(x+1) = 2x/(x^2-1)
        let a = x.ref_sub(&one).inv().unwrap();
        let b = x.ref_add(&one).inv().unwrap();
        let s = a.ref_add(&b);
        let expect = ratfn_from_ints(&[0, 2], &[-1, 0, 1]);
        assert_eq!(s, expect);
        assert!(s.ref_mul(&s.inv().unwrap()).is_one());
    }

    #[test]
    fn specialization() {
        let f = ratfn_from_ints(&[1, 1], &[2, 1]); // (1+x)/(2+x)
        assert_eq!(f.eval_at(&rat_int(2)).unwrap(), crate::algebra::rational::rat(3, 4));
        assert!(f.eval_at(&rat_int(-2)).is_err());
    }
}
