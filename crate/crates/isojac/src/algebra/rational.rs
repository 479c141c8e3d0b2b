use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AResult, AlgebraError};

use super::field::Field;

pub type Rat = BigRational;

impl Field for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn int_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ref_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ref_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ref_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ref_neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> AResult<Self> {
        if Zero::is_zero(self) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

impl super::field::FactorableField for BigRational {
    fn factor_monic(f: &super::poly::Poly<Self>) -> AResult<Vec<(super::poly::Poly<Self>, usize)>> {
        super::factor::factor_over_q(f)
    }
    fn sqrt_elem(&self) -> Option<Self> {
        is_square_rational(self)
    }
}

pub fn rat_zero() -> Rat {
    BigRational::zero()
}

pub fn rat_one() -> Rat {
    BigRational::one()
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical serialization: "num" or "num/den" in lowest terms, positive den.
pub fn rat_to_string(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rat_from_str(s: &str) -> AResult<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> AResult<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| AlgebraError::Other(format!("bad integer literal {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if Zero::is_zero(&den) {
                return Err(AlgebraError::DivisionByZero);
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
    }
}

/// Exact integer square root test.
pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// True iff q is a square in Q; returns the nonnegative root.
pub fn is_square_rational(q: &Rat) -> Option<Rat> {
    if Zero::is_zero(q) {
        return Some(BigRational::zero());
    }
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Squarefree part of the square class of q in Q*/Q*^2 as an integer
/// (numerator times denominator, square factors removed).
pub fn square_class(q: &Rat) -> AResult<BigInt> {
    if Zero::is_zero(q) {
        return Err(AlgebraError::Other("square class of zero".into()));
    }
    let n = q.numer() * q.denom();
    let (sign, mag) = (n.sign(), n.magnitude().clone());
    let fact = super::intops::factor_u(&BigInt::from_biguint(Sign::Plus, mag))?;
    let mut sf = BigInt::one();
    for (p, e) in fact {
        if e % 2 == 1 {
            sf *= p;
        }
    }
    if sign == Sign::Minus {
        sf = -sf;
    }
    Ok(sf)
}

/// p-adic valuation of a nonzero integer; returns (v, n / p^v).
pub fn valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut v = 0u32;
    let mut m = n.clone();
    while !Zero::is_zero(&m) {
        let (q, r) = m.div_rem(&p);
        if !Zero::is_zero(&r) {
            break;
        }
        m = q;
        v += 1;
    }
    (v, m)
}
