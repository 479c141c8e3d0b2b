use std::fmt;

use crate::error::{AResult, AlgebraError};

use super::field::Field;

/// Element of a prime field F_p for an odd word-size prime p.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        let m = v.rem_euclid(p as i64) as u64;
        Fp { v: m, p }
    }
    pub fn from_u64(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Fp { v: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.ref_mul(&base);
            }
            base = base.ref_mul(&base);
            e >>= 1;
        }
        acc
    }
    /// Quadratic character: 1 square, -1 nonsquare, 0 zero.
    pub fn chi(&self) -> i32 {
        if self.v == 0 {
            return 0;
        }
        let r = self.pow((self.p - 1) / 2);
        if r.v == 1 {
            1
        } else {
            -1
        }
    }
    /// Tonelli-Shanks square root.
    pub fn sqrt(&self) -> Option<Fp> {
        let p = self.p;
        if self.v == 0 {
            return Some(*self);
        }
        if self.chi() != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow((p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = Fp::from_u64(2, p);
        while z.chi() != -1 {
            z = Fp::from_u64(z.v + 1, p);
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow((q + 1) / 2);
        while t.v != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt.v != 1 {
                tt = tt.ref_mul(&tt);
                i += 1;
                if i == m {
                    return None;
                }
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = b.ref_mul(&b);
            }
            m = i;
            c = b.ref_mul(&b);
            t = t.ref_mul(&c);
            r = r.ref_mul(&b);
        }
        Some(r)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.p, p: self.p }
    }
    fn int_like(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn ref_add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let s = self.v + other.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn ref_sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let s = self.v + self.p - other.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn ref_mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        Fp { v: ((self.v as u128 * other.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn ref_neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> AResult<Self> {
        if self.v == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.pow(self.p - 2))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl super::field::FactorableField for Fp {
    fn factor_monic(f: &super::poly::Poly<Self>) -> AResult<Vec<(super::poly::Poly<Self>, usize)>> {
        super::factor::factor_over_fp(f)
    }
    fn sqrt_elem(&self) -> Option<Self> {
        self.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Fp::new(5, 13);
        let b = Fp::new(9, 13);
        assert_eq!(a.ref_mul(&b).v, 45 % 13);
        assert_eq!(a.inv().unwrap().ref_mul(&a).v, 1);
        assert_eq!(Fp::new(-1, 13).v, 12);
    }

    #[test]
    fn sqrt_all_squares() {
        for p in [13u64, 17, 97] {
            for v in 0..p {
                let x = Fp::from_u64(v, p);
                let sq = x.ref_mul(&x);
                let r = sq.sqrt().expect("square must have a root");
                assert_eq!(r.ref_mul(&r), sq);
            }
        }
    }
}
