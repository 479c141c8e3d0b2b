//! Prime-power fields F_{p^k} for k <= 3, as quotients F_p[T]/(m) by a
//! deterministically chosen monic irreducible m.

use std::fmt;
use std::sync::Arc;

use crate::error::{AResult, AlgebraError};

use super::field::Field;
use super::fp::Fp;

#[derive(Debug, PartialEq, Eq)]
pub struct FqCtx {
    pub p: u64,
    pub k: usize,
    /// monic modulus, low-to-high, length k+1, modulus[k] == 1
    pub modulus: Vec<u64>,
}

impl FqCtx {
    /// Lexicographically smallest monic irreducible of degree k:
    /// coefficient tuples (c_{k-1}, ..., c_0) scanned in ascending order.
    pub fn canonical(p: u64, k: usize) -> AResult<Arc<FqCtx>> {
        if k == 0 || k > 3 {
            return Err(AlgebraError::UnsupportedDegree { degree: k, cap: 3 });
        }
        if k == 1 {
            return Ok(Arc::new(FqCtx { p, k, modulus: vec![0, 1] }));
        }
        let mut coeffs = vec![0u64; k];
        loop {
            let mut m = coeffs.clone();
            m.push(1);
            if is_irreducible(&m, p) {
                return Ok(Arc::new(FqCtx { p, k, modulus: m }));
            }
            // increment (c_{k-1},...,c_0) as a little-endian counter on
            // the reversed tuple so c_{k-1} varies slowest
            let mut i = 0;
            loop {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
                if i == k {
                    return Err(AlgebraError::Other("no irreducible found".into()));
                }
            }
        }
    }

    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> AResult<Arc<FqCtx>> {
        let k = modulus.len() - 1;
        if k == 0 || k > 3 {
            return Err(AlgebraError::UnsupportedDegree { degree: k, cap: 3 });
        }
        if modulus[k] != 1 {
            return Err(AlgebraError::Other("modulus must be monic".into()));
        }
        if k > 1 && !is_irreducible(&modulus, p) {
            return Err(AlgebraError::Other("modulus reducible".into()));
        }
        Ok(Arc::new(FqCtx { p, k, modulus }))
    }

    pub fn q(&self) -> u64 {
        let mut q = 1u64;
        for _ in 0..self.k {
            q *= self.p;
        }
        q
    }

    pub fn zero(self: &Arc<Self>) -> Fq {
        Fq { ctx: Arc::clone(self), c: [0; 3] }
    }
    pub fn one(self: &Arc<Self>) -> Fq {
        let mut c = [0u64; 3];
        c[0] = 1 % self.p;
        Fq { ctx: Arc::clone(self), c }
    }
    pub fn gen(self: &Arc<Self>) -> Fq {
        let mut c = [0u64; 3];
        if self.k > 1 {
            c[1] = 1;
        } else {
            // generator of F_p as an algebra over itself is 0 + ... use T image = root of T
            c[0] = 0;
        }
        Fq { ctx: Arc::clone(self), c }
    }
    pub fn from_fp(self: &Arc<Self>, v: Fp) -> Fq {
        debug_assert_eq!(v.p, self.p);
        let mut c = [0u64; 3];
        c[0] = v.v;
        Fq { ctx: Arc::clone(self), c }
    }
    /// Element from its canonical index in [0, q): base-p digits.
    pub fn from_index(self: &Arc<Self>, idx: u64) -> Fq {
        let mut c = [0u64; 3];
        let mut r = idx;
        for slot in c.iter_mut().take(self.k) {
            *slot = r % self.p;
            r /= self.p;
        }
        Fq { ctx: Arc::clone(self), c }
    }
}

/// deg <= 3 irreducibility over F_p: no roots (deg 2,3).
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    debug_assert!(k == 2 || k == 3);
    for x in 0..p {
        let mut acc: u128 = 0;
        for &c in m.iter().rev() {
            acc = (acc * x as u128 + c as u128) % p as u128;
        }
        if acc == 0 {
            return false;
        }
    }
    true
}

/// Element of F_{p^k}, k <= 3.
#[derive(Clone, Debug)]
pub struct Fq {
    pub ctx: Arc<FqCtx>,
    pub c: [u64; 3],
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx)
            || (self.ctx.p == other.ctx.p && self.ctx.modulus == other.ctx.modulus))
            && self.c == other.c
    }
}

impl Fq {
    pub fn index(&self) -> u64 {
        let p = self.ctx.p;
        let mut idx = 0u64;
        for i in (0..self.ctx.k).rev() {
            idx = idx * p + self.c[i];
        }
        idx
    }

    pub fn pow(&self, mut e: u64) -> Fq {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.ref_mul(&base);
            }
            base = base.ref_mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quadratic character in F_q (q odd).
    pub fn chi(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let r = self.pow((self.ctx.q() - 1) / 2);
        if r == self.ctx.one() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.ctx.k;
        if k == 1 {
            return write!(f, "{}", self.c[0]);
        }
        let mut parts = Vec::new();
        for (i, &v) in self.c.iter().enumerate().take(k) {
            if v != 0 {
                parts.push(match i {
                    0 => format!("{v}"),
                    1 => format!("{v}*T"),
                    _ => format!("{v}*T^{i}"),
                });
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl Field for Fq {
    fn zero_like(&self) -> Self {
        self.ctx.zero()
    }
    fn one_like(&self) -> Self {
        self.ctx.one()
    }
    fn int_like(&self, n: i64) -> Self {
        self.ctx.from_fp(Fp::new(n, self.ctx.p))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }
    fn ref_add(&self, other: &Self) -> Self {
        let p = self.ctx.p;
        let mut c = [0u64; 3];
        for i in 0..3 {
            let s = self.c[i] + other.c[i];
            c[i] = if s >= p { s - p } else { s };
        }
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn ref_sub(&self, other: &Self) -> Self {
        let p = self.ctx.p;
        let mut c = [0u64; 3];
        for i in 0..3 {
            let s = self.c[i] + p - other.c[i];
            c[i] = if s >= p { s - p } else { s };
        }
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn ref_mul(&self, other: &Self) -> Self {
        let p = self.ctx.p as u128;
        let k = self.ctx.k;
        let mut prod = [0u64; 5];
        for i in 0..k {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..k {
                let v = (self.c[i] as u128 * other.c[j] as u128 + prod[i + j] as u128) % p;
                prod[i + j] = v as u64;
            }
        }
        // reduce degree down using the monic modulus:
        // T^k = -(m_0 + ... + m_{k-1} T^{k-1})
        let m = &self.ctx.modulus;
        for d in (k..2 * k - 1).rev() {
            let coef = prod[d];
            if coef == 0 {
                continue;
            }
            prod[d] = 0;
            for j in 0..k {
                if m[j] == 0 {
                    continue;
                }
                let sub = (coef as u128 * m[j] as u128) % p;
                let pos = d - k + j;
                let v = (prod[pos] as u128 + p - sub) % p;
                prod[pos] = v as u64;
            }
        }
        let mut c = [0u64; 3];
        c[..k].copy_from_slice(&prod[..k]);
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn ref_neg(&self) -> Self {
        let p = self.ctx.p;
        let mut c = [0u64; 3];
        for i in 0..3 {
            c[i] = if self.c[i] == 0 { 0 } else { p - self.c[i] };
        }
        Fq { ctx: Arc::clone(&self.ctx), c }
    }
    fn inv(&self) -> AResult<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.pow(self.ctx.q() - 2))
    }
    fn characteristic(&self) -> u64 {
        self.ctx.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f121_arithmetic() {
        let ctx = FqCtx::with_modulus(11, vec![3, 0, 1]).unwrap(); // T^2 + 3
        let t = ctx.gen();
        let t2 = t.ref_mul(&t);
        assert_eq!(t2, ctx.from_fp(Fp::new(-3, 11)));
        let inv = t.inv().unwrap();
        assert!(t.ref_mul(&inv).is_one());
        assert_eq!(ctx.q(), 121);
    }

    #[test]
    fn canonical_cubic() {
        let ctx = FqCtx::canonical(13, 3).unwrap();
        assert_eq!(ctx.q(), 2197);
        let g = ctx.gen();
        // multiplicative order divides q-1 and element is invertible
        assert!(g.pow(ctx.q() - 1).is_one());
        // every element round-trips through its index
        for idx in [0u64, 1, 12, 13, 2196] {
            assert_eq!(ctx.from_index(idx).index(), idx);
        }
    }

    #[test]
    fn chi_counts_squares() {
        let ctx = FqCtx::canonical(7, 2).unwrap();
        let mut squares = 0;
        for i in 0..ctx.q() {
            if ctx.from_index(i).chi() == 1 {
                squares += 1;
            }
        }
        assert_eq!(squares, (ctx.q() - 1) / 2);
    }
}
