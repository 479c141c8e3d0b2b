//! Dense univariate polynomials over any supported scalar field.
//! Coefficients run low to high; the zero polynomial is the empty vector.

use std::fmt;

use crate::error::{AResult, AlgebraError};

use super::field::Field;

#[derive(Clone, PartialEq)]
pub struct Poly<K: Field> {
    c: Vec<K>,
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{self}")
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "[0]");
        }
        write!(f, "[")?;
        for (i, v) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl<K: Field> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { c: coeffs }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(v: K) -> Self {
        Poly::new(vec![v])
    }

    /// c * x^n
    pub fn monomial(v: K, n: usize) -> Self {
        if v.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![v.zero_like(); n + 1];
        c[n] = v;
        Poly { c }
    }

    /// The polynomial x, in the field of the exemplar.
    pub fn x_like(ex: &K) -> Self {
        Poly { c: vec![ex.zero_like(), ex.one_like()] }
    }

    pub fn from_ints(ex: &K, ints: &[i64]) -> Self {
        Poly::new(ints.iter().map(|&n| ex.int_like(n)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Option<&K> {
        self.c.get(i)
    }

    /// Coefficient of x^i, materialized with the exemplar's zero if absent.
    pub fn coeff_or_zero(&self, i: usize, ex: &K) -> K {
        self.c.get(i).cloned().unwrap_or_else(|| ex.zero_like())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn lc(&self) -> Option<&K> {
        self.c.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.c.get(i), other.c.get(i)) {
                (Some(a), Some(b)) => a.ref_add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|v| v.ref_neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let z = self.c[0].zero_like();
        let mut out = vec![z; self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] = out[i + j].ref_add(&a.ref_mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn mul_scalar(&self, s: &K) -> Self {
        Poly::new(self.c.iter().map(|v| v.ref_mul(s)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        if e == 0 {
            let one = self
                .c
                .first()
                .map(|v| v.one_like())
                .expect("pow(0) of zero polynomial needs an exemplar");
            return Poly::constant(one);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn divrem(&self, d: &Self) -> AResult<(Self, Self)> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |n| n < dd) {
            return Ok((Poly::zero(), self.clone()));
        }
        let lcinv = d.lc().unwrap().inv()?;
        let mut rem = self.c.clone();
        let n = rem.len() - 1;
        let mut quot = vec![self.c[0].zero_like(); n - dd + 1];
        for i in (dd..=n).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].ref_mul(&lcinv);
            quot[i - dd] = q.clone();
            for (j, dc) in d.c.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].ref_sub(&q.ref_mul(dc));
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn div_exact(&self, d: &Self) -> AResult<Self> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(AlgebraError::InexactDivision(format!("{self} by {d}")));
        }
        Ok(q)
    }

    pub fn rem(&self, d: &Self) -> AResult<Self> {
        Ok(self.divrem(d)?.1)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> AResult<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// Extended gcd: (g, s, t) with g = s*self + t*other, g monic (or zero).
    pub fn ext_gcd(&self, other: &Self) -> AResult<(Self, Self, Self)> {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let ex = self
            .c
            .first()
            .or_else(|| other.c.first())
            .cloned()
            .ok_or(AlgebraError::DivisionByZero)?;
        let (mut s0, mut s1) = (Poly::constant(ex.one_like()), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::constant(ex.one_like()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let li = r0.lc().unwrap().inv()?;
        Ok((
            r0.mul_scalar(&li),
            s0.mul_scalar(&li),
            t0.mul_scalar(&li),
        ))
    }

    pub fn monic(&self) -> AResult<Self> {
        match self.lc() {
            None => Ok(self.clone()),
            Some(l) => {
                let li = l.inv()?;
                Ok(self.mul_scalar(&li))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, v) in self.c.iter().enumerate().skip(1) {
            out.push(v.ref_mul(&v.int_like(i as i64)));
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = x.zero_like();
        for v in self.c.iter().rev() {
            acc = acc.ref_mul(x).ref_add(v);
        }
        acc
    }

    /// Horner evaluation of self at a value in a larger field, coefficients
    /// lifted through `lift`.
    pub fn eval_lift<L: Field>(&self, x: &L, lift: impl Fn(&K) -> L) -> L {
        let mut acc = x.zero_like();
        for v in self.c.iter().rev() {
            acc = acc.ref_mul(x).ref_add(&lift(v));
        }
        acc
    }

    /// Substitute another polynomial for x.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero();
        for v in self.c.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(v.clone()));
        }
        acc
    }

    /// x -> -x
    pub fn sub_neg_x(&self) -> Self {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .map(|(i, v)| if i % 2 == 1 { v.ref_neg() } else { v.clone() })
                .collect(),
        )
    }

    /// Reversal as a form of the given degree: x^deg * f(1/x).
    /// Requires deg >= degree of f.
    pub fn reverse_as(&self, deg: usize) -> Self {
        let ex = match self.c.first() {
            None => return Poly::zero(),
            Some(v) => v,
        };
        let mut out = vec![ex.zero_like(); deg + 1];
        for (i, v) in self.c.iter().enumerate() {
            assert!(i <= deg, "reverse_as degree too small");
            out[deg - i] = v.clone();
        }
        Poly::new(out)
    }

    pub fn is_separable(&self) -> AResult<bool> {
        let g = self.gcd(&self.derivative())?;
        Ok(g.degree() == Some(0))
    }

    /// f / gcd(f, f'), monic.
    pub fn squarefree_part(&self) -> AResult<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let g = self.gcd(&self.derivative())?;
        if g.is_zero() {
            // derivative vanished identically (p-th power in char p)
            return self.monic();
        }
        self.div_exact(&g)?.monic()
    }

    /// Resultant via the Euclidean remainder sequence.
    /// Res(x-a, x-b) = b-a under this normalization.
    pub fn resultant(&self, other: &Self) -> AResult<K> {
        if self.is_zero() || other.is_zero() {
            return Err(AlgebraError::Other("resultant of zero polynomial".into()));
        }
        let ex = self.c[0].clone();
        let mut a = self.clone();
        let mut b = other.clone();
        let mut degs = vec![a.degree().unwrap()];
        let mut lcs = vec![a.lc().unwrap().clone()];
        while b.degree().map_or(false, |d| d > 0) {
            let r = a.rem(&b)?;
            a = b;
            b = r;
            degs.push(a.degree().unwrap());
            lcs.push(a.lc().unwrap().clone());
        }
        // b is now a constant (possibly zero)
        let last = if b.is_zero() {
            return Ok(ex.zero_like());
        } else {
            b.c[0].clone()
        };
        let mut sign = 0usize;
        for w in degs.windows(2) {
            sign += w[0] * w[1];
        }
        let mut res = last_pow(&last, *degs.last().unwrap());
        if sign % 2 == 1 {
            res = res.ref_neg();
        }
        degs.push(0);
        for i in 1..lcs.len() {
            let e = degs[i - 1] - degs[i + 1];
            res = res.ref_mul(&last_pow(&lcs[i], e));
        }
        return Ok(res);

        fn last_pow<K: Field>(v: &K, e: usize) -> K {
            let mut acc = v.one_like();
            for _ in 0..e {
                acc = acc.ref_mul(v);
            }
            acc
        }
    }

    /// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f).
    pub fn discriminant(&self) -> AResult<K> {
        let d = self
            .degree()
            .ok_or_else(|| AlgebraError::Other("discriminant of zero polynomial".into()))?;
        if d == 0 {
            return Err(AlgebraError::Other("discriminant of constant".into()));
        }
        let fp = self.derivative();
        if fp.is_zero() {
            return Ok(self.c[0].zero_like());
        }
        let r = self.resultant(&fp)?;
        let r = r.ref_div(self.lc().unwrap())?;
        if (d * (d - 1) / 2) % 2 == 1 {
            Ok(r.ref_neg())
        } else {
            Ok(r)
        }
    }

    /// Map coefficients into another field.
    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::new(self.c.iter().map(f).collect())
    }

    pub fn try_map_coeffs<L: Field, E>(&self, f: impl Fn(&K) -> Result<L, E>) -> Result<Poly<L>, E> {
        let mut out = Vec::with_capacity(self.c.len());
        for v in &self.c {
            out.push(f(v)?);
        }
        Ok(Poly::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat_int, Rat};

    fn q(v: &[i64]) -> Poly<Rat> {
        Poly::new(v.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn arith_and_gcd() {
        // gcd(x^2-1, x^2-2x+1) = x-1
        let a = q(&[-1, 0, 1]);
        let b = q(&[1, -2, 1]);
        assert_eq!(a.gcd(&b).unwrap(), q(&[-1, 1]));
        // (x^2+1)(x^2-1) = x^4-1
        assert_eq!(q(&[1, 0, 1]).mul(&q(&[-1, 0, 1])), q(&[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn resultant_conventions() {
        // Res(x-2, x-3) = -1
        assert_eq!(q(&[-2, 1]).resultant(&q(&[-3, 1])).unwrap(), rat_int(-1));
        // Res(x^2+1, x^2-1) = 4
        assert_eq!(q(&[1, 0, 1]).resultant(&q(&[-1, 0, 1])).unwrap(), rat_int(4));
    }

    #[test]
    fn resultant_swap_and_multiplicativity() {
        let f = q(&[3, -1, 0, 2]);
        let g = q(&[1, 4, 1]);
        let h = q(&[-2, 0, 5, 1]);
        let rfg = f.resultant(&g).unwrap();
        let rgf = g.resultant(&f).unwrap();
        // Res(f,g) = (-1)^{deg f deg g} Res(g,f)
        let expect = if (3 * 2) % 2 == 1 { rgf.ref_neg() } else { rgf };
        assert_eq!(rfg, expect);
        // Res(f, g*h) = Res(f,g) Res(f,h)
        let rfh = f.resultant(&h).unwrap();
        let rfgh = f.resultant(&g.mul(&h)).unwrap();
        assert_eq!(rfgh, rfg.ref_mul(&rfh));
    }

    #[test]
    fn discriminants() {
        // disc(x^2+bx+c) = b^2-4c with b=3, c=5 -> 9-20 = -11
        assert_eq!(q(&[5, 3, 1]).discriminant().unwrap(), rat_int(-11));
        // disc(x^3 - x) = 4  (roots 0, 1, -1: prod of squared diffs)
        assert_eq!(q(&[0, -1, 0, 1]).discriminant().unwrap(), rat_int(4));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = q(&[1, 0, 1]);
        let b = q(&[-1, 1]);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(g, s.mul(&a).add(&t.mul(&b)));
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn division() {
        let a = q(&[-1, 0, 0, 0, 1]);
        let b = q(&[-1, 0, 1]);
        let (quo, rem) = a.divrem(&b).unwrap();
        assert_eq!(quo, q(&[1, 0, 1]));
        assert!(rem.is_zero());
    }
}
