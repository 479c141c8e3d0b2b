//! Etale algebras K[T]/(h) for monic separable h of degree <= 6, and their
//! elements. Nesting two levels gives the working algebras for Richelot
//! computations over non-split factorizations.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{AResult, AlgebraError};

use super::field::Field;
use super::poly::Poly;
use super::rational::Rat;

pub const ETALE_DEGREE_CAP: usize = 6;

#[derive(Debug)]
pub struct EtaleCtx<K: Field> {
    modulus: Poly<K>,
    factors: OnceLock<Vec<Poly<K>>>,
}

impl<K: Field> PartialEq for EtaleCtx<K> {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

pub type Etale<K> = Arc<EtaleCtx<K>>;

/// Element of K[T]/(h): the reduced representative polynomial.
#[derive(Clone)]
pub struct EtaleElem<K: Field> {
    pub ctx: Etale<K>,
    rep: Poly<K>,
}

impl<K: Field> EtaleCtx<K> {
    pub fn new(modulus: Poly<K>) -> AResult<Etale<K>> {
        let deg = modulus
            .degree()
            .ok_or_else(|| AlgebraError::Other("zero modulus".into()))?;
        if deg == 0 || deg > ETALE_DEGREE_CAP {
            return Err(AlgebraError::UnsupportedDegree { degree: deg, cap: ETALE_DEGREE_CAP });
        }
        let modulus = modulus.monic()?;
        if deg > 1 {
            let disc = modulus.discriminant()?;
            if disc.is_zero() {
                return Err(AlgebraError::Other("inseparable modulus".into()));
            }
        }
        Ok(Arc::new(EtaleCtx { modulus, factors: OnceLock::new() }))
    }

    pub fn modulus(&self) -> &Poly<K> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    fn ex(&self) -> &K {
        self.modulus.lc().unwrap()
    }
}

impl<K: Field> EtaleElem<K> {
    pub fn new(ctx: &Etale<K>, rep: Poly<K>) -> Self {
        let rep = rep.rem(ctx.modulus()).expect("monic modulus");
        EtaleElem { ctx: Arc::clone(ctx), rep }
    }

    /// The image of T.
    pub fn gen(ctx: &Etale<K>) -> Self {
        Self::new(ctx, Poly::x_like(ctx.ex()))
    }

    pub fn from_base(ctx: &Etale<K>, v: K) -> Self {
        Self::new(ctx, Poly::constant(v))
    }

    pub fn rep(&self) -> &Poly<K> {
        &self.rep
    }

    /// Base-field value when the representative is constant.
    pub fn descend(&self) -> Option<K> {
        match self.rep.degree() {
            None => Some(self.ctx.ex().zero_like()),
            Some(0) => Some(self.rep.coeffs()[0].clone()),
            _ => None,
        }
    }

    fn same_ctx(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.modulus == other.ctx.modulus
    }

    /// Characteristic polynomial of multiplication by self, degree n, monic,
    /// returned low-to-high over K.
    pub fn char_poly(&self) -> AResult<Poly<K>> {
        let n = self.ctx.degree();
        let ex = self.ctx.ex();
        // multiplication matrix: columns are self * T^j reduced mod h
        let mut cols: Vec<Vec<K>> = Vec::with_capacity(n);
        let mut cur = self.rep.clone();
        for j in 0..n {
            if j > 0 {
                cur = cur
                    .mul(&Poly::x_like(ex))
                    .rem(self.ctx.modulus())
                    .expect("monic modulus");
            }
            let mut col = Vec::with_capacity(n);
            for i in 0..n {
                col.push(cur.coeff_or_zero(i, ex));
            }
            cols.push(col);
        }
        // entries of lambda*I - M as linear polynomials in lambda
        let mut mat: Vec<Vec<Poly<K>>> = vec![vec![Poly::zero(); n]; n];
        for (j, col) in cols.iter().enumerate() {
            for (i, mij) in col.iter().enumerate() {
                let mut c = vec![mij.ref_neg()];
                if i == j {
                    c.push(ex.one_like());
                }
                mat[i][j] = Poly::new(c);
            }
        }
        Ok(det_poly(&mat))
    }

    pub fn norm(&self) -> AResult<K> {
        let cp = self.char_poly()?;
        let n = self.ctx.degree();
        let c0 = cp.coeff_or_zero(0, self.ctx.ex());
        // char poly = prod (lambda - mu_i): constant = (-1)^n prod mu_i
        Ok(if n % 2 == 1 { c0.ref_neg() } else { c0 })
    }

    /// Conjugate in a quadratic algebra T^2 - t1 T + n0: T -> t1 - T.
    pub fn conjugate_quadratic(&self) -> AResult<Self> {
        if self.ctx.degree() != 2 {
            return Err(AlgebraError::Other("conjugate needs a quadratic modulus".into()));
        }
        let ex = self.ctx.ex();
        let t1 = self.ctx.modulus().coeff_or_zero(1, ex).ref_neg();
        let image = Poly::new(vec![t1, ex.int_like(-1)]);
        Ok(Self::new(&self.ctx, self.rep.compose(&image)))
    }
}

/// Determinant of a small matrix of polynomials by Laplace expansion.
fn det_poly<K: Field>(m: &[Vec<Poly<K>>]) -> Poly<K> {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<K>>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&jj| jj != j)
                    .map(|jj| m[i][jj].clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&det_poly(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

impl<K: Field> PartialEq for EtaleElem<K> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ctx(other) && self.rep == other.rep
    }
}

impl<K: Field> fmt::Debug for EtaleElem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Etale({} mod {})", self.rep, self.ctx.modulus)
    }
}

impl<K: Field> fmt::Display for EtaleElem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl<K: Field> Field for EtaleElem<K> {
    fn zero_like(&self) -> Self {
        EtaleElem { ctx: Arc::clone(&self.ctx), rep: Poly::zero() }
    }
    fn one_like(&self) -> Self {
        EtaleElem {
            ctx: Arc::clone(&self.ctx),
            rep: Poly::constant(self.ctx.ex().one_like()),
        }
    }
    fn int_like(&self, n: i64) -> Self {
        EtaleElem {
            ctx: Arc::clone(&self.ctx),
            rep: Poly::constant(self.ctx.ex().int_like(n)),
        }
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn ref_add(&self, other: &Self) -> Self {
        debug_assert!(self.same_ctx(other));
        EtaleElem { ctx: Arc::clone(&self.ctx), rep: self.rep.add(&other.rep) }
    }
    fn ref_sub(&self, other: &Self) -> Self {
        debug_assert!(self.same_ctx(other));
        EtaleElem { ctx: Arc::clone(&self.ctx), rep: self.rep.sub(&other.rep) }
    }
    fn ref_mul(&self, other: &Self) -> Self {
        debug_assert!(self.same_ctx(other));
        let rep = self
            .rep
            .mul(&other.rep)
            .rem(self.ctx.modulus())
            .expect("monic modulus");
        EtaleElem { ctx: Arc::clone(&self.ctx), rep }
    }
    fn ref_neg(&self) -> Self {
        EtaleElem { ctx: Arc::clone(&self.ctx), rep: self.rep.neg() }
    }
    fn inv(&self) -> AResult<Self> {
        if self.rep.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (g, s, _) = self.rep.ext_gcd(self.ctx.modulus())?;
        if g.degree() != Some(0) {
            return Err(AlgebraError::ZeroDivisor { factor: g.to_string() });
        }
        Ok(EtaleElem::new(&self.ctx, s))
    }
    fn characteristic(&self) -> u64 {
        self.ctx.ex().characteristic()
    }
}

/// CRT combination in K[T]/(h) from residues modulo the pairwise coprime
/// factors of h.
pub fn crt_combine<K: Field>(
    ctx: &Etale<K>,
    parts: &[(Poly<K>, Poly<K>)], // (factor, residue)
) -> AResult<EtaleElem<K>> {
    let ex = ctx.ex();
    let mut acc = Poly::zero();
    for (hi, ri) in parts {
        let cofactor = ctx.modulus().div_exact(hi)?;
        let (g, s, _) = cofactor.ext_gcd(hi)?;
        if g.degree() != Some(0) {
            return Err(AlgebraError::Other("CRT factors not coprime".into()));
        }
        // cofactor * s = 1 mod hi, = 0 mod other factors
        let idem = cofactor.mul(&s).rem(ctx.modulus())?;
        acc = acc.add(&idem.mul(ri)).rem(ctx.modulus())?;
    }
    let _ = ex;
    Ok(EtaleElem::new(ctx, acc))
}

/// Cached factorization over Q for the squareness machinery.
impl EtaleCtx<Rat> {
    pub fn factors_over_q(&self) -> AResult<&[Poly<Rat>]> {
        if let Some(f) = self.factors.get() {
            return Ok(f);
        }
        let fact = super::factor::factor_over_q(&self.modulus)?;
        let mut out = Vec::new();
        for (p, m) in fact {
            if m > 1 {
                return Err(AlgebraError::Other("inseparable modulus".into()));
            }
            out.push(p);
        }
        let _ = self.factors.set(out);
        Ok(self.factors.get().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_int};

    fn qpoly(v: &[i64]) -> Poly<Rat> {
        Poly::from_ints(&rat_int(0), v)
    }

    #[test]
    fn cube_root_of_two() {
        // Q[T]/(T^3 - 2): inverse of beta is beta^2/2
        let ctx = EtaleCtx::new(qpoly(&[-2, 0, 0, 1])).unwrap();
        let b = EtaleElem::gen(&ctx);
        let inv = b.inv().unwrap();
        assert_eq!(inv.rep(), &Poly::new(vec![rat_int(0), rat_int(0), rat(1, 2)]));
        assert!(b.ref_mul(&inv).is_one());
        // char_poly(beta) = modulus
        assert_eq!(b.char_poly().unwrap(), qpoly(&[-2, 0, 0, 1]));
    }

    #[test]
    fn zero_divisor_reports_factor() {
        // Q[T]/((T-1)(T-2)): T-1 is a zero divisor
        let ctx = EtaleCtx::new(qpoly(&[2, -3, 1])).unwrap();
        let t = EtaleElem::gen(&ctx);
        let zd = t.ref_sub(&t.one_like());
        match zd.inv() {
            Err(AlgebraError::ZeroDivisor { factor }) => {
                assert!(factor.contains("-1"));
            }
            other => panic!("expected zero divisor, got {other:?}"),
        }
    }

    #[test]
    fn char_poly_of_sum() {
        // in Q[T]/(T^2-2), char poly of 1+T is x^2-2x-1
        let ctx = EtaleCtx::new(qpoly(&[-2, 0, 1])).unwrap();
        let b = EtaleElem::gen(&ctx);
        let e = b.ref_add(&b.one_like());
        assert_eq!(e.char_poly().unwrap(), qpoly(&[-1, -2, 1]));
        assert_eq!(e.norm().unwrap(), rat_int(-1));
        // conjugation
        let c = e.conjugate_quadratic().unwrap();
        assert_eq!(e.ref_mul(&c).descend().unwrap(), rat_int(-1));
    }

    #[test]
    fn crt_roundtrip() {
        let ctx = EtaleCtx::new(qpoly(&[2, -3, 1])).unwrap(); // (T-1)(T-2)
        let parts = vec![
            (qpoly(&[-1, 1]), qpoly(&[5])),
            (qpoly(&[-2, 1]), qpoly(&[7])),
        ];
        let e = crt_combine(&ctx, &parts).unwrap();
        // e = 5 at T=1 and 7 at T=2 -> rep = 2T + 3
        assert_eq!(e.rep(), &qpoly(&[3, 2]));
    }
}
