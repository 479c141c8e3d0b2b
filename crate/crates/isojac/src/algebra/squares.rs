//! Squareness tests: rational square roots of polynomials and rational
//! functions, rational root search with the divisor height cutoff, and the
//! square test in etale algebras over Q with components of degree <= 3.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{AResult, AlgebraError};

use super::etale::{crt_combine, EtaleElem};
use super::field::Field;
use super::fp::Fp;
use super::frac::Fr;
use super::intops::divisors_bounded;
use super::poly::Poly;
use super::rational::{is_square_rational, rat_one, rat_zero, Rat};

/// Rational roots of a rational-coefficient polynomial, via divisor
/// enumeration on the integerized ends. Exceeding the height cutoff is an
/// error, never a silent miss.
pub fn rational_roots(f: &Poly<Rat>) -> AResult<Vec<Rat>> {
    let mut f = f.clone();
    let mut roots = Vec::new();
    if f.is_zero() {
        return Err(AlgebraError::Other("rational roots of zero polynomial".into()));
    }
    // deflate roots at zero
    while f.coeff_or_zero(0, &rat_zero()).is_zero() && f.degree() > Some(0) {
        roots.push(rat_zero());
        f = f.div_exact(&Poly::x_like(&rat_zero()))?;
    }
    if f.degree() == Some(0) || f.degree().is_none() {
        return Ok(roots);
    }
    // integerize
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = num_integer::lcm(den.clone(), c.denom().clone());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    let ps = divisors_bounded(&a0)?;
    let qs = divisors_bounded(&an)?;
    for p in &ps {
        for q in &qs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

/// Decompose f = alpha * A^2 with A monic, if possible.
pub fn poly_sqrt_up_to_constant(f: &Poly<Rat>) -> Option<(Poly<Rat>, Rat)> {
    let deg = f.degree()?;
    if deg % 2 != 0 {
        return None;
    }
    let lcv = f.lc().unwrap().clone();
    let fm = f.monic().ok()?;
    let m = deg / 2;
    let one: Rat = rat_one();
    let mut a = vec![rat_zero(); m + 1];
    a[m] = one.clone();
    // match coefficients from the top: f_{2m-k} determines a_{m-k}
    for k in 1..=m {
        // coefficient of x^{2m-k} in A^2 using known a_{m}, ..., a_{m-k+1}
        let mut acc = rat_zero();
        for i in 1..k {
            let (x, y) = (m - i, m - k + i);
            acc += &a[x] * &a[y];
        }
        let target = fm.coeff_or_zero(2 * m - k, &one);
        a[m - k] = (target - acc) / BigRational::from_integer(BigInt::from(2));
    }
    let cand = Poly::new(a);
    if cand.mul(&cand) == fm {
        Some((cand, lcv))
    } else {
        None
    }
}

/// Square root of f in Q[x] exactly, if one exists.
pub fn poly_sqrt(f: &Poly<Rat>) -> Option<Poly<Rat>> {
    if f.is_zero() {
        return Some(Poly::zero());
    }
    let (a, alpha) = poly_sqrt_up_to_constant(f)?;
    let r = is_square_rational(&alpha)?;
    Some(a.mul_scalar(&r))
}

/// Squareness of an element of Q(x).
pub fn ratfn_is_square(f: &Fr<Rat>) -> bool {
    if f.is_zero() {
        return true;
    }
    let n = poly_sqrt_up_to_constant(f.num());
    let d = poly_sqrt_up_to_constant(f.den());
    match (n, d) {
        (Some((_, an)), Some((_, ad))) => is_square_rational(&(an / ad)).is_some(),
        _ => false,
    }
}

/// Square root in an etale algebra over Q whose modulus factors into
/// components of degree <= 3. Returns a verified root or None.
pub fn is_square_in_etale(alpha: &EtaleElem<Rat>) -> AResult<Option<EtaleElem<Rat>>> {
    let ctx = &alpha.ctx;
    let factors = ctx.factors_over_q()?;
    let mut parts: Vec<(Poly<Rat>, Poly<Rat>)> = Vec::new();
    for h in factors {
        let comp_ctx = super::etale::EtaleCtx::new(h.clone())?;
        let comp = EtaleElem::new(&comp_ctx, alpha.rep().clone());
        let root = match h.degree().unwrap() {
            1 => {
                let v = comp.descend().expect("degree-1 component");
                match is_square_rational(&v) {
                    None => return Ok(None),
                    Some(r) => Poly::constant(r),
                }
            }
            2 => match sqrt_in_quadratic(&comp)? {
                None => return Ok(None),
                Some(r) => r.rep().clone(),
            },
            3 => match sqrt_in_cubic_field(&comp)? {
                None => return Ok(None),
                Some(r) => r.rep().clone(),
            },
            d => {
                return Err(AlgebraError::UnsupportedDegree { degree: d, cap: 3 });
            }
        };
        parts.push((h.clone(), root));
    }
    let sigma = crt_combine(ctx, &parts)?;
    if sigma.ref_mul(&sigma) == *alpha {
        Ok(Some(sigma))
    } else {
        Err(AlgebraError::Other(
            "square-root reconstruction failed verification".into(),
        ))
    }
}

/// Square root of a + b*theta in Q[T]/(T^2 - t1 T + n0), by the closed form:
/// sigma = x + y*theta with 2xy' relations reduced to rational squareness.
fn sqrt_in_quadratic(alpha: &EtaleElem<Rat>) -> AResult<Option<EtaleElem<Rat>>> {
    let ctx = &alpha.ctx;
    let zero: Rat = rat_zero();
    let two = BigRational::from_integer(BigInt::from(2));
    // normalize modulus to theta^2 = d by completing the square:
    // T = theta + t1/2, theta^2 = t1^2/4 - n0
    let t1 = ctx.modulus().coeff_or_zero(1, &zero).ref_neg();
    let n0 = ctx.modulus().coeff_or_zero(0, &zero);
    let d = &t1 * &t1 / &two / &two - n0;
    let b = alpha.rep().coeff_or_zero(1, &zero);
    let a = alpha.rep().coeff_or_zero(0, &zero) + &b * &t1 / &two;
    // want (x + y theta)^2 = a + b theta: x^2 + y^2 d = a, 2xy = b
    let build = |x: &Rat, y: &Rat| -> EtaleElem<Rat> {
        // back-substitute theta = T - t1/2
        let c0 = x - y * &t1 / &two;
        EtaleElem::new(ctx, Poly::new(vec![c0, y.clone()]))
    };
    if b.is_zero() {
        if let Some(x) = is_square_rational(&a) {
            return Ok(Some(build(&x, &zero)));
        }
        if !d.is_zero() {
            if let Some(y) = is_square_rational(&(&a / &d)) {
                return Ok(Some(build(&zero, &y)));
            }
        }
        return Ok(None);
    }
    // x^2 = (a +- sqrt(a^2 - b^2 d)) / 2, y = b/(2x)
    let disc = &a * &a - &b * &b * &d;
    let sq = match is_square_rational(&disc) {
        None => return Ok(None),
        Some(s) => s,
    };
    for sign in [1i64, -1] {
        let x2 = (&a + BigRational::from_integer(BigInt::from(sign)) * &sq) / &two;
        if let Some(x) = is_square_rational(&x2) {
            if !x.is_zero() {
                let y = &b / (&two * &x);
                let cand = build(&x, &y);
                if cand.ref_mul(&cand) == *alpha {
                    return Ok(Some(cand));
                }
            }
        }
    }
    Ok(None)
}

/// Square root in a cubic field via characteristic polynomials:
/// a root sigma of alpha has char poly lambda^3 - e1 l^2 + e2 l - e3 with
/// e3^2 = p3, e1^2 - 2 e2 = p1, e2^2 - 2 e1 e3 = p2; solve the quartic in e1
/// over Q and recover sigma = (e1 alpha + e3)/(alpha + e2).
fn sqrt_in_cubic_field(alpha: &EtaleElem<Rat>) -> AResult<Option<EtaleElem<Rat>>> {
    let zero: Rat = rat_zero();
    let cp = alpha.char_poly()?;
    let p1 = cp.coeff_or_zero(2, &zero).ref_neg();
    let p2 = cp.coeff_or_zero(1, &zero);
    let p3 = cp.coeff_or_zero(0, &zero).ref_neg();
    // rational alpha: char poly (l - a)^3; in an odd-degree field squareness
    // descends to Q
    if let Some(a) = alpha.descend() {
        return Ok(is_square_rational(&a)
            .map(|r| EtaleElem::from_base(&alpha.ctx, r)));
    }
    let e3abs = match is_square_rational(&p3) {
        None => return Ok(None),
        Some(r) => r,
    };
    let two = BigRational::from_integer(BigInt::from(2));
    for sign in [1i64, -1] {
        let e3 = &e3abs * BigRational::from_integer(BigInt::from(sign));
        // (e1^2 - p1)^2 = 4 p2 + 8 e3 e1
        let quartic = Poly::new(vec![
            &p1 * &p1 - BigRational::from_integer(BigInt::from(4)) * &p2,
            BigRational::from_integer(BigInt::from(-8)) * &e3,
            -&two * &p1,
            rat_zero(),
            rat_one(),
        ]);
        for e1 in rational_roots(&quartic)? {
            let e2 = (&e1 * &e1 - &p1) / &two;
            let den = alpha.ref_add(&EtaleElem::from_base(&alpha.ctx, e2.clone()));
            let inv = match den.inv() {
                Ok(v) => v,
                Err(_) => continue, // alpha + e2 not invertible; other branch covers
            };
            let num = alpha
                .ref_mul(&EtaleElem::from_base(&alpha.ctx, e1.clone()))
                .ref_add(&EtaleElem::from_base(&alpha.ctx, e3.clone()));
            let cand = num.ref_mul(&inv);
            if cand.ref_mul(&cand) == *alpha {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

/// Finite-field oracle: squareness of alpha's image in (Q[T]/(h)) x F_p,
/// when h stays separable with the same factorization shape mod p.
/// Returns None when p is unusable.
pub fn mod_p_square_oracle(h: &Poly<Rat>, alpha_rep: &Poly<Rat>, p: u64) -> Option<bool> {
    let to_fp = |q: &Rat| -> Option<Fp> {
        let den = q.denom();
        let dm = num_integer::Integer::mod_floor(den, &BigInt::from(p));
        if num_traits::Zero::is_zero(&dm) {
            return None;
        }
        let num = num_integer::Integer::mod_floor(q.numer(), &BigInt::from(p));
        let n = u64::try_from(num).ok()?;
        let d = u64::try_from(dm).ok()?;
        let dinv = Fp::from_u64(d, p).inv().ok()?;
        Some(Fp::from_u64(n, p).ref_mul(&dinv))
    };
    let hp = h.try_map_coeffs(|c| to_fp(c).ok_or(())).ok()?;
    if hp.degree() != h.degree() {
        return None;
    }
    let sep = hp.gcd(&hp.derivative()).ok()?;
    if sep.degree() != Some(0) {
        return None;
    }
    let ap = alpha_rep.try_map_coeffs(|c| to_fp(c).ok_or(())).ok()?;
    let factors = super::factor::factor_over_fp(&hp).ok()?;
    for (hi, _) in factors {
        let d = hi.degree().unwrap();
        let residue = ap.rem(&hi).ok()?;
        if residue.is_zero() {
            return None; // alpha degenerate mod p
        }
        // chi in F_{p^d} via the quotient ring power (p^d - 1)/2
        let q: u128 = (0..d).fold(1u128, |acc, _| acc * p as u128);
        let e = (q - 1) / 2;
        let mut acc = Poly::constant(Fp::from_u64(1, p));
        let mut base = residue.clone();
        let mut ee = e;
        while ee > 0 {
            if ee & 1 == 1 {
                acc = acc.mul(&base).rem(&hi).ok()?;
            }
            base = base.mul(&base).rem(&hi).ok()?;
            ee >>= 1;
        }
        if acc.degree() != Some(0) || acc.coeffs()[0].v != 1 {
            return Some(false);
        }
    }
    Some(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::etale::EtaleCtx;
    use crate::algebra::rational::{rat, rat_int};

    fn q(v: &[i64]) -> Poly<Rat> {
        Poly::from_ints(&rat_int(0), v)
    }

    #[test]
    fn rational_root_search() {
        // 6x^3 - x^2 - 4x - something with roots 1/2, -2/3... take (2x-1)(3x+2)(x-5)
        let f = q(&[-1, 2]).mul(&q(&[2, 3])).mul(&q(&[-5, 1]));
        let mut r = rational_roots(&f).unwrap();
        r.sort();
        assert_eq!(r, vec![rat(-2, 3), rat(1, 2), rat_int(5)]);
    }

    #[test]
    fn poly_square_roots() {
        let a = q(&[1, 2, 3]);
        let f = a.mul(&a).mul_scalar(&rat_int(9));
        let r = poly_sqrt(&f).unwrap();
        assert_eq!(r.mul(&r), f);
        assert!(poly_sqrt(&q(&[0, 1])).is_none());
        let (m, alpha) = poly_sqrt_up_to_constant(&a.mul(&a).mul_scalar(&rat_int(7))).unwrap();
        assert_eq!(alpha, rat_int(63));
        assert_eq!(m.mul(&m).mul_scalar(&alpha), a.mul(&a).mul_scalar(&rat_int(7)));
    }

    #[test]
    fn square_in_quadratic_field() {
        // 2 is a square in Q[T]/(T^2-2): sigma = T
        let ctx = EtaleCtx::new(q(&[-2, 0, 1])).unwrap();
        let two = EtaleElem::from_base(&ctx, rat_int(2));
        let r = is_square_in_etale(&two).unwrap().unwrap();
        assert_eq!(r.ref_mul(&r), two);
        // 3 is not
        let three = EtaleElem::from_base(&ctx, rat_int(3));
        assert!(is_square_in_etale(&three).unwrap().is_none());
        // (1+T)^2 round trip
        let t = EtaleElem::gen(&ctx);
        let s = t.ref_add(&t.one_like());
        let sq = s.ref_mul(&s);
        let r2 = is_square_in_etale(&sq).unwrap().unwrap();
        assert_eq!(r2.ref_mul(&r2), sq);
    }

    #[test]
    fn square_in_cubic_field() {
        // Q[T]/(T^3-2): (1+T)^2 is a square, T is not
        let ctx = EtaleCtx::new(q(&[-2, 0, 0, 1])).unwrap();
        let t = EtaleElem::gen(&ctx);
        let s = t.ref_add(&t.one_like());
        let sq = s.ref_mul(&s);
        let r = is_square_in_etale(&sq).unwrap().unwrap();
        assert_eq!(r.ref_mul(&r), sq);
        assert!(is_square_in_etale(&t).unwrap().is_none());
        // rational non-square stays non-square in odd degree
        let five = EtaleElem::from_base(&ctx, rat_int(5));
        assert!(is_square_in_etale(&five).unwrap().is_none());
        let four = EtaleElem::from_base(&ctx, rat_int(4));
        let r4 = is_square_in_etale(&four).unwrap().unwrap();
        assert_eq!(r4.descend().unwrap(), rat_int(2));
    }

    #[test]
    fn split_algebra_square() {
        // Q[T]/((T-1)(T-2)(T-3)): component-wise squares
        let m = q(&[-1, 1]).mul(&q(&[-2, 1])).mul(&q(&[-3, 1]));
        let ctx = EtaleCtx::new(m).unwrap();
        let t = EtaleElem::gen(&ctx);
        let sq = t.ref_mul(&t); // components 1, 4, 9 -> all squares
        let r = is_square_in_etale(&sq).unwrap().unwrap();
        assert_eq!(r.ref_mul(&r), sq);
        // component values 1, 2, 3: 2 not a square -> None
        assert!(is_square_in_etale(&t).unwrap().is_none());
    }

    #[test]
    fn oracle_consistency() {
        let ctx = EtaleCtx::new(q(&[-2, 0, 0, 1])).unwrap();
        let t = EtaleElem::gen(&ctx);
        let s = t.ref_add(&t.int_like(3));
        let sq = s.ref_mul(&s);
        let mut used = 0;
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29] {
            if let Some(ans) = mod_p_square_oracle(ctx.modulus(), sq.rep(), p) {
                assert!(ans, "square must reduce to a square mod {p}");
                used += 1;
            }
        }
        assert!(used > 3);
    }
}
