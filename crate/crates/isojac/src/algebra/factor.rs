//! Polynomial factorization into irreducibles, over prime fields
//! (distinct-degree plus equal-degree splitting) and over the rationals
//! (Hensel lifting with subset recombination). Degree is capped at 8;
//! nothing in the constructions needs more.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AResult, AlgebraError};

use super::field::Field;
use super::fp::Fp;
use super::poly::Poly;
use super::rational::Rat;

pub const FACTOR_DEGREE_CAP: usize = 8;

// ---------------------------------------------------------------------------
// prime fields
// ---------------------------------------------------------------------------

fn powmod_poly(base: &Poly<Fp>, mut e: u128, m: &Poly<Fp>) -> AResult<Poly<Fp>> {
    let ex = m.lc().unwrap();
    let mut acc = Poly::constant(ex.one_like());
    let mut b = base.rem(m)?;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(m)?;
        }
        b = b.mul(&b).rem(m)?;
        e >>= 1;
    }
    Ok(acc)
}

/// Monic irreducible factors with multiplicity over F_p.
pub fn factor_over_fp(f: &Poly<Fp>) -> AResult<Vec<(Poly<Fp>, usize)>> {
    let deg = f
        .degree()
        .ok_or_else(|| AlgebraError::Other("factor of zero polynomial".into()))?;
    if deg > FACTOR_DEGREE_CAP {
        return Err(AlgebraError::UnsupportedDegree { degree: deg, cap: FACTOR_DEGREE_CAP });
    }
    let mut out: Vec<(Poly<Fp>, usize)> = Vec::new();
    let mut stack = vec![(f.monic()?, 1usize)];
    while let Some((g, mult)) = stack.pop() {
        let d = g.degree().unwrap();
        if d == 0 {
            continue;
        }
        let gp = g.derivative();
        if gp.is_zero() {
            // g = h(x^p); over F_p the coefficients are fixed by Frobenius
            let p = g.lc().unwrap().p as usize;
            let mut hc = Vec::new();
            for (i, c) in g.coeffs().iter().enumerate() {
                if i % p == 0 {
                    hc.push(*c);
                } else if !c.is_zero() {
                    return Err(AlgebraError::Other("inconsistent p-th power".into()));
                }
            }
            stack.push((Poly::new(hc), mult * p));
            continue;
        }
        let sq = g.gcd(&gp)?;
        if sq.degree().map_or(false, |d| d > 0) {
            stack.push((g.div_exact(&sq)?, mult));
            stack.push((sq, mult));
            continue;
        }
        // g squarefree: distinct-degree then equal-degree
        for (irr, _) in factor_squarefree_fp(&g)? {
            merge(&mut out, irr, mult);
        }
    }
    out.sort_by_key(|(p, _)| (p.degree(), format!("{p}")));
    Ok(out)
}

fn merge(out: &mut Vec<(Poly<Fp>, usize)>, p: Poly<Fp>, m: usize) {
    for (q, e) in out.iter_mut() {
        if *q == p {
            *e += m;
            return;
        }
    }
    out.push((p, m));
}

fn factor_squarefree_fp(f: &Poly<Fp>) -> AResult<Vec<(Poly<Fp>, usize)>> {
    let p = f.lc().unwrap().p;
    let ex = *f.lc().unwrap();
    let x = Poly::x_like(&ex);
    let mut rest = f.monic()?;
    let mut out = Vec::new();
    let mut d = 1usize;
    let mut xq = x.clone(); // x^{p^d} mod rest, recomputed per degree
    while rest.degree().map_or(false, |r| r >= 2 * d) {
        xq = powmod_poly(&xq, p as u128, &rest)?;
        let g = rest.gcd(&xq.sub(&x))?;
        if g.degree().map_or(false, |dd| dd > 0) {
            for irr in equal_degree_split(&g, d, p)? {
                out.push((irr, 1));
            }
            rest = rest.div_exact(&g)?;
            xq = xq.rem(&rest)?;
        }
        d += 1;
    }
    if rest.degree().map_or(false, |dd| dd > 0) {
        out.push((rest, 1));
    }
    Ok(out)
}

/// Split a product of distinct irreducibles all of degree d.
fn equal_degree_split(f: &Poly<Fp>, d: usize, p: u64) -> AResult<Vec<Poly<Fp>>> {
    let deg = f.degree().unwrap();
    if deg == d {
        return Ok(vec![f.clone()]);
    }
    let ex = *f.lc().unwrap();
    let e = (pow_u128(p as u128, d as u32) - 1) / 2;
    // deterministic scan over small polynomials u
    let mut attempt = 0u64;
    loop {
        attempt += 1;
        if attempt > 20_000 {
            return Err(AlgebraError::Other("equal-degree splitting stalled".into()));
        }
        let u = poly_from_index(&ex, attempt, 2 * d);
        if u.degree().is_none() {
            continue;
        }
        let w = powmod_poly(&u, e, f)?;
        let wm1 = w.sub(&Poly::constant(ex.one_like()));
        let g = f.gcd(&wm1)?;
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < deg {
                let mut left = equal_degree_split(&g, d, p)?;
                let right = equal_degree_split(&f.div_exact(&g)?, d, p)?;
                left.extend(right);
                return Ok(left);
            }
        }
    }
}

fn pow_u128(b: u128, e: u32) -> u128 {
    let mut acc = 1u128;
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn poly_from_index(ex: &Fp, idx: u64, max_deg: usize) -> Poly<Fp> {
    let p = ex.p;
    let mut c = Vec::new();
    let mut r = idx;
    while r > 0 && c.len() <= max_deg {
        c.push(Fp::from_u64(r % p, p));
        r /= p;
    }
    Poly::new(c)
}

// ---------------------------------------------------------------------------
// rationals
// ---------------------------------------------------------------------------

type ZPoly = Vec<BigInt>;

fn ztrim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

/// Exact division by a monic divisor in Z[x]; None when not divisible.
fn zdiv_monic(a: &ZPoly, d: &ZPoly) -> Option<ZPoly> {
    debug_assert!(d.last().map_or(false, |c| c.is_one()));
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < d.len() {
        return None;
    }
    let mut rem = a.clone();
    let dd = d.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let q = rem[i].clone();
        if q.is_zero() {
            continue;
        }
        quot[i - dd] = q.clone();
        for (j, dc) in d.iter().enumerate() {
            let idx = i - dd + j;
            let t = &q * dc;
            rem[idx] -= t;
        }
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(ztrim(quot))
    } else {
        None
    }
}

fn zcontent(a: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    g
}

fn zprimitive(a: &ZPoly) -> ZPoly {
    let c = zcontent(a);
    if c.is_zero() || c.is_one() {
        return a.clone();
    }
    a.iter().map(|v| v / &c).collect()
}

fn to_zpoly(f: &Poly<Rat>) -> (ZPoly, BigRational) {
    // f = scale * primitive integer poly
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: ZPoly = f.coeffs().iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let cont = zcontent(&ints);
    let prim: ZPoly = if cont.is_zero() {
        ints
    } else {
        ints.iter().map(|v| v / &cont).collect()
    };
    (prim, BigRational::new(cont, den))
}

fn zpoly_to_rat(z: &ZPoly) -> Poly<Rat> {
    Poly::new(z.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

/// Monic irreducible factors with multiplicity over Q.
pub fn factor_over_q(f: &Poly<Rat>) -> AResult<Vec<(Poly<Rat>, usize)>> {
    let deg = f
        .degree()
        .ok_or_else(|| AlgebraError::Other("factor of zero polynomial".into()))?;
    if deg > FACTOR_DEGREE_CAP {
        return Err(AlgebraError::UnsupportedDegree { degree: deg, cap: FACTOR_DEGREE_CAP });
    }
    if deg == 0 {
        return Ok(Vec::new());
    }
    // squarefree decomposition by repeated gcd (char 0)
    let mut out: Vec<(Poly<Rat>, usize)> = Vec::new();
    let mut stack = vec![(f.monic()?, 1usize)];
    while let Some((g, mult)) = stack.pop() {
        if g.degree() == Some(0) {
            continue;
        }
        let sq = g.gcd(&g.derivative())?;
        if sq.degree().map_or(false, |d| d > 0) {
            stack.push((g.div_exact(&sq)?, mult));
            stack.push((sq, mult));
            continue;
        }
        for irr in factor_squarefree_q(&g)? {
            let mut found = false;
            for (q, e) in out.iter_mut() {
                if *q == irr {
                    *e += mult;
                    found = true;
                    break;
                }
            }
            if !found {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by_key(|(p, _)| (p.degree(), format!("{p}")));
    Ok(out)
}

/// Irreducible monic rational factors of a squarefree monic rational poly.
fn factor_squarefree_q(f: &Poly<Rat>) -> AResult<Vec<Poly<Rat>>> {
    let (prim, _) = to_zpoly(f);
    let n = prim.len() - 1;
    if n <= 1 {
        return Ok(vec![f.monic()?]);
    }
    // monicize: G(x) = lc^{n-1} g(x/lc), integer monic
    let lc = prim[n].clone();
    let monic_input = lc.is_one();
    let gz: ZPoly = if monic_input {
        prim.clone()
    } else {
        let mut v: ZPoly = (0..n)
            .map(|i| &prim[i] * lc.pow((n - 1 - i) as u32))
            .collect();
        v.push(BigInt::one());
        v
    };
    let factors_monic = factor_monic_squarefree_z(&gz)?;
    // map back through x -> lc * x, take primitive part, monicize over Q
    let mut out = Vec::new();
    for fz in factors_monic {
        let mapped: ZPoly = if monic_input {
            fz.clone()
        } else {
            zprimitive(&ztrim(
                fz.iter()
                    .enumerate()
                    .map(|(i, c)| c * lc.pow(i as u32))
                    .collect(),
            ))
        };
        out.push(zpoly_to_rat(&mapped).monic()?);
    }
    Ok(out)
}

/// Zassenhaus for a monic squarefree integer polynomial.
fn factor_monic_squarefree_z(g: &ZPoly) -> AResult<Vec<ZPoly>> {
    let n = g.len() - 1;
    // choose a prime where g stays squarefree
    let mut p = 3u64;
    let (fp_factors, prime) = loop {
        if p > 20_000 {
            return Err(AlgebraError::Other("no good factorization prime found".into()));
        }
        if crate::algebra::intops::is_prime_u128(p as u128) {
            let ex = Fp::from_u64(0, p);
            let gp = Poly::new(
                g.iter()
                    .map(|c| Fp::new(mod_i64(c, p), p))
                    .collect::<Vec<_>>(),
            );
            let _ = ex;
            if gp.degree() == Some(n) {
                let sep = gp.gcd(&gp.derivative());
                if sep.as_ref().map(|s| s.degree() == Some(0)).unwrap_or(false) {
                    let fs = factor_over_fp(&gp)?;
                    break (fs.into_iter().map(|(q, _)| q).collect::<Vec<_>>(), p);
                }
            }
        }
        p += 2;
    };
    if fp_factors.len() == 1 {
        return Ok(vec![g.clone()]);
    }
    // Mignotte-style bound on factor coefficients
    let norm2_sq: BigInt = g.iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + 1;
    let bound: BigInt = norm2 * BigInt::from(2).pow(n as u32 + 1);
    // lift to p^k > 2*bound
    let mut pk = BigInt::from(prime);
    let mut k = 1u32;
    while pk < BigInt::from(2) * &bound {
        pk = &pk * &pk;
        k *= 2;
    }
    let lifted = hensel_lift_tree(g, &fp_factors, prime, k)?;
    // subset recombination
    let mut rest = g.clone();
    let mut avail: Vec<ZPoly> = lifted;
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= avail.len() {
        let idxs: Vec<usize> = (0..avail.len()).collect();
        for subset in subsets_of_size(&idxs, size) {
            let mut prod: ZPoly = vec![BigInt::one()];
            for &i in &subset {
                prod = zmul_mod(&prod, &avail[i], &pk);
            }
            let cand = center(&prod, &pk);
            if let Some(co) = zdiv_monic(&rest, &cand) {
                out.push(cand);
                rest = co;
                let mut keep = Vec::new();
                for (i, f) in avail.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(f);
                    }
                }
                avail = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        out.push(rest);
    }
    Ok(out)
}

fn mod_i64(c: &BigInt, p: u64) -> i64 {
    let m = c.mod_floor(&BigInt::from(p));
    i64::try_from(m).expect("residue fits")
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn zmod(a: &ZPoly, m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zmul_mod(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    zmod(&zmul(a, b), m)
}

fn center(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lift the factorization of monic g modulo prime to modulo prime^(2^...),
/// reaching exponent >= k, factor by factor via a binary split.
fn hensel_lift_tree(g: &ZPoly, factors: &[Poly<Fp>], prime: u64, k: u32) -> AResult<Vec<ZPoly>> {
    if factors.len() == 1 {
        return Ok(vec![g.clone()]);
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let to_z = |fs: &[Poly<Fp>]| -> ZPoly {
        let mut prod = Poly::constant(Fp::from_u64(1, prime));
        for f in fs {
            prod = prod.mul(f);
        }
        prod.coeffs().iter().map(|c| BigInt::from(c.v)).collect()
    };
    let gg = to_z(left);
    let hh = to_z(right);
    let (gl, hl) = hensel_lift_pair(g, &gg, &hh, prime, k)?;
    let mut out = hensel_lift_tree(&gl, left, prime, k)?;
    out.extend(hensel_lift_tree(&hl, right, prime, k)?);
    Ok(out)
}

/// Quadratic Hensel lifting: f = g*h mod p with g,h monic coprime mod p;
/// returns (G, H) with f = G*H mod p^(2^ceil(log2 k)) and G=g, H=h mod p.
fn hensel_lift_pair(
    f: &ZPoly,
    g0: &ZPoly,
    h0: &ZPoly,
    prime: u64,
    k: u32,
) -> AResult<(ZPoly, ZPoly)> {
    // Bezout mod p via Fp polynomials
    let fp = |z: &ZPoly| Poly::new(z.iter().map(|c| Fp::new(mod_i64(c, prime), prime)).collect::<Vec<_>>());
    let gp = fp(g0);
    let hp = fp(h0);
    let (one, s, t) = gp.ext_gcd(&hp)?;
    if one.degree() != Some(0) {
        return Err(AlgebraError::Other("modular factors not coprime".into()));
    }
    let to_z = |p: &Poly<Fp>| -> ZPoly { p.coeffs().iter().map(|c| BigInt::from(c.v)).collect() };
    let mut s = to_z(&s);
    let mut t = to_z(&t);
    let mut g = g0.clone();
    let mut h = h0.clone();
    let mut m = BigInt::from(prime);
    let mut reached = 1u32;
    while reached < k {
        let m2 = &m * &m;
        // e = f - g*h mod m2
        let e = zmod(&zsub(f, &zmul(&g, &h)), &m2);
        // q, r = (s*e) divrem h  (monic h)
        let se = zmul_mod(&s, &e, &m2);
        let (q, r) = zdivrem_monic_mod(&se, &h, &m2);
        let gnew = zmod(&zadd(&zadd(&g, &zmul_mod(&t, &e, &m2)), &zmul_mod(&g, &q, &m2)), &m2);
        let hnew = zmod(&zadd(&h, &r), &m2);
        // lift Bezout: b = s*gnew + t*hnew - 1 mod m2
        let b = zmod(
            &zsub(&zadd(&zmul(&s, &gnew), &zmul(&t, &hnew)), &vec![BigInt::one()]),
            &m2,
        );
        let sb = zmul_mod(&s, &b, &m2);
        let (c, d) = zdivrem_monic_mod(&sb, &hnew, &m2);
        let snew = zmod(&zsub(&s, &d), &m2);
        let tnew = zmod(&zsub(&zsub(&t, &zmul_mod(&t, &b, &m2)), &zmul_mod(&c, &gnew, &m2)), &m2);
        g = gnew;
        h = hnew;
        s = snew;
        t = tnew;
        m = m2;
        reached *= 2;
    }
    Ok((center(&g, &m), center(&h, &m)))
}

fn zadd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = BigInt::zero();
        if let Some(x) = a.get(i) {
            v += x;
        }
        if let Some(y) = b.get(i) {
            v += y;
        }
        out.push(v);
    }
    ztrim(out)
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = BigInt::zero();
        if let Some(x) = a.get(i) {
            v += x;
        }
        if let Some(y) = b.get(i) {
            v -= y;
        }
        out.push(v);
    }
    ztrim(out)
}

/// divrem by monic divisor with coefficients reduced mod m.
fn zdivrem_monic_mod(a: &ZPoly, d: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let dd = d.len() - 1;
    let mut rem = zmod(a, m);
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let n = rem.len();
    rem.resize(n, BigInt::zero());
    let mut quot = vec![BigInt::zero(); n - dd];
    for i in (dd..n).rev() {
        let q = rem[i].clone();
        if q.is_zero() {
            continue;
        }
        quot[i - dd] = q.clone();
        for (j, dc) in d.iter().enumerate() {
            let idx = i - dd + j;
            let v = (&rem[idx] - &q * dc).mod_floor(m);
            rem[idx] = v;
        }
    }
    rem.truncate(dd);
    (ztrim(quot), ztrim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    fn q(v: &[i64]) -> Poly<Rat> {
        Poly::from_ints(&rat_int(0), v)
    }

    #[test]
    fn factor_quadratic_q() {
        // x^2 - 1 = (x-1)(x+1)
        let fs = factor_over_q(&q(&[-1, 0, 1])).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        let prod = fs[0].0.mul(&fs[1].0);
        assert_eq!(prod, q(&[-1, 0, 1]));
    }

    #[test]
    fn frobenius_quartic_irreducible() {
        // T^4 - 4T^3 + 22T^2 - 52T + 169
        let f = q(&[169, -52, 22, -4, 1]);
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
        assert_eq!(fs[0].0, f);
    }

    #[test]
    fn factor_with_multiplicity_and_lc() {
        // 3(x-1)^2 (x^2+x+1)
        let f = q(&[-1, 1]).mul(&q(&[-1, 1])).mul(&q(&[1, 1, 1])).mul_scalar(&rat_int(3));
        let fs = factor_over_q(&f).unwrap();
        let mut prod = Poly::constant(rat_int(3));
        for (p, m) in &fs {
            for _ in 0..*m {
                prod = prod.mul(p);
            }
        }
        assert_eq!(prod, f);
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn factor_nonmonic_with_rational_roots() {
        // 6x^2 - 5x + 1 = 6(x - 1/2)(x - 1/3)
        let f = q(&[1, -5, 6]);
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(fs.len(), 2);
        for (p, _) in &fs {
            assert_eq!(p.degree(), Some(1));
        }
    }

    #[test]
    fn factor_octic_q() {
        // (x^4+1)(x^2-2)(x-3)(x+3): degree 8, mixed types
        let f = q(&[1, 0, 0, 0, 1]).mul(&q(&[-2, 0, 1])).mul(&q(&[-3, 1])).mul(&q(&[3, 1]));
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(fs.len(), 4);
        let mut prod = Poly::constant(rat_int(1));
        for (p, m) in &fs {
            for _ in 0..*m {
                prod = prod.mul(p);
            }
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn factor_fp_modes() {
        // over F_11: gcd certificate shape (t^2+3)(t^2+4)
        let ex = Fp::from_u64(0, 11);
        let f = Poly::from_ints(&ex, &[3, 0, 1]).mul(&Poly::from_ints(&ex, &[4, 0, 1]));
        let fs = factor_over_fp(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(p, m)| p.degree() == Some(2) && *m == 1));
        // splitting polynomial
        let g = Poly::from_ints(&ex, &[-1, 0, 0, 0, 0, 1]); // x^5 - 1 over F_11 splits
        let gs = factor_over_fp(&g).unwrap();
        assert_eq!(gs.len(), 5);
        assert!(gs.iter().all(|(p, _)| p.degree() == Some(1)));
    }

    #[test]
    fn factor_fp_with_pth_powers() {
        // (x^3 - x)^3 over F_3 = x^3 (x-1)^3 (x+1)^3 ... actually x^3-x = x(x-1)(x+1)
        let ex = Fp::from_u64(0, 3);
        let base = Poly::from_ints(&ex, &[0, -1, 0, 1]);
        let f = base.mul(&base); // derivative nonzero path with multiplicity
        let fs = factor_over_fp(&f).unwrap();
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|(_, m)| *m == 2));
    }
}
