//! Resultants of integer polynomials by modular computation: evaluate the
//! resultant modulo many word-size primes and reconstruct by CRT under a
//! deterministic Hadamard-style bound. The direct big-integer route is far
//! too slow for the certificate-sized inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{AResult, AlgebraError};

use super::fp::Fp;
use super::intops::crt_primes;
use super::poly::Poly;
use super::rational::Rat;

/// Integer polynomial, low-to-high.
pub type IntPoly = Vec<BigInt>;

pub fn from_rat_poly(f: &Poly<Rat>) -> AResult<IntPoly> {
    let mut out = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        if !c.denom().is_one() {
            return Err(AlgebraError::InexactDivision(format!(
                "non-integral coefficient {c}"
            )));
        }
        out.push(c.numer().clone());
    }
    Ok(out)
}

fn reduce_mod(f: &[BigInt], p: u64) -> Poly<Fp> {
    let bp = BigInt::from(p);
    Poly::new(
        f.iter()
            .map(|c| {
                let m = c.mod_floor(&bp);
                Fp::from_u64(u64::try_from(m).expect("residue fits"), p)
            })
            .collect(),
    )
}

fn norm2_bound(f: &[BigInt]) -> BigInt {
    let s: BigInt = f.iter().map(|c| c * c).sum();
    s.sqrt() + 1
}

/// Resultant of two integer polynomials, exact.
pub fn resultant_int(f: &[BigInt], g: &[BigInt]) -> AResult<BigInt> {
    let df = f.len().checked_sub(1).filter(|_| !f.is_empty());
    let dg = g.len().checked_sub(1).filter(|_| !g.is_empty());
    let (df, dg) = match (df, dg) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(AlgebraError::Other("resultant of zero polynomial".into())),
    };
    if f.last().unwrap().is_zero() || g.last().unwrap().is_zero() {
        return Err(AlgebraError::Other("untrimmed input".into()));
    }
    if df == 0 {
        return Ok(f[0].pow(dg as u32));
    }
    if dg == 0 {
        return Ok(g[0].pow(df as u32));
    }
    // Hadamard bound: |Res| <= ||f||_2^deg(g) * ||g||_2^deg(f)
    let bound = norm2_bound(f).pow(dg as u32) * norm2_bound(g).pow(df as u32);
    let target = BigInt::from(2) * &bound + 1;
    // collect enough primes where neither leading coefficient vanishes
    let mut primes = Vec::new();
    let mut modulus = BigInt::one();
    for p in crt_primes(4096) {
        let bp = BigInt::from(p);
        if f.last().unwrap().mod_floor(&bp).is_zero()
            || g.last().unwrap().mod_floor(&bp).is_zero()
        {
            continue;
        }
        primes.push(p);
        modulus *= bp;
        if modulus >= target {
            break;
        }
    }
    if modulus < target {
        return Err(AlgebraError::Other("prime pool exhausted".into()));
    }
    let residues: Vec<(u64, u64)> = primes
        .par_iter()
        .map(|&p| {
            let fp = reduce_mod(f, p);
            let gp = reduce_mod(g, p);
            let r = fp.resultant(&gp).expect("nonzero polys");
            (p, r.v)
        })
        .collect();
    // CRT accumulate
    let mut acc = BigInt::zero();
    let mut m = BigInt::one();
    for (p, r) in residues {
        let bp = BigInt::from(p);
        if m.is_one() {
            acc = BigInt::from(r);
            m = bp;
            continue;
        }
        // acc' = acc + m * ((r - acc) * m^{-1} mod p)
        let minv = mod_inverse(&m, &bp);
        let diff = (BigInt::from(r) - &acc).mod_floor(&bp);
        let t = (diff * minv).mod_floor(&bp);
        acc += &m * t;
        m *= &bp;
    }
    // center
    let half = &m / 2;
    if acc > half {
        acc -= &m;
    }
    Ok(acc)
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    fn ip(v: &[i64]) -> IntPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn matches_direct_resultant() {
        let f = ip(&[3, -1, 0, 2, 7]);
        let g = ip(&[1, 4, 1, -5]);
        let exact = resultant_int(&f, &g).unwrap();
        // direct over Q
        let fq = Poly::from_ints(&rat_int(0), &[3, -1, 0, 2, 7]);
        let gq = Poly::from_ints(&rat_int(0), &[1, 4, 1, -5]);
        let direct = fq.resultant(&gq).unwrap();
        assert_eq!(direct, num_rational::BigRational::from_integer(exact));
    }

    #[test]
    fn big_coefficients() {
        // values exceeding one prime's capacity
        let big: BigInt = BigInt::from(10).pow(40);
        let f = vec![big.clone(), BigInt::one()];
        let g = vec![-&big - 7, BigInt::one()];
        // Res(f, g) with f = x + A, g = x + B equals g(-A) = B - A
        let r = resultant_int(&f, &g).unwrap();
        assert_eq!(r, BigInt::from(-7) - 2 * big);
    }
}
