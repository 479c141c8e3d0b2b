//! Integer factorization support: deterministic Miller-Rabin for u128,
//! Pollard rho, divisor enumeration with the height cutoff demanded by
//! the rational root search.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AResult, AlgebraError};

pub const DIVISOR_HEIGHT_CUTOFF: u64 = 1_000_000_000_000;

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^126 in practice here
    if let (Some(x), Some(y)) = (a.checked_mul(b), Some(m)) {
        return x % y;
    }
    // fallback: double-and-add
    let mut res = 0u128;
    let mut a = a % m;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            res = (res + a) % m;
        }
        a = (a << 1) % m;
        b >>= 1;
    }
    res
}

fn powmod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut r = 1u128 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u128;
    loop {
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        let f = |v: u128| (mulmod(v, v, n) + c) % n;
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            let diff = if x > y { x - y } else { y - x };
            d = gcd_u128(diff, n);
            count += 1;
            if count > 2_000_000 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
        if c > 40 {
            // practically unreachable for inputs in range
            return n;
        }
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn factor_u128(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if is_prime_u128(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    if d == n {
        out.push(n); // give up; caller checks primality of entries
        return;
    }
    factor_u128(d, out);
    factor_u128(n / d, out);
}

/// Factor |n| into primes with exponents. Errors when an unfactorable
/// composite above the cutoff survives.
pub fn factor_u(n: &BigInt) -> AResult<Vec<(BigInt, u32)>> {
    let mut m = n.abs();
    if m.is_zero() {
        return Err(AlgebraError::Other("factor of zero".into()));
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, primes: &mut Vec<(BigInt, u32)>| {
        for (q, e) in primes.iter_mut() {
            if *q == p {
                *e += 1;
                return;
            }
        }
        primes.push((p, 1));
    };
    // small trial division first
    let mut d = 2u64;
    while d < 100_000 && BigInt::from(d).pow(2) <= m {
        let bd = BigInt::from(d);
        while (&m % &bd).is_zero() {
            m /= &bd;
            push(bd.clone(), &mut primes);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        primes.sort();
        return Ok(primes);
    }
    match m.to_u128() {
        Some(v) => {
            let mut fs = Vec::new();
            factor_u128(v, &mut fs);
            for f in fs {
                if !is_prime_u128(f) {
                    return Err(AlgebraError::HeightExceeded {
                        cutoff: DIVISOR_HEIGHT_CUTOFF,
                    });
                }
                push(BigInt::from(f), &mut primes);
            }
            primes.sort();
            Ok(primes)
        }
        None => Err(AlgebraError::HeightExceeded {
            cutoff: DIVISOR_HEIGHT_CUTOFF,
        }),
    }
}

/// All positive divisors of |n| not exceeding the height cutoff.
/// Errors when the enumeration would exceed the cutoff contract.
pub fn divisors_bounded(n: &BigInt) -> AResult<Vec<BigInt>> {
    let fact = factor_u(n)?;
    let cutoff = BigInt::from(DIVISOR_HEIGHT_CUTOFF);
    let mut divs = vec![BigInt::one()];
    for (p, e) in fact {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..e {
                cur = &cur * &p;
                if cur <= cutoff {
                    next.push(cur.clone());
                }
            }
        }
        next.sort();
        next.dedup();
        divs = next;
        if divs.len() > 2_000_000 {
            return Err(AlgebraError::HeightExceeded {
                cutoff: DIVISOR_HEIGHT_CUTOFF,
            });
        }
    }
    Ok(divs)
}

/// Primes just below 2^62 for CRT resultants, generated deterministically.
pub fn crt_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut cand: u64 = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime_u128(cand as u128) {
            out.push(cand);
        }
        cand -= 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u128(2));
        assert!(is_prime_u128(1_000_000_007));
        assert!(!is_prime_u128(1_000_000_007u128 * 998_244_353));
        assert!(is_prime_u128((1u128 << 62) - 57)); // 2^62-57 is prime
    }

    #[test]
    fn factoring() {
        let n = BigInt::from(2u64 * 3 * 3 * 1_000_000_007);
        let f = factor_u(&n).unwrap();
        assert_eq!(
            f,
            vec![
                (BigInt::from(2), 1),
                (BigInt::from(3), 2),
                (BigInt::from(1_000_000_007u64), 1)
            ]
        );
    }

    #[test]
    fn divisors() {
        let d = divisors_bounded(&BigInt::from(12)).unwrap();
        assert_eq!(
            d,
            [1, 2, 3, 4, 6, 12].iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()
        );
    }
}
