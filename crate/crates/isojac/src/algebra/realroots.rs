//! Real-root counting over Q via Sturm sequences.

use num_traits::Signed;

use crate::error::AResult;

use super::poly::Poly;
use super::rational::Rat;

/// Sturm sequence of f (assumed squarefree is not required; counts distinct
/// real roots).
fn sturm_sequence(f: &Poly<Rat>) -> AResult<Vec<Poly<Rat>>> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        if seq[n - 1].degree() == Some(0) {
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1])?;
        seq.push(r.neg());
    }
    Ok(seq)
}

fn sign_at_infinity(p: &Poly<Rat>, positive: bool) -> i32 {
    match p.degree() {
        None => 0,
        Some(d) => {
            let lc = p.lc().unwrap();
            let s = if lc.is_positive() { 1 } else { -1 };
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }
}

fn sign_changes(signs: &[i32]) -> usize {
    let mut count = 0;
    let mut last = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of f.
pub fn count_real_roots(f: &Poly<Rat>) -> AResult<usize> {
    if f.degree().map_or(true, |d| d == 0) {
        return Ok(0);
    }
    let sf = f.squarefree_part()?;
    let seq = sturm_sequence(&sf)?;
    let neg: Vec<i32> = seq.iter().map(|p| sign_at_infinity(p, false)).collect();
    let pos: Vec<i32> = seq.iter().map(|p| sign_at_infinity(p, true)).collect();
    Ok(sign_changes(&neg) - sign_changes(&pos))
}

/// Whether the smooth projective curve delta*y^2 = f(x) over Q has real
/// points: true iff f has a real root or lc(f)*delta > 0 (a neighborhood of
/// infinity, or of the root, carries real points).
pub fn curve_has_real_points(delta: &Rat, f: &Poly<Rat>) -> AResult<bool> {
    let lc = f.lc().expect("nonzero curve polynomial");
    if (lc * delta).is_positive() {
        return Ok(true);
    }
    Ok(count_real_roots(f)? > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    fn q(v: &[i64]) -> Poly<Rat> {
        Poly::from_ints(&rat_int(0), v)
    }

    #[test]
    fn root_counts() {
        assert_eq!(count_real_roots(&q(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(count_real_roots(&q(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(count_real_roots(&q(&[0, -1, 0, 1])).unwrap(), 3);
        // repeated roots counted once
        assert_eq!(count_real_roots(&q(&[1, -2, 1])).unwrap(), 1);
        // quintic with 5 real roots: x(x^2-1)(x^2-4)
        let f = q(&[0, 1]).mul(&q(&[-1, 0, 1])).mul(&q(&[-4, 0, 1]));
        assert_eq!(count_real_roots(&f).unwrap(), 5);
    }

    #[test]
    fn real_points() {
        // y^2 = x^6 + 1 always has points
        assert!(curve_has_real_points(&rat_int(1), &q(&[1, 0, 0, 0, 0, 0, 1])).unwrap());
        // y^2 = -(x^6 + 1) never
        assert!(!curve_has_real_points(&rat_int(1), &q(&[-1, 0, 0, 0, 0, 0, -1])).unwrap());
        // y^2 = -x^6 + 1 has roots
        assert!(curve_has_real_points(&rat_int(1), &q(&[1, 0, 0, 0, 0, 0, -1])).unwrap());
    }
}
