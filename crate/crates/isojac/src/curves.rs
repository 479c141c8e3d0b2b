//! Genus-2 curve models delta y^2 = f and their exact transformations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero as _;

use crate::algebra::field::Field;
use crate::algebra::fp::Fp;
use crate::algebra::poly::Poly;
use crate::algebra::rational::Rat;
use crate::error::{CResult, CurveError};

/// delta y^2 = f with f separable of degree 5 or 6 and delta nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Genus2Curve<K: Field> {
    delta: K,
    f: Poly<K>,
}

impl<K: Field> Genus2Curve<K> {
    pub fn new(delta: K, f: Poly<K>) -> CResult<Self> {
        if delta.is_zero() {
            return Err(CurveError::ParameterExcluded("delta = 0".into()));
        }
        let deg = f.degree().unwrap_or(0);
        if !(5..=6).contains(&deg) {
            return Err(CurveError::DegreeCollapse);
        }
        let disc = f.discriminant().map_err(CurveError::Algebra)?;
        if disc.is_zero() {
            return Err(CurveError::Inseparable(format!("{f}")));
        }
        Ok(Genus2Curve { delta, f })
    }

    pub fn delta(&self) -> &K {
        &self.delta
    }

    pub fn f(&self) -> &Poly<K> {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().unwrap()
    }

    /// x -> (a x + b)/(c x + d); the new polynomial is
    /// scale * (c x + d)^6 * f((ax+b)/(cx+d)) and delta becomes twist*delta.
    /// The caller chooses scale and twist so that the output is the intended
    /// model (a square scale*(cx+d)^6/twist preserves the curve; a non-square
    /// one is a quadratic twist, which some published models use).
    pub fn mobius_transform(
        &self,
        map: (&K, &K, &K, &K),
        scale: &K,
        twist: &K,
    ) -> CResult<Self> {
        let (a, b, c, d) = map;
        let det = a.ref_mul(d).ref_sub(&b.ref_mul(c));
        if det.is_zero() {
            return Err(CurveError::DegenerateMap);
        }
        if scale.is_zero() || twist.is_zero() {
            return Err(CurveError::DegenerateMap);
        }
        // homogenize: sum f_i (a x + b)^i (c x + d)^{6-i}
        let num = Poly::new(vec![b.clone(), a.clone()]);
        let den = Poly::new(vec![d.clone(), c.clone()]);
        let mut acc: Poly<K> = Poly::zero();
        for i in 0..=6 {
            let fi = self.f.coeff_or_zero(i, a);
            if fi.is_zero() {
                continue;
            }
            let term = num.pow(i).mul(&den.pow(6 - i));
            acc = acc.add(&term.mul_scalar(&fi));
        }
        let new_f = acc.mul_scalar(scale);
        let new_delta = self.delta.ref_mul(twist);
        Genus2Curve::new(new_delta, new_f)
    }

    /// Model y^2 + q(x) y = g(x) with g = (f - q^2)/4, inverse of the
    /// substitution y -> 2y + q on y^2 = f. Requires delta = 1.
    pub fn complete_square_form(&self, q: &Poly<K>) -> CResult<(Poly<K>, Poly<K>)> {
        if !self.delta.is_one() {
            return Err(CurveError::Other(
                "cross-term model needs the delta = 1 presentation".into(),
            ));
        }
        if q.degree().map_or(false, |d| d > 3) {
            return Err(CurveError::Other("cross term degree exceeds 3".into()));
        }
        let ex = &self.delta;
        let g = self
            .f
            .sub(&q.mul(q))
            .mul_scalar(&ex.int_like(4).inv().map_err(CurveError::Algebra)?);
        Ok((q.clone(), g))
    }
}

impl Genus2Curve<Rat> {
    /// Good reduction at an odd prime: denominators, delta, the leading
    /// coefficient and the discriminant must all stay nonzero mod p.
    pub fn reduce_mod(&self, p: u64) -> CResult<Genus2Curve<Fp>> {
        let to_fp = |q: &Rat| -> CResult<Fp> {
            let bp = BigInt::from(p);
            let den = q.denom().mod_floor(&bp);
            if den.is_zero() {
                return Err(CurveError::BadReduction(p));
            }
            let num = q.numer().mod_floor(&bp);
            let n = u64::try_from(num).expect("residue fits");
            let d = u64::try_from(den).expect("residue fits");
            Ok(Fp::from_u64(n, p).ref_mul(&Fp::from_u64(d, p).inv().map_err(CurveError::Algebra)?))
        };
        let delta = to_fp(&self.delta)?;
        if delta.is_zero() {
            return Err(CurveError::BadReduction(p));
        }
        let mut coeffs = Vec::with_capacity(self.f.coeffs().len());
        for c in self.f.coeffs() {
            coeffs.push(to_fp(c)?);
        }
        let f = Poly::new(coeffs);
        if f.degree() != self.f.degree() {
            return Err(CurveError::BadReduction(p));
        }
        Genus2Curve::new(delta, f).map_err(|_| CurveError::BadReduction(p))
    }

    /// Exact real-point decision for the smooth projective model.
    pub fn has_real_points(&self) -> CResult<bool> {
        crate::algebra::realroots::curve_has_real_points(&self.delta, &self.f)
            .map_err(CurveError::Algebra)
    }

    /// Model with integral cross term; errors when the result is not
    /// integral.
    pub fn complete_square_form_integral(&self, q: &Poly<Rat>) -> CResult<(Poly<Rat>, Poly<Rat>)> {
        let (q, g) = self.complete_square_form(q)?;
        for c in g.coeffs() {
            if !num_traits::One::is_one(c.denom()) {
                return Err(CurveError::Other(format!("non-integral coefficient {c}")));
            }
        }
        Ok((q, g))
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
    fn validation() {
        assert!(Genus2Curve::new(rat_int(0), qpoly(&[1, 0, 0, 0, 0, 0, 1])).is_err());
        assert!(Genus2Curve::new(rat_int(1), qpoly(&[1, 0, 1])).is_err());
        // (x^2-1)^3 inseparable
        let f = qpoly(&[-1, 0, 1]).pow(3);
        assert!(matches!(
            Genus2Curve::new(rat_int(1), f),
            Err(CurveError::Inseparable(_))
        ));
    }

    #[test]
    fn identity_mobius() {
        let c = Genus2Curve::new(rat_int(2), qpoly(&[1, 1, 0, 0, 0, 0, 3])).unwrap();
        let m = c
            .mobius_transform(
                (&rat_int(1), &rat_int(0), &rat_int(0), &rat_int(1)),
                &rat_int(1),
                &rat_int(1),
            )
            .unwrap();
        assert_eq!(m, c);
    }

    #[test]
    fn cross_term_round_trip() {
        // published presentation: from y^2 = 125x^6 - ... with q = x^3+x^2+x
        let f = qpoly(&[-1464, 2004, 1217, -1518, -865, -150, 125]);
        let c = Genus2Curve::new(rat_int(1), f.clone()).unwrap();
        let q = qpoly(&[0, 1, 1, 1]);
        let (qq, g) = c.complete_square_form_integral(&q).unwrap();
        assert_eq!(g, qpoly(&[-366, 501, 304, -380, -217, -38, 31]));
        // round trip: f = 4g + q^2
        assert_eq!(g.mul_scalar(&rat_int(4)).add(&qq.mul(&qq)), f);
        // q = 0 leaves the model unchanged (g = f/4 corresponds to y -> 2y)
        let (_, g0) = c.complete_square_form(&Poly::zero()).unwrap();
        assert_eq!(g0.mul_scalar(&rat_int(4)), f);
    }

    #[test]
    fn reduction() {
        let c = Genus2Curve::new(rat(1, 3), qpoly(&[1, 0, 0, 0, 0, 0, 5])).unwrap();
        let r = c.reduce_mod(7).unwrap();
        assert_eq!(r.delta().v, Fp::new(1, 7).ref_mul(&Fp::new(3, 7).inv().unwrap()).v);
        assert!(c.reduce_mod(3).is_err()); // denominator of delta
        assert!(c.reduce_mod(5).is_err()); // leading coefficient drops
    }
}
