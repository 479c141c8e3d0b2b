//! The genus-3 family: three elliptic factors, the hyperelliptic space
//! model, the plane quartic, conversion to an octic model through a conic
//! parametrization, and L-polynomial cross-verification.

use crate::algebra::etale::{EtaleCtx, EtaleElem};
use crate::algebra::field::Field;
use crate::algebra::frac::{Fr, RatFn};
use crate::algebra::poly::Poly;
use crate::algebra::rational::{rat_int, Rat};
use crate::error::{CResult, CurveError};
use crate::ffverify::{
    elliptic_product_charpoly, frobenius_octic, frobenius_quartic, FrobeniusData, QuarticForm,
};

/// Both genus-3 models for one parameter, with the elliptic data they are
/// glued from, and the stated twisting values carried as constants.
#[derive(Clone, Debug)]
pub struct Genus3Pair<K: Field> {
    pub t: K,
    pub s: K,
    pub a_coeff: [K; 3],
    pub b_coeff: [K; 3],
    pub delta_coeff: [K; 3],
    /// W^2 Z^2 = alpha X^4 + beta Y^4 + gamma Z^4
    pub h1: (K, K, K),
    /// 0 = -X^2 + 2t Y^2 + (t+1) Z^2
    pub conic: (K, K, K),
    pub quartic: QuarticForm<K>,
    pub twist: K,
    pub twist_prime: K,
}

pub fn genus3_pair<K: Field>(t: &K) -> CResult<Genus3Pair<K>> {
    let one = t.one_like();
    let t2 = t.ref_mul(t);
    let t2p1 = t2.ref_add(&one);
    let tp1 = t.ref_add(&one);
    let t2ptp1 = t2.ref_add(t).ref_add(&one);
    let guard = t.ref_mul(&tp1).ref_mul(&t2p1).ref_mul(&t2ptp1);
    if guard.is_zero() {
        return Err(CurveError::ParameterExcluded(
            "t(t+1)(t^2+1)(t^2+t+1) = 0".into(),
        ));
    }
    let s = t2ptp1.ref_neg();
    let s2 = s.ref_mul(&s);
    let i = |n: i64| t.int_like(n);

    let a1 = t2p1.ref_mul(&s).ref_mul(&i(-2));
    let b1 = t2p1.ref_mul(&s2);
    let a2 = t2p1.ref_mul(&s).ref_mul(&i(4));
    let b2 = t2.ref_mul(&t2p1).ref_mul(&s2).ref_mul(&i(4));
    let a3 = t2ptp1.ref_mul(&s).ref_mul(&i(-2));
    let b3 = tp1.ref_mul(&tp1).ref_mul(&t2p1).ref_mul(&s2);
    let a_coeff = [a1, a2, a3];
    let b_coeff = [b1, b2, b3];

    // Delta_i = A_i^2 - 4 B_i, with the stated closed forms
    let mut delta_coeff: Vec<K> = Vec::with_capacity(3);
    let closed = [
        t2.ref_mul(&t2p1).ref_mul(&s2).ref_mul(&i(4)),
        t2p1.ref_mul(&s2).ref_mul(&i(16)),
        t2.ref_mul(&s2).ref_mul(&i(4)),
    ];
    for k in 0..3 {
        let d = a_coeff[k]
            .ref_mul(&a_coeff[k])
            .ref_sub(&b_coeff[k].ref_mul(&i(4)));
        if d != closed[k] {
            return Err(CurveError::IdentityFailure(format!(
                "Delta_{} closed form mismatch",
                k + 1
            )));
        }
        if d.is_zero() || b_coeff[k].is_zero() {
            return Err(CurveError::ParameterExcluded("degenerate elliptic factor".into()));
        }
        delta_coeff.push(d);
    }

    // intermediate space-model data and its rescaling to the final models
    let s5 = s2.ref_mul(&s2).ref_mul(&s);
    let s6 = s5.ref_mul(&s);
    let t2p1_2 = t2p1.ref_mul(&t2p1);
    let t2p1_3 = t2p1_2.ref_mul(&t2p1);
    let big_a = t.ref_mul(&tp1).ref_mul(&t2p1_3).ref_mul(&s5).ref_mul(&i(4));
    let big_b = t2.ref_mul(&tp1).ref_mul(&t2p1_3).ref_mul(&s5).ref_mul(&i(16));
    let big_c = t.ref_mul(&tp1).ref_mul(&tp1).ref_mul(&t2p1_2).ref_mul(&s6).ref_mul(&i(4));
    // 1/d = -2t(t+1)(t^2+1)s^2, 1/e = (t+1)(t^2+1)s^2, 1/f = 2t(t^2+1)s^2
    let m = t.ref_mul(&tp1).ref_mul(&t2p1).ref_mul(&s2).ref_mul(&i(2));
    let inv_d = m.ref_neg();
    let inv_e = tp1.ref_mul(&t2p1).ref_mul(&s2);
    let inv_f = t.ref_mul(&t2p1).ref_mul(&s2).ref_mul(&i(2));

    // final H(t): replace W by 2t(t+1)(t^2+1)s^3 W and divide out
    let w_scale = t.ref_mul(&tp1).ref_mul(&t2p1).ref_mul(&s2).ref_mul(&s).ref_mul(&i(2));
    let w2 = w_scale.ref_mul(&w_scale);
    let alpha = big_a.ref_div(&w2).map_err(CurveError::Algebra)?;
    let beta = big_b.ref_div(&w2).map_err(CurveError::Algebra)?;
    let gamma = big_c.ref_div(&w2).map_err(CurveError::Algebra)?;
    // the stated final coefficients
    let alpha_stated = t2p1
        .ref_div(&t.ref_mul(&tp1).ref_mul(&t2ptp1))
        .map_err(CurveError::Algebra)?
        .ref_neg();
    let beta_stated = t2p1
        .ref_mul(&i(4))
        .ref_div(&tp1.ref_mul(&t2ptp1))
        .map_err(CurveError::Algebra)?
        .ref_neg();
    let gamma_stated = one.ref_div(t).map_err(CurveError::Algebra)?;
    if alpha != alpha_stated || beta != beta_stated || gamma != gamma_stated {
        return Err(CurveError::IdentityFailure("W-rescaling identity failed".into()));
    }
    // conic: multiplying d X^2 + e Y^2 + f Z^2 by m gives -X^2 + 2t Y^2 + (t+1) Z^2
    let ca = m.ref_div(&inv_d).map_err(CurveError::Algebra)?;
    let cb = m.ref_div(&inv_e).map_err(CurveError::Algebra)?;
    let cc = m.ref_div(&inv_f).map_err(CurveError::Algebra)?;
    if ca != one.ref_neg() || cb != t.ref_add(t) || cc != tp1 {
        return Err(CurveError::IdentityFailure("conic rescaling identity failed".into()));
    }

    // quartic: divide B1 X^4 + B2 Y^4 + B3 Z^4 + d' X^2Y^2 + e' X^2Z^2 + f' Y^2Z^2
    // by (t^2+1) s^2
    let dprime = t2p1
        .ref_mul(&t2.ref_add(&t2).ref_add(t).ref_add(&i(2)))
        .ref_mul(&s2)
        .ref_mul(&i(4));
    let eprime = t2p1
        .ref_mul(&t2.ref_add(&t2).ref_add(t).ref_add(&one))
        .ref_mul(&s2)
        .ref_mul(&i(-2));
    let fprime = t2p1
        .ref_mul(&t2.ref_add(t).ref_add(&i(2)))
        .ref_mul(&s2)
        .ref_mul(&i(4));
    let norm = t2p1.ref_mul(&s2);
    let div = |x: &K| x.ref_div(&norm).map_err(CurveError::Algebra);
    let quartic = QuarticForm {
        c400: div(&b_coeff[0])?,
        c040: div(&b_coeff[1])?,
        c004: div(&b_coeff[2])?,
        c220: div(&dprime)?,
        c202: div(&eprime)?,
        c022: div(&fprime)?,
    };
    // stated final quartic
    let stated = QuarticForm {
        c400: one.clone(),
        c040: t2.ref_mul(&i(4)),
        c004: tp1.ref_mul(&tp1),
        c220: t2.ref_mul(&i(8)).ref_add(&t.ref_mul(&i(4))).ref_add(&i(8)),
        c202: t2
            .ref_mul(&i(4))
            .ref_add(&t.ref_add(t))
            .ref_add(&i(2))
            .ref_neg(),
        c022: t2.ref_mul(&i(4)).ref_add(&t.ref_mul(&i(4))).ref_add(&i(8)),
    };
    if quartic != stated {
        return Err(CurveError::IdentityFailure("quartic rescaling identity failed".into()));
    }

    // a/b = 1/(4t)
    if big_a.ref_mul(&t.ref_mul(&i(4))) != big_b {
        return Err(CurveError::IdentityFailure("a/b ratio identity failed".into()));
    }

    // twisting values: 0 and 64 (t^2+1)^2 s^4, the latter a nonzero square
    let tw = t.zero_like();
    let twp = t2p1_2.ref_mul(&s2).ref_mul(&s2).ref_mul(&i(64));
    let root = t2p1.ref_mul(&s2).ref_mul(&i(8));
    if root.ref_mul(&root) != twp || twp.is_zero() {
        return Err(CurveError::IdentityFailure("twisting factor is not a nonzero square".into()));
    }

    Ok(Genus3Pair {
        t: t.clone(),
        s,
        a_coeff,
        b_coeff,
        delta_coeff: [
            delta_coeff[0].clone(),
            delta_coeff[1].clone(),
            delta_coeff[2].clone(),
        ],
        h1: (alpha, beta, gamma),
        conic: (one.ref_neg(), t.ref_add(t), tp1),
        quartic,
        twist: tw,
        twist_prime: twp,
    })
}

/// The 2-torsion abscissas lie on their curves identically in Q(t, r) with
/// r^2 = t^2 + 1.
pub fn two_torsion_identity_check() -> CResult<()> {
    let ex = rat_int(0);
    let t: RatFn = Fr::var(&ex);
    let one = t.one_like();
    let t2p1 = t.ref_mul(&t).ref_add(&one);
    let modulus = Poly::new(vec![t2p1.ref_neg(), t.zero_like(), one.clone()]);
    let ctx = EtaleCtx::new(modulus).map_err(CurveError::Algebra)?;
    let r = EtaleElem::gen(&ctx);
    let lift = |v: &RatFn| EtaleElem::from_base(&ctx, v.clone());
    let pair = genus3_pair(&t).map_err(|e| CurveError::Other(format!("generic pair: {e}")))?;
    let s = lift(&pair.s);
    let te = lift(&t);
    let xs = [
        // (t^2+1)s - rts
        lift(&t2p1).ref_mul(&s).ref_sub(&r.ref_mul(&te).ref_mul(&s)),
        // -2(t^2+1)s - 2rs
        lift(&t2p1)
            .ref_mul(&s)
            .ref_mul(&r.int_like(-2))
            .ref_sub(&r.ref_mul(&s).ref_mul(&r.int_like(2))),
        // (t^2+t+1)s - ts
        lift(&pair.s).ref_neg().ref_mul(&s).ref_sub(&te.ref_mul(&s)),
    ];
    for k in 0..3 {
        // x^2 + A_k x + B_k must vanish (the nonzero 2-torsion abscissas)
        let a = lift(&pair.a_coeff[k]);
        let b = lift(&pair.b_coeff[k]);
        let v = xs[k]
            .ref_mul(&xs[k])
            .ref_add(&a.ref_mul(&xs[k]))
            .ref_add(&b);
        if !v.is_zero() {
            return Err(CurveError::IdentityFailure(format!(
                "2-torsion abscissa {} fails its quadratic",
                k + 1
            )));
        }
        if xs[k].is_zero() {
            return Err(CurveError::IdentityFailure("abscissa degenerates to zero".into()));
        }
    }
    Ok(())
}

/// Octic hyperelliptic model delta v^2 = f8(u) obtained by parametrizing the
/// conic and substituting into the quartic relation of the space model.
#[derive(Clone, Debug)]
pub struct OcticModel {
    pub delta: Rat,
    pub octic: Poly<Rat>,
    pub base_point: (i64, i64, i64),
}

/// Search the conic -X^2 + 2t Y^2 + (t+1) Z^2 = 0 for a rational point of
/// height at most `height` (projective integer coordinates after clearing
/// the denominators of t).
fn conic_point(t: &Rat, height: i64) -> CResult<(i64, i64, i64)> {
    use num_bigint::BigInt;
    use num_traits::Zero as _;
    // integer form: -L X^2 + (2 t L) Y^2 + ((t+1) L) Z^2 with L = den(t)
    let den = t.denom().clone();
    let a = -den.clone();
    let b = BigInt::from(2) * t.numer();
    let c = t.numer() + &den;
    for h in 1..=height {
        for x in -h..=h {
            for y in -h..=h {
                for z in 1..=h {
                    if x.abs().max(y.abs()).max(z) != h {
                        continue;
                    }
                    let g = gcd3(x.abs(), y.abs(), z);
                    if g != 1 {
                        continue;
                    }
                    let val = &a * x * x + &b * y * y + &c * z * z;
                    if val.is_zero() {
                        return Ok((x, y, z));
                    }
                }
            }
        }
    }
    Err(CurveError::NoRationalPoint(height))
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    fn g(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            g(b, a % b)
        }
    }
    g(g(a, b), c)
}

pub fn hyperelliptic_octic_model(t: &Rat, height: i64) -> CResult<OcticModel> {
    let pair = genus3_pair(t)?;
    let (x0i, y0i, z0i) = conic_point(t, height)?;
    let x0 = rat_int(x0i).ref_div(&rat_int(z0i)).map_err(CurveError::Algebra)?;
    let y0 = rat_int(y0i).ref_div(&rat_int(z0i)).map_err(CurveError::Algebra)?;
    // affine conic A x^2 + B y^2 + C = 0 with (A, B, C) = (-1, 2t, t+1)
    let (ca, cb, cc) = (&pair.conic.0, &pair.conic.1, &pair.conic.2);
    // lines through (x0, y0) with slope m = 1/(1+u):
    //   lambda = -2 (A x0 + B m y0)/(A + B m^2)
    let ex = rat_int(0);
    let u: RatFn = Fr::var(&ex);
    let m = u
        .ref_add(&u.one_like())
        .inv()
        .map_err(CurveError::Algebra)?;
    let af = Fr::from_scalar(ca.clone());
    let bf = Fr::from_scalar(cb.clone());
    let x0f = Fr::from_scalar(x0.clone());
    let y0f = Fr::from_scalar(y0.clone());
    let denom = af.ref_add(&bf.ref_mul(&m).ref_mul(&m));
    if denom.is_zero() {
        return Err(CurveError::DegenerateMap);
    }
    let lambda = af
        .ref_mul(&x0f)
        .ref_add(&bf.ref_mul(&m).ref_mul(&y0f))
        .ref_mul(&u.int_like(-2))
        .ref_div(&denom)
        .map_err(CurveError::Algebra)?;
    let px = x0f.ref_add(&lambda);
    let py = y0f.ref_add(&m.ref_mul(&lambda));
    // sanity: the parametrized point satisfies the conic identically
    let conic_val = af
        .ref_mul(&px.ref_mul(&px))
        .ref_add(&bf.ref_mul(&py.ref_mul(&py)))
        .ref_add(&Fr::from_scalar(cc.clone()));
    if !conic_val.is_zero() {
        return Err(CurveError::IdentityFailure("conic parametrization failed".into()));
    }
    // common denominator D; numerators Nx, Ny
    let dx = px.den().clone();
    let dy = py.den().clone();
    let d_poly = if dx == dy {
        dx
    } else {
        let g = dx.gcd(&dy).map_err(CurveError::Algebra)?;
        dx.mul(&dy.div_exact(&g).map_err(CurveError::Algebra)?)
    };
    let nx = px
        .ref_mul(&Fr::from_poly(d_poly.clone(), &ex))
        .as_poly()
        .map_err(CurveError::Algebra)?;
    let ny = py
        .ref_mul(&Fr::from_poly(d_poly.clone(), &ex))
        .as_poly()
        .map_err(CurveError::Algebra)?;
    // v^2 = alpha Nx^4 + beta Ny^4 + gamma D^4, cleared by the lcm of the
    // denominators of (alpha, beta, gamma)
    let (al, be, ga) = (&pair.h1.0, &pair.h1.1, &pair.h1.2);
    let mut lcm = num_bigint::BigInt::from(1);
    for v in [al, be, ga] {
        lcm = num_integer::lcm(lcm.clone(), v.denom().clone());
    }
    let delta = Rat::new(lcm, num_bigint::BigInt::from(1));
    let f8 = nx
        .pow(4)
        .mul_scalar(&al.ref_mul(&delta))
        .add(&ny.pow(4).mul_scalar(&be.ref_mul(&delta)))
        .add(&d_poly.pow(4).mul_scalar(&ga.ref_mul(&delta)));
    let deg = f8.degree().unwrap_or(0);
    if !(7..=8).contains(&deg) {
        return Err(CurveError::DegreeCollapse);
    }
    let disc = f8.discriminant().map_err(CurveError::Algebra)?;
    if disc.is_zero() {
        return Err(CurveError::Inseparable("octic model".into()));
    }
    Ok(OcticModel {
        delta,
        octic: f8,
        base_point: (x0i, y0i, z0i),
    })
}

#[derive(Debug)]
pub struct LpolyCheck {
    pub p: u64,
    pub quartic: FrobeniusData,
    pub elliptic_product: FrobeniusData,
    pub octic: Option<FrobeniusData>,
    pub all_equal: bool,
}

/// The degree-6 Frobenius polynomial of the quartic equals the product of
/// the three elliptic ones, and the octic model's when available.
pub fn verify_genus3_lpoly(t: &Rat, p: u64, octic: Option<&OcticModel>) -> CResult<LpolyCheck> {
    let pair = genus3_pair(t)?;
    // good reduction for the elliptic data
    for v in pair
        .b_coeff
        .iter()
        .chain(pair.delta_coeff.iter())
        .chain([&pair.t, &pair.s].into_iter())
    {
        let r = crate::ffverify::QuarticForm {
            c400: v.clone(),
            c040: rat_int(0),
            c004: rat_int(0),
            c220: rat_int(0),
            c202: rat_int(0),
            c022: rat_int(0),
        };
        let ctx = crate::algebra::fq::FqCtx::canonical(p, 1).map_err(CurveError::Algebra)?;
        let red = r.reduce_mod(&ctx)?;
        if red.c400.is_zero() {
            return Err(CurveError::BadReduction(p));
        }
    }
    let quartic = frobenius_quartic(&pair.quartic, p)?;
    let cubics: Vec<Poly<Rat>> = (0..3)
        .map(|k| {
            Poly::new(vec![
                rat_int(0),
                pair.b_coeff[k].clone(),
                pair.a_coeff[k].clone(),
                rat_int(1),
            ])
        })
        .collect();
    let product = elliptic_product_charpoly([&cubics[0], &cubics[1], &cubics[2]], p)?;
    let oct = match octic {
        Some(m) => Some(frobenius_octic(&m.delta, &m.octic, p)?),
        None => None,
    };
    let mut all_equal = quartic.coeffs == product.coeffs;
    if let Some(ref o) = oct {
        all_equal = all_equal && o.coeffs == quartic.coeffs;
    }
    Ok(LpolyCheck { p, quartic, elliptic_product: product, octic: oct, all_equal })
}
