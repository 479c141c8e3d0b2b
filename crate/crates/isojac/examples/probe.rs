use isojac::algebra::etale::{EtaleCtx, EtaleElem};
use isojac::algebra::field::Field;
use isojac::algebra::poly::Poly;
use isojac::algebra::rational::{rat, rat_int, Rat};
use isojac::algebra::squares::is_square_in_etale;
use isojac::families::{crst_curve, family2_construct};
use isojac::ffverify::{charpoly_match_up_to_twist, frobenius_genus2};
use isojac::igusa::{igusa_invariants, same_weighted_class};
use isojac::richelot::{richelot_dual, QuadFactorization};
use num_bigint::BigInt;

fn main() {
    let v = rat_int(-3);
    let fam = family2_construct(&v).unwrap();
    let (r, s, t) = (rat(92, 16), rat(-3, 4), rat(-7, 4));
    let data = crst_curve(&r, &s, &t).unwrap();
    // factor h: rational root + quadratic
    let factors = isojac::algebra::factor::factor_over_q(data.algebra.modulus()).unwrap();
    let mut beta0 = None;
    let mut quad_factor = None;
    for (p, _) in &factors {
        match p.degree() {
            Some(1) => beta0 = Some(p.coeff_or_zero(0, &rat_int(0)).ref_neg()),
            Some(2) => quad_factor = Some(p.clone()),
            _ => {}
        }
    }
    let beta0 = beta0.unwrap();
    let q = quad_factor.unwrap();
    println!("beta0 = {beta0}, q = {q}");
    let ctx = EtaleCtx::new(q.clone()).unwrap();
    let b2 = EtaleElem::gen(&ctx);
    let cc = isojac::families::crst_g_constant(&s, &t);
    let dprime = |b: &EtaleElem<Rat>| -> EtaleElem<Rat> {
        b.ref_mul(b)
            .ref_mul(&EtaleElem::from_base(&ctx, s.clone()))
            .ref_add(&EtaleElem::from_base(&ctx, cc.clone()))
            .ref_mul(&b.int_like(4))
    };
    // r1, r2 from beta0
    let d0 = dprime(&EtaleElem::from_base(&ctx, beta0.clone()));
    let sqrt0 = is_square_in_etale(&d0).unwrap().unwrap();
    let half = EtaleElem::from_base(&ctx, rat(1, 2));
    let b0e = EtaleElem::from_base(&ctx, beta0.clone());
    let r1 = b0e.ref_add(&sqrt0.ref_mul(&half));
    let r2 = b0e.ref_sub(&sqrt0.ref_mul(&half));
    let d2 = dprime(&b2);
    let sqrt2 = is_square_in_etale(&d2).unwrap().unwrap();
    for sign in [1i64, -1] {
        let sq = sqrt2.ref_mul(&sqrt2.int_like(sign));
        let r3 = b2.ref_add(&sq.ref_mul(&half));
        let r4 = b2.ref_sub(&sq.ref_mul(&half));
        let r5 = r4.conjugate_quadratic().unwrap();
        let r6 = r3.conjugate_quadratic().unwrap();
        let quadp = |a: &EtaleElem<Rat>, b: &EtaleElem<Rat>| -> Poly<EtaleElem<Rat>> {
            Poly::new(vec![a.ref_mul(b), a.ref_add(b).ref_neg(), a.one_like()])
        };
        let labels = [&r1, &r2, &r3, &r4, &r5, &r6];
        let mut duals = Vec::new();
        for pairs in [[(0usize, 4usize), (1, 3), (2, 5)], [(0, 2), (1, 5), (3, 4)]] {
            let q1 = quadp(labels[pairs[0].0], labels[pairs[0].1]);
            let q3e = quadp(labels[pairs[2].0], labels[pairs[2].1]);
            let q3: Poly<Rat> = q3e.try_map_coeffs(|c| c.descend().ok_or(())).unwrap();
            let fact = QuadFactorization::from_quadratic_pair(q.clone(), &q1, &q3).unwrap();
            duals.push(richelot_dual(&data.curve, &fact).unwrap().dual);
        }
        let va = igusa_invariants(&duals[0]).unwrap();
        let vb = igusa_invariants(&duals[1]).unwrap();
        let fc = igusa_invariants(&fam.c).unwrap();
        let fcp = igusa_invariants(&fam.c_prime).unwrap();
        let m_match = (same_weighted_class(&va, &fc) && same_weighted_class(&vb, &fcp))
            || (same_weighted_class(&va, &fcp) && same_weighted_class(&vb, &fc));
        // twist match between the two duals at good primes: class of st = 21/16 -> 21
        let mut twist_ok = true;
        let m = BigInt::from(21);
        for p in [11u64, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
            let (Ok(f1), Ok(f2)) = (frobenius_genus2(&duals[0], p), frobenius_genus2(&duals[1], p)) else { continue };
            match charpoly_match_up_to_twist(&f1, &f2, &m) {
                Ok(ok) => twist_ok &= ok,
                Err(_) => continue,
            }
        }
        println!("sign {sign}: matches family2 = {m_match}, twist-match = {twist_ok}");
    }
}
