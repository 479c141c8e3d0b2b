//! JSON records and verification certificates. Serialization is canonical:
//! scalars as "num/den" strings in lowest terms, polynomial coefficient
//! arrays low-to-high, and deterministic key order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::poly::Poly;
use crate::algebra::rational::{rat_from_str, rat_to_string, square_class, Rat};
use crate::curves::Genus2Curve;
use crate::error::{CResult, CurveError};
use crate::ffverify::{
    absolutely_simple_sufficient, charpoly_match_up_to_twist, frobenius_genus2, FrobeniusData,
    QuarticForm, SimplicityVerdict,
};
use crate::igusa::{igusa_invariants, same_weighted_class};
use crate::reproduce::Transformation;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum RingDesc {
    Rational,
    Prime { p: u64 },
    PrimePower { p: u64, k: usize, modulus: Vec<u64> },
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CurveRecord {
    pub genus: u32,
    pub delta: String,
    pub f: Vec<String>,
    pub ring: RingDesc,
}

pub fn curve_to_record(c: &Genus2Curve<Rat>) -> CurveRecord {
    CurveRecord {
        genus: 2,
        delta: rat_to_string(c.delta()),
        f: c.f().coeffs().iter().map(rat_to_string).collect(),
        ring: RingDesc::Rational,
    }
}

pub fn record_to_curve(r: &CurveRecord) -> CResult<Genus2Curve<Rat>> {
    if r.ring != RingDesc::Rational {
        return Err(CurveError::Other("only rational curve records are read back".into()));
    }
    let delta = rat_from_str(&r.delta).map_err(CurveError::Algebra)?;
    let mut coeffs = Vec::with_capacity(r.f.len());
    for s in &r.f {
        coeffs.push(rat_from_str(s).map_err(CurveError::Algebra)?);
    }
    Genus2Curve::new(delta, Poly::new(coeffs))
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct OcticRecord {
    pub genus: u32,
    pub delta: String,
    pub f: Vec<String>,
    pub ring: RingDesc,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct QuarticRecord {
    /// all 15 ternary degree-4 monomials "eX eY eZ" -> coefficient
    pub coefficients: BTreeMap<String, String>,
    pub ring: RingDesc,
}

pub fn quartic_to_record(q: &QuarticForm<Rat>) -> QuarticRecord {
    let mut m = BTreeMap::new();
    for ex in 0..=4u32 {
        for ey in 0..=(4 - ex) {
            let ez = 4 - ex - ey;
            let v = match (ex, ey, ez) {
                (4, 0, 0) => q.c400.clone(),
                (0, 4, 0) => q.c040.clone(),
                (0, 0, 4) => q.c004.clone(),
                (2, 2, 0) => q.c220.clone(),
                (2, 0, 2) => q.c202.clone(),
                (0, 2, 2) => q.c022.clone(),
                _ => crate::algebra::rational::rat_int(0),
            };
            m.insert(format!("{ex}{ey}{ez}"), rat_to_string(&v));
        }
    }
    QuarticRecord { coefficients: m, ring: RingDesc::Rational }
}

pub fn record_to_quartic(r: &QuarticRecord) -> CResult<QuarticForm<Rat>> {
    let get = |k: &str| -> CResult<Rat> {
        match r.coefficients.get(k) {
            None => Ok(crate::algebra::rational::rat_int(0)),
            Some(s) => rat_from_str(s).map_err(CurveError::Algebra),
        }
    };
    for (k, v) in &r.coefficients {
        let known = ["400", "040", "004", "220", "202", "022"].contains(&k.as_str());
        if !known && rat_from_str(v).map_err(CurveError::Algebra)? != crate::algebra::rational::rat_int(0) {
            return Err(CurveError::Other(format!("unsupported quartic monomial {k}")));
        }
    }
    Ok(QuarticForm {
        c400: get("400")?,
        c040: get("040")?,
        c004: get("004")?,
        c220: get("220")?,
        c202: get("202")?,
        c022: get("022")?,
    })
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Provenance {
    pub family: String,
    pub parameters: BTreeMap<String, String>,
    pub theorem: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TransformationRecord {
    pub map: [String; 4],
    pub scale: String,
    pub twist: String,
}

pub fn transformation_to_record(t: &Transformation) -> TransformationRecord {
    TransformationRecord {
        map: [
            rat_to_string(&t.map.0),
            rat_to_string(&t.map.1),
            rat_to_string(&t.map.2),
            rat_to_string(&t.map.3),
        ],
        scale: rat_to_string(&t.scale),
        twist: rat_to_string(&t.twist),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct KernelRecord {
    /// pairing of the six root indices
    pub pairing: Vec<[u8; 2]>,
    /// modulus of the extension carrying the paired quadratics, low-to-high
    pub extension_modulus: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PairRecord {
    pub provenance: Provenance,
    pub curve1: CurveRecord,
    pub curve2: CurveRecord,
    /// square class m of the field Q(sqrt m) where the Jacobians match
    pub splitting_class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub galois_condition: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub kernels: Vec<KernelRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub published_presentations: Vec<CurveRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub transformations: Vec<TransformationRecord>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Genus3PairRecord {
    pub provenance: Provenance,
    pub quartic: QuarticRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub octic: Option<OcticRecord>,
    pub elliptic_cubics: [Vec<String>; 3],
    pub twisting_values: [String; 2],
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FrobeniusRecord {
    pub p: u64,
    pub genus: u32,
    pub coeffs: Vec<String>,
    pub counts: Vec<u64>,
}

pub fn frobenius_to_record(fd: &FrobeniusData) -> FrobeniusRecord {
    FrobeniusRecord {
        p: fd.p,
        genus: fd.genus,
        coeffs: fd.coeffs.iter().map(|c| c.to_string()).collect(),
        counts: fd.counts.clone(),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FrobeniusPairRecord {
    pub p: u64,
    pub first: FrobeniusRecord,
    pub second: FrobeniusRecord,
    pub matched: bool,
    pub branch: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct InvariantRecord {
    pub weights: Vec<u32>,
    pub values: Vec<String>,
    pub normalization: String,
}

pub fn invariants_record(c: &Genus2Curve<Rat>) -> CResult<InvariantRecord> {
    let v = igusa_invariants(c)?;
    Ok(InvariantRecord {
        weights: vec![2, 4, 6, 8, 10],
        values: v.as_weighted().iter().map(|(x, _)| rat_to_string(x)).collect(),
        normalization: "scaled-4^i".into(),
    })
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct SimplicityRecord {
    pub p: u64,
    pub verdict: String,
    pub charpoly: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Certificate {
    pub pair: String,
    pub provenance: Provenance,
    pub igusa_distinct: bool,
    pub invariants1: InvariantRecord,
    pub invariants2: InvariantRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub galois_condition: Option<bool>,
    pub splitting_class: String,
    pub frobenius_pairs: Vec<FrobeniusPairRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicity: Option<SimplicityRecord>,
    pub real_points: [bool; 2],
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub transformations: Vec<TransformationRecord>,
}

/// Good odd primes below the bound for both curves and the square class.
fn good_primes(c1: &Genus2Curve<Rat>, c2: &Genus2Curve<Rat>, m: &BigInt, bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 3u64;
    while p < bound {
        if crate::algebra::intops::is_prime_u128(p as u128) {
            let ok = c1.reduce_mod(p).is_ok()
                && c2.reduce_mod(p).is_ok()
                && !num_integer::Integer::mod_floor(&(BigInt::from(2) * m), &BigInt::from(p))
                    .eq(&BigInt::from(0));
            if ok {
                out.push(p);
            }
        }
        p += 2;
    }
    out
}

/// Run the full genus-2 verification: Igusa distinctness, twist-aware
/// Frobenius matching at every good prime below the bound, the simplicity
/// verdict at the first good prime where it is conclusive, and exact
/// real-point decisions.
pub fn verify_genus2_pair(
    provenance: Provenance,
    c1: &Genus2Curve<Rat>,
    c2: &Genus2Curve<Rat>,
    splitting_class_of: &Rat,
    galois: Option<bool>,
    transformations: Vec<TransformationRecord>,
    prime_bound: u64,
) -> CResult<Certificate> {
    let m = square_class(splitting_class_of).map_err(CurveError::Algebra)?;
    let v1 = igusa_invariants(c1)?;
    let v2 = igusa_invariants(c2)?;
    let igusa_distinct = !same_weighted_class(&v1, &v2);
    let primes = good_primes(c1, c2, &m, prime_bound);
    let mut frobenius_pairs = Vec::new();
    let mut simplicity = None;
    for &p in &primes {
        let f1 = frobenius_genus2(c1, p)?;
        let f2 = frobenius_genus2(c2, p)?;
        let matched = charpoly_match_up_to_twist(&f1, &f2, &m)?;
        let mr = num_integer::Integer::mod_floor(&m, &BigInt::from(p));
        let branch = if crate::algebra::fp::Fp::from_u64(
            u64::try_from(mr).expect("residue fits"),
            p,
        )
        .chi()
            == 1
        {
            "equal"
        } else {
            "sign-flip"
        };
        if simplicity.is_none() {
            if let SimplicityVerdict::ProvenSimple = absolutely_simple_sufficient(&f1)? {
                simplicity = Some(SimplicityRecord {
                    p,
                    verdict: "proven_simple".into(),
                    charpoly: f1.coeffs.iter().map(|c| c.to_string()).collect(),
                });
            }
        }
        frobenius_pairs.push(FrobeniusPairRecord {
            p,
            first: frobenius_to_record(&f1),
            second: frobenius_to_record(&f2),
            matched,
            branch: branch.into(),
        });
    }
    if simplicity.is_none() {
        simplicity = Some(SimplicityRecord {
            p: 0,
            verdict: "inconclusive".into(),
            charpoly: Vec::new(),
        });
    }
    let real_points = [c1.has_real_points()?, c2.has_real_points()?];
    Ok(Certificate {
        pair: format!("{}-pair", provenance.family),
        provenance,
        igusa_distinct,
        invariants1: invariants_record(c1)?,
        invariants2: invariants_record(c2)?,
        galois_condition: galois,
        splitting_class: m.to_string(),
        frobenius_pairs,
        simplicity,
        real_points,
        transformations,
    })
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Genus3Certificate {
    pub pair: String,
    pub provenance: Provenance,
    pub lpoly_checks: Vec<Genus3LpolyRecord>,
    /// equality of degree-6 L-polynomials is necessary for isogeny; it is
    /// recorded as evidence, not as a proof of isomorphism
    pub evidence_kind: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Genus3LpolyRecord {
    pub p: u64,
    pub quartic: FrobeniusRecord,
    pub elliptic_product: FrobeniusRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub octic: Option<FrobeniusRecord>,
    pub all_equal: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TripleRecord {
    pub r: String,
    pub s: String,
    pub t: String,
    pub origin: TripleOrigin,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TripleOrigin {
    pub s0: String,
    pub n: i64,
    #[serde(rename = "addT")]
    pub add_t: bool,
}
