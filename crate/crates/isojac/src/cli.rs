//! Command-line surface: pair generation, verification, the published-
//! example reproduction suite, surface triples, and the resultant
//! certificate.

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::rational::{rat_from_str, rat_int, rat_to_string, Rat};
use crate::cert::{
    curve_to_record, frobenius_to_record, quartic_to_record, record_to_curve,
    record_to_quartic, transformation_to_record, Certificate, CurveRecord, Genus3Certificate,
    Genus3LpolyRecord, Genus3PairRecord, KernelRecord, OcticRecord, PairRecord, Provenance,
    RingDesc, TripleOrigin, TripleRecord,
};
use crate::error::CurveError;
use crate::families::{family1_pair, family2_construct, galois_condition, gensimple_pair};
use crate::genus3::{genus3_pair, hyperelliptic_octic_model, verify_genus3_lpoly};
use crate::reproduce::{published_transformations, reproduce_all};
use crate::surface::surface_triple;

#[derive(Parser)]
#[command(
    name = "isojac",
    about = "Pairs of non-isomorphic curves with isomorphic Jacobians, with machine-checkable certificates",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Construct a pair from one of the families and emit its records
    Gen(GenArgs),
    /// Verify a stored pair record: Igusa distinctness, Frobenius matching,
    /// simplicity
    Verify(VerifyArgs),
    /// Regenerate the published examples bit-exactly and report per item
    ReproduceExamples,
    /// Produce a parameter triple from the elliptic surface and its pair
    Surface(SurfaceArgs),
    /// Run the generic-parameter resultant certificate
    RCertificate,
}

#[derive(Args)]
pub struct GenArgs {
    /// family: f1 | f2 | crst | g3
    pub family: String,
    /// parameter t (families f1, g3, and the third crst parameter via --t)
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// parameter v (family f2)
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
    /// parameter r (family crst)
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// parameter s (family crst)
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// output file (stdout when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// conic point search height for the genus-3 octic model
    #[arg(long, default_value_t = 200)]
    pub height: i64,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// pair record file produced by gen
    pub pair: PathBuf,
    /// verify Frobenius matching at all good primes below this bound
    #[arg(long, default_value_t = 100)]
    pub max_prime: u64,
    /// explicit primes (overrides --max-prime)
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SurfaceArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub s0: String,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, default_value_t = false)]
    pub add_t: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exit codes: 0 success, 2 bad input, 3 excluded parameter, 4 internal.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CurveError::ParameterExcluded(_) => 3,
                CurveError::Other(ref m) if m.starts_with("input:") => 2,
                _ => 4,
            }
        }
    }
}

fn input_err(msg: impl std::fmt::Display) -> CurveError {
    CurveError::Other(format!("input: {msg}"))
}

fn parse_rat(opt: &Option<String>, name: &str) -> Result<Rat, CurveError> {
    match opt {
        None => Err(input_err(format!("missing --{name}"))),
        Some(s) => rat_from_str(s).map_err(|e| input_err(format!("--{name}: {e}"))),
    }
}

fn emit<T: Serialize>(value: &T, out: &Option<PathBuf>) -> Result<(), CurveError> {
    let s = serde_json::to_string_pretty(value)
        .map_err(|e| CurveError::Other(format!("serialization: {e}")))?;
    match out {
        None => {
            println!("{s}");
            Ok(())
        }
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
            writeln!(f, "{s}").map_err(|e| CurveError::Other(format!("write: {e}")))
        }
    }
}

fn provenance(family: &str, theorem: &str, params: &[(&str, &Rat)]) -> Provenance {
    let mut parameters = BTreeMap::new();
    for (k, v) in params {
        parameters.insert((*k).to_string(), rat_to_string(v));
    }
    Provenance {
        family: family.into(),
        parameters,
        theorem: theorem.into(),
    }
}

fn dispatch(cli: Cli) -> Result<i32, CurveError> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::ReproduceExamples => cmd_reproduce(),
        Command::Surface(args) => cmd_surface(args),
        Command::RCertificate => cmd_rcert(),
    }
}

fn cmd_gen(args: GenArgs) -> Result<i32, CurveError> {
    match args.family.as_str() {
        "f1" => {
            let t = parse_rat(&args.t, "t")?;
            let d = family1_pair(&t)?;
            let mut published = Vec::new();
            let mut transformations = Vec::new();
            if t == rat_int(2) {
                for tr in published_transformations("split-t2") {
                    published.push(curve_to_record(&tr.apply(&d.c_plus)?));
                    published.push(curve_to_record(&tr.apply(&d.c_minus)?));
                    transformations.push(transformation_to_record(&tr));
                }
            }
            let rec = PairRecord {
                provenance: provenance("f1", "split-jacobian-pair", &[("t", &t)]),
                curve1: curve_to_record(&d.c_plus),
                curve2: curve_to_record(&d.c_minus),
                splitting_class: "1".into(),
                galois_condition: None,
                kernels: Vec::new(),
                published_presentations: published,
                transformations,
            };
            emit(&rec, &args.out)?;
            Ok(0)
        }
        "f2" => {
            let v = parse_rat(&args.v, "v")?;
            let d = family2_construct(&v)?;
            let m = crate::algebra::rational::square_class(&d.splitting_disc)
                .map_err(CurveError::Algebra)?;
            let kernels = vec![
                KernelRecord {
                    pairing: vec![[1, 5], [2, 4], [3, 6]],
                    extension_modulus: d
                        .algebra
                        .modulus()
                        .coeffs()
                        .iter()
                        .map(rat_to_string)
                        .collect(),
                },
                KernelRecord {
                    pairing: vec![[1, 3], [2, 6], [4, 5]],
                    extension_modulus: d
                        .algebra
                        .modulus()
                        .coeffs()
                        .iter()
                        .map(rat_to_string)
                        .collect(),
                },
            ];
            let tag = if v == rat_int(2) {
                "v2"
            } else if v == crate::algebra::rational::rat(-4, 3) {
                "v-4/3"
            } else {
                ""
            };
            let mut published = Vec::new();
            let mut transformations = Vec::new();
            let trs = published_transformations(tag);
            if trs.len() == 2 {
                published.push(curve_to_record(&trs[0].apply(&d.c)?));
                published.push(curve_to_record(&trs[1].apply(&d.c_prime)?));
                transformations.extend(trs.iter().map(transformation_to_record));
            }
            let rec = PairRecord {
                provenance: provenance("f2", "richelot-kernel-pair", &[("v", &v)]),
                curve1: curve_to_record(&d.c),
                curve2: curve_to_record(&d.c_prime),
                splitting_class: m.to_string(),
                galois_condition: None,
                kernels,
                published_presentations: published,
                transformations,
            };
            emit(&rec, &args.out)?;
            Ok(0)
        }
        "crst" => {
            let r = parse_rat(&args.r, "r")?;
            let s = parse_rat(&args.s, "s")?;
            let t = parse_rat(&args.t, "t")?;
            let pair = gensimple_pair(&r, &s, &t)?;
            let m = crate::algebra::rational::square_class(&pair.splitting_class)
                .map_err(CurveError::Algebra)?;
            let kernels = vec![
                KernelRecord {
                    pairing: pair.pairing_a.iter().map(|&(a, b)| [a, b]).collect(),
                    extension_modulus: pair
                        .crst
                        .algebra
                        .modulus()
                        .coeffs()
                        .iter()
                        .map(rat_to_string)
                        .collect(),
                },
                KernelRecord {
                    pairing: pair.pairing_b.iter().map(|&(a, b)| [a, b]).collect(),
                    extension_modulus: pair
                        .crst
                        .algebra
                        .modulus()
                        .coeffs()
                        .iter()
                        .map(rat_to_string)
                        .collect(),
                },
            ];
            let rec = PairRecord {
                provenance: provenance(
                    "crst",
                    "gensimple-kernel-pair",
                    &[("r", &r), ("s", &s), ("t", &t)],
                ),
                curve1: curve_to_record(&pair.dual_a),
                curve2: curve_to_record(&pair.dual_b),
                splitting_class: m.to_string(),
                galois_condition: Some(true),
                kernels,
                published_presentations: Vec::new(),
                transformations: Vec::new(),
            };
            emit(&rec, &args.out)?;
            Ok(0)
        }
        "g3" => {
            let t = parse_rat(&args.t, "t")?;
            let pair = genus3_pair(&t)?;
            let octic = match hyperelliptic_octic_model(&t, args.height) {
                Ok(m) => Some(OcticRecord {
                    genus: 3,
                    delta: rat_to_string(&m.delta),
                    f: m.octic.coeffs().iter().map(rat_to_string).collect(),
                    ring: RingDesc::Rational,
                }),
                Err(CurveError::NoRationalPoint(_)) => None,
                Err(e) => return Err(e),
            };
            let cubic = |k: usize| -> Vec<String> {
                vec![
                    "0".to_string(),
                    rat_to_string(&pair.b_coeff[k]),
                    rat_to_string(&pair.a_coeff[k]),
                    "1".to_string(),
                ]
            };
            let rec = Genus3PairRecord {
                provenance: provenance("g3", "hyperelliptic-vs-quartic-pair", &[("t", &t)]),
                quartic: quartic_to_record(&pair.quartic),
                octic,
                elliptic_cubics: [cubic(0), cubic(1), cubic(2)],
                twisting_values: [
                    rat_to_string(&pair.twist),
                    rat_to_string(&pair.twist_prime),
                ],
            };
            emit(&rec, &args.out)?;
            Ok(0)
        }
        other => Err(input_err(format!("unknown family {other}"))),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CurveError> {
    let text = std::fs::read_to_string(&args.pair)
        .map_err(|e| input_err(format!("{}: {e}", args.pair.display())))?;
    // try genus-2 pair first, then genus-3
    if let Ok(rec) = serde_json::from_str::<PairRecord>(&text) {
        if rec.curve1.genus == 2 {
            return verify_genus2_record(rec, &args);
        }
    }
    let rec: Genus3PairRecord = serde_json::from_str(&text)
        .map_err(|e| input_err(format!("unrecognized pair record: {e}")))?;
    verify_genus3_record(rec, &args)
}

fn verify_genus2_record(rec: PairRecord, args: &VerifyArgs) -> Result<i32, CurveError> {
    let c1 = record_to_curve(&rec.curve1)?;
    let c2 = record_to_curve(&rec.curve2)?;
    let m = rat_from_str(&rec.splitting_class).map_err(CurveError::Algebra)?;
    let cert: Certificate = if args.primes.is_empty() {
        crate::cert::verify_genus2_pair(
            rec.provenance,
            &c1,
            &c2,
            &m,
            rec.galois_condition,
            rec.transformations,
            args.max_prime,
        )?
    } else {
        // explicit prime list: run the bound at max+1 then filter
        let bound = args.primes.iter().max().copied().unwrap_or(3) + 1;
        let mut cert = crate::cert::verify_genus2_pair(
            rec.provenance,
            &c1,
            &c2,
            &m,
            rec.galois_condition,
            rec.transformations,
            bound,
        )?;
        cert.frobenius_pairs.retain(|f| args.primes.contains(&f.p));
        cert
    };
    emit(&cert, &args.out)?;
    let ok = cert.igusa_distinct && cert.frobenius_pairs.iter().all(|f| f.matched);
    Ok(if ok { 0 } else { 1 })
}

fn verify_genus3_record(rec: Genus3PairRecord, args: &VerifyArgs) -> Result<i32, CurveError> {
    let t = rec
        .provenance
        .parameters
        .get("t")
        .ok_or_else(|| input_err("genus-3 record missing parameter t"))
        .and_then(|s| rat_from_str(s).map_err(|e| input_err(e)))?;
    let _ = record_to_quartic(&rec.quartic)?;
    let octic_model = match &rec.octic {
        None => None,
        Some(o) => {
            let delta = rat_from_str(&o.delta).map_err(CurveError::Algebra)?;
            let mut coeffs = Vec::new();
            for s in &o.f {
                coeffs.push(rat_from_str(s).map_err(CurveError::Algebra)?);
            }
            Some(crate::genus3::OcticModel {
                delta,
                octic: crate::algebra::poly::Poly::new(coeffs),
                base_point: (0, 0, 0),
            })
        }
    };
    let primes: Vec<u64> = if args.primes.is_empty() {
        vec![11, 13, 17]
    } else {
        args.primes.clone()
    };
    let mut checks = Vec::new();
    let mut all = true;
    for p in primes {
        let check = verify_genus3_lpoly(&t, p, octic_model.as_ref())?;
        all = all && check.all_equal;
        checks.push(Genus3LpolyRecord {
            p,
            quartic: frobenius_to_record(&check.quartic),
            elliptic_product: frobenius_to_record(&check.elliptic_product),
            octic: check.octic.as_ref().map(frobenius_to_record),
            all_equal: check.all_equal,
        });
    }
    let cert = Genus3Certificate {
        pair: "g3-pair".into(),
        provenance: rec.provenance,
        lpoly_checks: checks,
        evidence_kind: "lpoly-equality-necessary-condition".into(),
    };
    emit(&cert, &args.out)?;
    Ok(if all { 0 } else { 1 })
}

fn cmd_reproduce() -> Result<i32, CurveError> {
    let reports = reproduce_all();
    let mut failures = 0;
    for r in &reports {
        if r.ok {
            println!("ok   {}", r.name);
        } else {
            println!("FAIL {}: {}", r.name, r.detail);
            failures += 1;
        }
    }
    println!("{} of {} items reproduced", reports.len() - failures, reports.len());
    Ok(if failures == 0 { 0 } else { 1 })
}

fn cmd_surface(args: SurfaceArgs) -> Result<i32, CurveError> {
    let s0 = rat_from_str(&args.s0).map_err(|e| input_err(format!("--s0: {e}")))?;
    let (r, s, t) = surface_triple(&s0, args.n, args.add_t)?;
    let triple = TripleRecord {
        r: rat_to_string(&r),
        s: rat_to_string(&s),
        t: rat_to_string(&t),
        origin: TripleOrigin { s0: rat_to_string(&s0), n: args.n, add_t: args.add_t },
    };
    // downstream pair; excluded parameters surface as exit 3
    let g = galois_condition(&r, &s, &t)?;
    let pair = gensimple_pair(&r, &s, &t)?;
    #[derive(Serialize)]
    struct SurfaceOutput {
        triple: TripleRecord,
        galois_condition: bool,
        curve1: CurveRecord,
        curve2: CurveRecord,
        splitting_class: String,
    }
    let m = crate::algebra::rational::square_class(&pair.splitting_class)
        .map_err(CurveError::Algebra)?;
    let out = SurfaceOutput {
        triple,
        galois_condition: g.is_square,
        curve1: curve_to_record(&pair.dual_a),
        curve2: curve_to_record(&pair.dual_b),
        splitting_class: m.to_string(),
    };
    emit(&out, &args.out)?;
    Ok(0)
}

fn cmd_rcert() -> Result<i32, CurveError> {
    let cert = crate::igusa::r_certificate().map_err(CurveError::Algebra)?;
    #[derive(Serialize)]
    struct RCertOut {
        two_exponent: u32,
        three_exponent: u32,
        eleven_exponent: u32,
        residual_cofactor: String,
        gcd_f3: Vec<String>,
        gcd_f11: Vec<String>,
        gcd_f11_factors: Vec<Vec<String>>,
        odd_part_is_3_48_11_8: bool,
    }
    let fp_poly = |p: &crate::algebra::poly::Poly<crate::algebra::fp::Fp>| -> Vec<String> {
        p.coeffs().iter().map(|c| c.v.to_string()).collect()
    };
    let ok = cert.three_exponent == 48
        && cert.eleven_exponent == 8
        && cert.residual_cofactor == BigInt::from(1);
    let out = RCertOut {
        two_exponent: cert.two_exponent,
        three_exponent: cert.three_exponent,
        eleven_exponent: cert.eleven_exponent,
        residual_cofactor: cert.residual_cofactor.to_string(),
        gcd_f3: fp_poly(&cert.gcd_f3),
        gcd_f11: fp_poly(&cert.gcd_f11),
        gcd_f11_factors: cert.gcd_f11_factors.iter().map(fp_poly).collect(),
        odd_part_is_3_48_11_8: ok,
    };
    emit(&out, &None)?;
    Ok(if ok { 0 } else { 1 })
}
