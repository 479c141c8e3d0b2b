//! Exact arithmetic kernel: rationals, prime and prime-power fields,
//! univariate polynomials, fraction fields, etale algebras, factorization,
//! squareness tests, real-root counting and modular resultants.

pub mod etale;
pub mod factor;
pub mod field;
pub mod fp;
pub mod fq;
pub mod frac;
pub mod intops;
pub mod poly;
pub mod rational;
pub mod realroots;
pub mod squares;
pub mod zres;

pub use etale::{Etale, EtaleCtx, EtaleElem};
pub use field::{FactorableField, Field};
pub use fp::Fp;
pub use fq::{Fq, FqCtx};
pub use frac::{Fr, RatFn};
pub use poly::Poly;
pub use rational::Rat;
