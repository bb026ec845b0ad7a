//! Exact arithmetic and ideal theory for the quadratic ring Z[sqrt(-5)].
//!
//! The ring Z[sqrt(-5)] is the standard first example of non-unique
//! factorization (6 = 2·3 = (1−√−5)(1+√−5)), yet every element factors into
//! the *same number* of irreducibles along every route: the ring is
//! half-factorial. This crate makes that story computable:
//!
//! - [`elem`]: elements a + b·sqrt(d) with exact norms, traces, conjugation
//!   and discriminants, for any squarefree d ≡ 2, 3 (mod 4);
//! - [`ideal`]: nonzero ideals as canonical Hermite-normal-form lattices
//!   with membership, multiplication and norms;
//! - [`class_group`]: the explicit inverse construction I·conj(I) = ⟨f⟩,
//!   exact division, principality search, and the two-element class group;
//! - [`primes`]: the inert/ramified/split law and unique prime-ideal
//!   factorization;
//! - [`factorize`]: irreducibility certificates, enumeration and counting of
//!   all irreducible factorizations, the closed η_{X₃} counting formula, and
//!   a brute-force divisor-search oracle;
//! - [`hilbert`]: the Hilbert monoid {1 + 4k}, a second half-factorial
//!   system sharing the same pairing engine;
//! - [`selftest`]: deterministic invariant sweeps.
//!
//! All arithmetic is 128-bit and checked; nothing is floating-point.
//!
//! ```
//! use quadring::{factorize, QuadInt};
//!
//! let six = QuadInt::zm5(6, 0);
//! let factorizations = factorize::enumerate_factorizations(&six)?;
//! assert_eq!(factorizations.len(), 2);
//! assert_eq!(factorizations[0].to_string(), "2 * 3");
//! assert_eq!(
//!     factorizations[1].to_string(),
//!     "(1-1*sqrt(-5)) * (1+1*sqrt(-5))"
//! );
//! // every factorization of a fixed element has the same length
//! assert_eq!(factorize::factorization_length(&six)?, 2);
//! # Ok::<(), quadring::Error>(())
//! ```

mod arith;
pub mod class_group;
pub mod elem;
pub mod error;
pub mod factorize;
pub mod hilbert;
pub mod ideal;
pub mod pairing;
pub mod primes;
pub mod selftest;

pub use class_group::{IdealClass, InversePair};
pub use elem::QuadInt;
pub use error::{Error, ErrorKind, Result};
pub use factorize::{Factorization, IrreducibilityCertificate};
pub use hilbert::HilbertElement;
pub use ideal::QuadIdeal;
pub use primes::{PrimeFactor, PrimeFactorization, SplitType};
