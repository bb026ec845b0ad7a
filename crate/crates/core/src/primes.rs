//! Classification of rational primes in Z[sqrt(-5)] and unique factorization
//! of nonzero ideals into prime ideals.
//!
//! A rational prime is ramified (p ∈ {2, 5}), split (p ≡ 1, 3, 7, 9 mod 20)
//! or inert (everything else). The unique factorization of an ideal is
//! recovered by factoring its norm over Z, factoring each ⟨p⟩, and reading
//! exponents off as valuations.

use crate::arith::isqrt;
use crate::class_group::{ideal_class, ideal_divide, IdealClass};
use crate::elem::QuadInt;
use crate::error::{Error, Result};
use crate::ideal::QuadIdeal;
use std::fmt;

/// Norms beyond this are refused by trial-division factoring by default.
pub const DEFAULT_FACTOR_BOUND: i128 = 100_000_000;

/// How a rational prime p decomposes in Z[sqrt(-5)]: ⟨p⟩ stays prime,
/// becomes a prime square, or splits into two distinct primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitType {
    Inert,
    Ramified,
    Split,
}

impl fmt::Display for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitType::Inert => write!(f, "inert"),
            SplitType::Ramified => write!(f, "ramified"),
            SplitType::Split => write!(f, "split"),
        }
    }
}

/// One entry of a prime-ideal factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactor {
    pub ideal: QuadIdeal,
    pub exponent: u32,
    pub class: IdealClass,
}

/// A multiset of (prime ideal, exponent) pairs with class labels, sorted by
/// (norm, a, b, c), whose product reconstructs the factored ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    d: i128,
    factors: Vec<PrimeFactor>,
}

impl PrimeFactorization {
    fn new(d: i128, mut factors: Vec<PrimeFactor>) -> Self {
        factors.sort_by_key(|f| f.ideal.sort_key());
        PrimeFactorization { d, factors }
    }

    pub fn factors(&self) -> &[PrimeFactor] {
        &self.factors
    }

    /// Total number of prime ideal factors counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.factors.iter().map(|f| f.exponent as u64).sum()
    }

    /// Prime factors with multiplicity, split by class:
    /// (principal, nonprincipal).
    pub fn multiplicity_by_class(&self) -> (u64, u64) {
        let mut principal = 0;
        let mut nonprincipal = 0;
        for f in &self.factors {
            match f.class {
                IdealClass::Principal => principal += f.exponent as u64,
                IdealClass::NonPrincipal => nonprincipal += f.exponent as u64,
            }
        }
        (principal, nonprincipal)
    }

    /// Multiplies the factorization back together.
    pub fn product(&self) -> Result<QuadIdeal> {
        let mut acc = QuadIdeal::one(self.d)?;
        for f in &self.factors {
            for _ in 0..f.exponent {
                acc = acc.mul(&f.ideal)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "[1, 0+1*sqrt({})]", self.d);
        }
        for (idx, pf) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{}", pf.ideal)?;
            if pf.exponent > 1 {
                write!(f, "^{}", pf.exponent)?;
            }
        }
        Ok(())
    }
}

/// Primality of a rational integer by trial division.
pub fn is_rational_prime(p: i128) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// Inert / ramified / split decision for a rational prime, by the residue of
/// p mod 20 (ramified exactly at 2 and 5).
pub fn classify_prime(p: i128) -> Result<SplitType> {
    if !is_rational_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 || p == 5 {
        return Ok(SplitType::Ramified);
    }
    Ok(match p % 20 {
        1 | 3 | 7 | 9 => SplitType::Split,
        _ => SplitType::Inert,
    })
}

/// Smallest t in [1, p−1] with t² ≡ −5 (mod p), by exhaustive scan; None
/// exactly when p is inert.
pub fn sqrt_neg5_mod(p: i128) -> Result<Option<i128>> {
    if !is_rational_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 || p == 5 {
        return Err(Error::Domain(format!("square root of -5 mod {p} requires p odd, p != 5")));
    }
    let target = (-5i128).rem_euclid(p);
    for t in 1..p {
        if (t * t) % p == target {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// The prime-ideal factorization of ⟨p⟩ for a rational prime p.
///
/// Ramified: ⟨2⟩ = ⟨2, 1+sqrt(-5)⟩², ⟨5⟩ = ⟨sqrt(-5)⟩².
/// Split: ⟨p⟩ = ⟨p, t+sqrt(-5)⟩·⟨p, t−sqrt(-5)⟩ with t² ≡ −5 (mod p).
/// Inert: ⟨p⟩ itself is prime.
pub fn factor_rational_prime(p: i128) -> Result<PrimeFactorization> {
    let split = classify_prime(p)?;
    let factors = match split {
        SplitType::Ramified => {
            let ideal = if p == 2 {
                QuadIdeal::from_generators(&[QuadInt::zm5(2, 0), QuadInt::zm5(1, 1)])?
            } else {
                QuadIdeal::principal(&QuadInt::zm5(0, 1))?
            };
            let class = ideal_class(&ideal)?;
            vec![PrimeFactor { ideal, exponent: 2, class }]
        }
        SplitType::Split => {
            let t = sqrt_neg5_mod(p)?.ok_or_else(|| {
                Error::Domain(format!("p = {p}: mod-20 splitting rule and root scan disagree"))
            })?;
            let rational = QuadInt::zm5(p, 0);
            let first = QuadIdeal::from_generators(&[rational, QuadInt::zm5(t, 1)])?;
            let second = QuadIdeal::from_generators(&[rational, QuadInt::zm5(t, -1)])?;
            debug_assert_ne!(first, second);
            let mut pair = vec![first, second];
            pair.sort();
            pair.into_iter()
                .map(|ideal| {
                    let class = ideal_class(&ideal)?;
                    Ok(PrimeFactor { ideal, exponent: 1, class })
                })
                .collect::<Result<Vec<_>>>()?
        }
        SplitType::Inert => {
            let ideal = QuadIdeal::principal(&QuadInt::zm5(p, 0))?;
            vec![PrimeFactor { ideal, exponent: 1, class: IdealClass::Principal }]
        }
    };
    Ok(PrimeFactorization::new(-5, factors))
}

/// True iff I is a prime ideal: its norm is a rational prime, or its norm is
/// p² for an inert prime p with I = ⟨p⟩.
pub fn is_prime_ideal(i: &QuadIdeal) -> Result<bool> {
    if i.d() != -5 {
        return Err(Error::UnsupportedRing { d: i.d() });
    }
    let n = i.norm();
    if is_rational_prime(n) {
        return Ok(true);
    }
    let p = isqrt(n);
    if p * p == n
        && is_rational_prime(p)
        && classify_prime(p)? == SplitType::Inert
        && i.hnf() == (p, 0, p)
    {
        return Ok(true);
    }
    Ok(false)
}

/// The exponent of the prime ideal P in I: the number of times P divides
/// I exactly.
pub fn ideal_valuation(i: &QuadIdeal, p: &QuadIdeal) -> Result<u32> {
    let mut current = *i;
    let mut v = 0;
    while let Ok(next) = ideal_divide(&current, p) {
        current = next;
        v += 1;
    }
    Ok(v)
}

/// Unique prime-ideal factorization of a nonzero ideal, with the default
/// trial-division bound on the norm.
pub fn factor_ideal(i: &QuadIdeal) -> Result<PrimeFactorization> {
    factor_ideal_with_bound(i, DEFAULT_FACTOR_BOUND)
}

/// As [`factor_ideal`], refusing norms beyond `bound` with a capacity error.
pub fn factor_ideal_with_bound(i: &QuadIdeal, bound: i128) -> Result<PrimeFactorization> {
    if i.d() != -5 {
        return Err(Error::UnsupportedRing { d: i.d() });
    }
    let n = i.norm();
    if n > bound {
        return Err(Error::Capacity { value: n, bound });
    }
    let mut factors: Vec<PrimeFactor> = Vec::new();
    for p in rational_prime_factors(n) {
        for candidate in factor_rational_prime(p)?.factors {
            let exponent = ideal_valuation(i, &candidate.ideal)?;
            if exponent > 0 {
                factors.push(PrimeFactor { exponent, ..candidate });
            }
        }
    }
    let factorization = PrimeFactorization::new(-5, factors);
    if factorization.product()? != *i {
        return Err(Error::Domain(format!(
            "prime factorization failed to reconstruct {i}"
        )));
    }
    Ok(factorization)
}

/// Distinct rational primes dividing n, ascending, by trial division.
fn rational_prime_factors(n: i128) -> Vec<i128> {
    let mut rest = n.abs();
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            primes.push(p);
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    primes
}
